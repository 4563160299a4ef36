#include <doctest.h>

#include "pbc/hex.hpp"
#include "pbc/sponge.hpp"
#include "pbc/testkit/bit_oracle.hpp"
#include "support.hpp"

using namespace pbc;

namespace {

constexpr const char* kKeccak256Empty = "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470";

Permutation oracle_keccak_f(std::size_t width) {
  const unsigned l = width_log_for(width);
  return Permutation(
      width,
      [l](std::span<std::uint8_t> s) {
        const auto out = testkit::to_packed(
            testkit::oracle_permutation(testkit::from_packed(Bytes(s.begin(), s.end()), l), 12 + 2 * l));
        std::copy(out.begin(), out.end(), s.begin());
      },
      "oracle");
}

// Zeroes the outer r bits and fills the rest with ones.
Permutation capacity_marker(std::size_t width, std::size_t rate) {
  return Permutation(
      width,
      [width, rate](std::span<std::uint8_t> s) {
        BitString state(width);
        for (std::size_t i = rate; i < width; ++i) state.set(i, true);
        std::copy(state.bytes().begin(), state.bytes().end(), s.begin());
      },
      "marker");
}

}  // namespace

TEST_SUITE("sponge_core") {
  TEST_CASE("Keccak[1088,512] empty message through the oracle permutation") {
    const SpongeParams oracle_params(oracle_keccak_f(1600), pad10star1, 1088);
    CHECK(to_hex(sponge(oracle_params, BitString(), 256).bytes()) == kKeccak256Empty);
    CHECK(to_hex(sponge(keccak_sponge_params(1088, 512), BitString(), 256).bytes()) == kKeccak256Empty);
    CHECK(to_hex(keccak_rc_hash(1088, 512, {}, 256)) == kKeccak256Empty);
  }

  TEST_CASE("keccak_rc_hash equals the generic sponge") {
    for (int trial = 0; trial < 100; ++trial) {
      const bool wide = trial % 2 == 0;
      const std::size_t rate = wide ? 1088 : 544;
      const std::size_t cap = wide ? 512 : 256;
      const Bytes m = test::random_bytes(test::random_size(0, 400));
      const std::size_t out = 8 * test::random_size(0, 300);
      CHECK(keccak_rc_hash(rate, cap, m, out) == sponge(keccak_sponge_params(rate, cap), m, out).to_bytes());
    }
    CHECK_THROWS(keccak_rc_hash(1000, 600, {}, 256));
    CHECK(keccak_rc_hash(1088, 512, Bytes{0x00}, 256) != keccak_rc_hash(1088, 512, Bytes{0x01}, 256));
  }

  TEST_CASE("output length zero still absorbs") {
    CHECK(sponge(keccak_sponge_params(1088, 512), Bytes{1, 2, 3}, 0).empty());
  }

  TEST_CASE("output prefix consistency") {
    const auto params = keccak_sponge_params(576, 1024);
    const Bytes m = test::random_bytes(77);
    const BitString longer = sponge(params, m, 3000);
    for (std::size_t n : {0, 1, 7, 576, 577, 1500, 3000}) {
      CHECK(sponge(params, m, n) == longer.slice(0, n));
    }
  }

  TEST_CASE("one-bit message differences change the digest") {
    const auto params = keccak_sponge_params(1088, 512);
    for (int trial = 0; trial < 1000; ++trial) {
      BitString m = test::random_bits(test::random_size(1, 200));
      const BitString d1 = sponge(params, m, 128);
      m.flip(test::random_size(0, m.size() - 1));
      CHECK(sponge(params, m, 128) != d1);
    }
  }

  TEST_CASE("capacity bits never reach the output") {
    const SpongeParams params(capacity_marker(800, 544), pad10star1, 544);
    const BitString out = sponge(params, test::random_bytes(300), 544 * 5);
    for (std::size_t i = 0; i < out.size(); ++i) {
      REQUIRE_FALSE(out.bit(i));
    }
  }

  TEST_CASE("rate validation") {
    CHECK_THROWS(SpongeParams(keccak_f_permutation(1600), pad10star1, 1087));
    CHECK_THROWS(SpongeParams(keccak_f_permutation(1600), pad10star1, 0));
    CHECK_THROWS(SpongeParams(keccak_f_permutation(1600), pad10star1, 1608));
  }

  TEST_CASE("outer keyed sponge") {
    const auto params = keccak_sponge_params(1088, 512);
    const BitString m = test::random_bits(333);
    CHECK(outer_keyed_sponge(params, BitString(), m, 256) == sponge(params, m, 256));
    const BitString k = test::random_bits(128);
    CHECK(outer_keyed_sponge(params, k, m, 256) == sponge(params, concat(k, m), 256));
    for (int trial = 0; trial < 20; ++trial) {
      BitString k2 = k;
      k2.flip(test::random_size(0, 127));
      CHECK(outer_keyed_sponge(params, k, m, 256) != outer_keyed_sponge(params, k2, m, 256));
    }
  }

  TEST_CASE("even mansour") {
    const Permutation f = keccak_f_permutation(200);
    const BitString x = test::random_bits(200);
    CHECK(even_mansour(f, BitString(200), x) == f(x));
    for (int trial = 0; trial < 20; ++trial) {
      const BitString k = test::random_bits(200);
      const BitString block = test::random_bits(200);
      BitString expected = block;
      expected.xor_at(0, k);
      expected = f(expected);
      expected.xor_at(0, k);
      CHECK(even_mansour(f, k, block) == expected);
      CHECK(even_mansour(f, k, even_mansour(f, k, block)) != block);
    }
    CHECK_THROWS(even_mansour(f, BitString(199), x));
  }

  TEST_CASE("inner keyed sponge") {
    const auto params = keccak_sponge_params(136, 64);
    const BitString m = test::random_bits(90);
    CHECK(inner_keyed_sponge(params, BitString(200), m, 300) == sponge(params, m, 300));
    const BitString k = test::random_bits(200);
    CHECK(inner_keyed_sponge(params, k, m, 300) == inner_keyed_sponge(params, k, m, 300));
    CHECK(inner_keyed_sponge(params, k, m, 300) != outer_keyed_sponge(params, k, m, 300));
    CHECK_THROWS(inner_keyed_sponge(params, BitString(128), m, 300));
  }

  TEST_CASE("full-state keyed sponge") {
    const auto base = keccak_sponge_params(1088, 512);
    const Permutation& f = base.permutation();
    const BitString key = test::random_bits(256);

    // Manual trace: key in the last k bits, pad10*(0, b) = 1 0^1599 xored, f.
    BitString state(1600);
    state.xor_at(1600 - 256, key);
    BitString block(1600);
    block.set(0, true);
    state.xor_at(0, block);
    state = f(state);
    CHECK(fks({base, key}, BitString(), 1088) == state.slice(0, 1088));

    // One full zero block then the pad block.
    BitString trace(1600);
    trace.xor_at(1600 - 256, key);
    trace = f(trace);
    trace.xor_at(0, block);
    trace = f(trace);
    CHECK(fks({base, key}, BitString(1600), 1088) == trace.slice(0, 1088));

    CHECK_NOTHROW(fks({base, test::random_bits(512)}, BitString(), 8));
    CHECK_THROWS(fks({base, test::random_bits(513)}, BitString(), 8));

    // k = 0 is a full-width-absorbing unkeyed sponge.
    const SpongeParams full_width(keccak_f_permutation(1600), pad10star, 1600);
    const BitString m = test::random_bits(2000);
    CHECK(fks({base, BitString()}, m, 1088) == sponge(full_width, m, 1088));
  }
}
