#include <doctest.h>

#include <optional>

#include "pbc/motorist.hpp"
#include "phase_model.hpp"
#include "support.hpp"

using namespace pbc;

namespace {

MotoristParams lake_like(std::size_t pi) { return {PermutationSpec(1600, 12), pi, 64, 256, 128}; }

struct Pair {
  Motorist sender;
  Motorist receiver;
};

Pair started(const MotoristParams& params, const Bytes& suv) {
  Pair p{Motorist(params), Motorist(params)};
  ByteStream s1(suv);
  ByteStream s2(suv);
  ByteStream t;
  REQUIRE(p.sender.start_engine(s1, false, t, false, false));
  REQUIRE(p.receiver.start_engine(s2, false, t, true, false));
  return p;
}

struct Sealed {
  Bytes ct;
  Bytes tag;
};

Sealed seal(Motorist& m, const Bytes& pt, const Bytes& ad, bool forget = false) {
  ByteStream in(pt);
  ByteStream a(ad);
  ByteStream out;
  ByteStream t;
  REQUIRE(m.wrap(in, out, a, t, false, forget));
  return {out.contents(), t.contents()};
}

std::optional<Bytes> unseal(Motorist& m, const Sealed& s, const Bytes& ad, bool forget = false) {
  ByteStream in(s.ct);
  ByteStream a(ad);
  ByteStream out;
  ByteStream t(s.tag);
  if (!m.wrap(in, out, a, t, true, forget)) {
    CHECK(out.size() == 0);
    return std::nullopt;
  }
  return out.contents();
}

}  // namespace

TEST_SUITE("motorist") {
  TEST_CASE("derive_rates known values") {
    CHECK(derive_rates(1600, 64, 256) == MotoristRates{168, 192, 256});
    CHECK(derive_rates(800, 32, 256) == MotoristRates{68, 96, 256});
    CHECK(derive_rates(1600, 64, 64).chaining_bits == 64);
    CHECK(derive_rates(1600, 64, 200).chaining_bits == 256);
    CHECK_THROWS(derive_rates(1600, 12, 256));
    CHECK_THROWS(derive_rates(200, 8, 256));
  }

  TEST_CASE("derive_rates matches a literal search") {
    for (std::size_t b : {200, 400, 800, 1600}) {
      for (std::size_t w : {8, 16, 32, 64}) {
        for (std::size_t c = 32; c < b; c += 8) {
          CAPTURE(b);
          CAPTURE(w);
          CAPTURE(c);
          const MotoristRates expected = test::brute_force_rates(b, w, c);
          if (expected.squeeze_rate == 0) {
            CHECK_THROWS(derive_rates(b, w, c));
          } else {
            CHECK(derive_rates(b, w, c) == expected);
          }
        }
      }
    }
  }

  TEST_CASE("parameter validation") {
    CHECK_NOTHROW(Motorist(lake_like(1)));
    CHECK_THROWS(Motorist({PermutationSpec(1600, 12), 1, 64, 256, 100}));
    CHECK_THROWS(Motorist({PermutationSpec(1600, 12), 1, 64, 256, 8 * 169}));
    CHECK_THROWS(Motorist({PermutationSpec(1600, 12), 0, 64, 256, 128}));
  }

  TEST_CASE("start without tag") {
    Motorist m(lake_like(1));
    CHECK(m.phase() == MotoristPhase::kReady);
    ByteStream suv(test::random_bytes(50));
    ByteStream t;
    CHECK(m.start_engine(suv, false, t, false, false));
    CHECK(m.phase() == MotoristPhase::kRiding);
    CHECK(t.size() == 0);
    ByteStream again;
    CHECK_THROWS_AS(m.start_engine(again, false, t, false, false), PhaseError);
  }

  TEST_CASE("start tag verifies on the peer") {
    for (bool forget : {false, true}) {
      const Bytes suv = test::random_bytes(100);
      Motorist a(lake_like(2));
      Motorist b(lake_like(2));
      ByteStream s1(suv);
      ByteStream s2(suv);
      ByteStream t;
      CHECK(a.start_engine(s1, true, t, false, forget));
      CHECK(t.size() == 16);
      t.seek(0);
      CHECK(b.start_engine(s2, true, t, true, forget));
      CHECK(b.phase() == MotoristPhase::kRiding);

      Motorist c(lake_like(2));
      ByteStream s3(suv);
      Bytes bad = t.contents();
      bad[5] ^= 0x10;
      ByteStream tb(bad);
      CHECK_FALSE(c.start_engine(s3, true, tb, true, forget));
      CHECK(c.phase() == MotoristPhase::kFailed);
    }
  }

  TEST_CASE("empty message") {
    Pair p = started(lake_like(1), test::random_bytes(30));
    const Sealed s = seal(p.sender, {}, {});
    CHECK(s.ct.empty());
    CHECK(s.tag.size() == 16);
    CHECK(unseal(p.receiver, s, {}) == Bytes{});
  }

  TEST_CASE("round trip over lengths and parallelism") {
    for (std::size_t pi : {1, 2, 4}) {
      Pair p = started(lake_like(pi), test::random_bytes(60));
      for (std::size_t len : {std::size_t{0}, std::size_t{1}, std::size_t{167}, std::size_t{168}, std::size_t{169},
                              pi * 168, pi * 168 + 1, std::size_t{1000}}) {
        const Bytes pt = test::random_bytes(len);
        const Bytes ad = test::random_bytes(test::random_size(0, 300));
        const bool forget = test::random_size(0, 1) == 1;
        const Sealed s = seal(p.sender, pt, ad, forget);
        CHECK(s.ct.size() == pt.size());
        CHECK(unseal(p.receiver, s, ad, forget) == pt);
      }
    }
  }

  TEST_CASE("tampering fails and is absorbing") {
    Pair p = started(lake_like(1), test::random_bytes(40));
    Sealed s = seal(p.sender, test::random_bytes(50), test::random_bytes(10));
    s.ct[3] ^= 0x01;
    CHECK_FALSE(unseal(p.receiver, s, {}).has_value());
    CHECK(p.receiver.phase() == MotoristPhase::kFailed);
    ByteStream in;
    ByteStream out;
    ByteStream a;
    ByteStream t;
    CHECK_THROWS_AS(p.receiver.wrap(in, out, a, t, true, false), PhaseError);
    CHECK_THROWS_AS(p.receiver.wrap(in, out, a, t, false, false), PhaseError);
    ByteStream suv;
    CHECK_THROWS_AS(p.receiver.start_engine(suv, false, t, false, false), PhaseError);
  }

  TEST_CASE("wrap before start") {
    Motorist m(lake_like(1));
    ByteStream in(Bytes{1});
    ByteStream out;
    ByteStream a;
    ByteStream t;
    CHECK_THROWS_AS(m.wrap(in, out, a, t, false, false), PhaseError);
    CHECK(in.position() == 0);
  }

  TEST_CASE("session order") {
    for (int trial = 0; trial < 20; ++trial) {
      const Bytes suv = test::random_bytes(50);
      Pair p = started(lake_like(1), suv);
      const Bytes m1 = test::random_bytes(test::random_size(0, 300));
      const Bytes m2 = test::random_bytes(test::random_size(0, 300));
      const Sealed c1 = seal(p.sender, m1, {});
      const Sealed c2 = seal(p.sender, m2, {});
      CHECK(unseal(p.receiver, c1, {}) == m1);
      CHECK(unseal(p.receiver, c2, {}) == m2);

      Pair q = started(lake_like(1), suv);
      CHECK_FALSE(unseal(q.receiver, c2, {}).has_value());
    }
  }

  TEST_CASE("forget changes the state") {
    for (int trial = 0; trial < 1000; ++trial) {
      const Bytes suv = test::random_bytes(20);
      Pair p = started(lake_like(1), suv);
      const Bytes pt = test::random_bytes(test::random_size(0, 40));
      CHECK(seal(p.sender, pt, {}, true).tag != seal(p.receiver, pt, {}, false).tag);
    }
  }

  TEST_CASE("knot couples the pistons") {
    for (int trial = 0; trial < 100; ++trial) {
      const Bytes suv = test::random_bytes(30);
      Pair p = started(lake_like(2), suv);
      // Flip a byte piston 0 never sees through absorption.
      p.receiver.engine().piston(1).mutable_state()[test::random_size(196, 199)] ^= 0x01;
      CHECK(seal(p.sender, {}, {}).tag != seal(p.receiver, {}, {}).tag);
    }
    // Without a knot the tag of piston 0 would be blind to piston 1.
    Motorist single(lake_like(1));
    Motorist dual(lake_like(2));
    ByteStream s1(Bytes(10, 7));
    ByteStream s2(Bytes(10, 7));
    ByteStream t;
    single.start_engine(s1, false, t, false, false);
    dual.start_engine(s2, false, t, false, false);
    CHECK(seal(single, Bytes(100, 1), {}).tag != seal(dual, Bytes(100, 1), {}).tag);
  }

  TEST_CASE("constant_time_equal") {
    CHECK(constant_time_equal(Bytes{1, 2}, Bytes{1, 2}));
    CHECK_FALSE(constant_time_equal(Bytes{1, 2}, Bytes{1, 3}));
    CHECK_FALSE(constant_time_equal(Bytes{1, 2}, Bytes{1}));
    CHECK(constant_time_equal(Bytes{}, Bytes{}));
  }

  TEST_CASE("model-based phase fuzz") {
    const auto report = test::fuzz_motorist(2, 1000);
    INFO(report.first_violation);
    CHECK(report.violations == 0);
    CHECK(report.rejected > 0);
  }
}
