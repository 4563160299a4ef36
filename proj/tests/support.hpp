#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pbc/bit_string.hpp"
#include "pbc/duplex.hpp"
#include "pbc/keccak_p.hpp"
#include "pbc/motorist.hpp"
#include "pbc/sponge.hpp"
#include "pbc/testkit/bit_oracle.hpp"

namespace pbc::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x6b6579616b);
  return engine;
}

inline Bytes random_bytes(std::size_t n) {
  Bytes out(n);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(rng()());
  }
  return out;
}

inline std::size_t random_size(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline BitString random_bits(std::size_t n) {
  BitString out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, rng()() & 1);
  }
  return out;
}

inline KeccakState random_state(unsigned width_log) {
  return KeccakState::from_bits(random_bits(state_bits(width_log)));
}

inline testkit::BitState to_oracle(const KeccakState& s) {
  return testkit::from_packed(s.to_bits().to_bytes(), s.width_log());
}

inline KeccakState from_oracle(const testkit::BitState& s) {
  return KeccakState::from_bits(BitString(testkit::to_packed(s), s.width()));
}


/// Duplexing lemma oracle: output i of a duplex object equals the sponge of
/// pad(s_0) || ... || pad(s_{i-1}) || s_i truncated to l_i bits.
inline std::vector<BitString> duplex_via_sponge(const SpongeParams& params, const std::vector<BitString>& inputs,
                                                const std::vector<std::size_t>& out_bits) {
  std::vector<BitString> outputs;
  BitString prefix;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    outputs.push_back(sponge(params, concat(prefix, inputs[i]), out_bits[i]));
    prefix.append(apply_padding(params.padding(), inputs[i], params.rate()));
  }
  return outputs;
}


/// Literal search over every multiple of W for the rate predicates.
inline MotoristRates brute_force_rates(std::size_t b, std::size_t w, std::size_t c) {
  MotoristRates r{0, 0, 0};
  for (std::size_t bits = 0; bits <= b; bits += w) {
    if (b - bits >= std::max<std::size_t>(c, 32)) r.squeeze_rate = bits / 8;
    if (b - bits >= 32) r.absorb_rate = bits / 8;
  }
  for (std::size_t bits = 0; r.chaining_bits == 0; bits += w) {
    if (bits >= c) r.chaining_bits = bits;
  }
  return r;
}

}  // namespace pbc::test
