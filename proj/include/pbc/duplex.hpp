#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pbc/bit_string.hpp"
#include "pbc/sponge.hpp"

namespace pbc {

/// Duplex[f, pad, r]. Each call pads sigma into one r-bit block, xors it into
/// the outer part, applies f and returns the first l bits.
class Duplex {
 public:
  explicit Duplex(SpongeParams params);

  /// Largest |sigma| that pads to exactly one r-bit block.
  std::size_t max_duplex_rate() const { return m_max_rate; }
  std::size_t max_duplex_rate_bytes() const { return m_max_rate / 8; }

  /// Empty sigma is a blank call; l = 0 is a mute call.
  BitString duplexing(const BitString& sigma, std::size_t out_bits);
  Bytes duplexing(std::span<const std::uint8_t> sigma, std::size_t out_bytes);

  const BitString& state() const { return m_state; }
  const SpongeParams& params() const { return m_params; }

 private:
  SpongeParams m_params;
  std::size_t m_max_rate;
  BitString m_state;
};

/// Full-state keyed duplex. The key occupies the last k bits of the state.
class FullStateKeyedDuplex {
 public:
  /// Inner k bits <- key, outer b - k bits <- sigma0 (zero-extended), then f.
  FullStateKeyedDuplex(SpongeParams params, const BitString& key, const BitString& sigma0);

  /// Full-state duplex sponge initialization: key in the inner part, zero
  /// outer part, no permutation applied yet.
  static FullStateKeyedDuplex full_state_duplex(SpongeParams params, const BitString& key);

  /// Largest |sigma| accepted by duplexing(): b - 1, leaving room for pad10*.
  std::size_t max_input_bits() const { return m_params.width() - 1; }

  /// Pads sigma with pad10* to b bits, xors it over the whole state, applies f
  /// and returns the first l <= r bits.
  BitString duplexing(const BitString& sigma, std::size_t out_bits);

  /// Xors up to b bits of sigma into the state without padding, applies f and
  /// returns the first l <= r bits.
  BitString duplexing_unpadded(const BitString& sigma, std::size_t out_bits);

  const BitString& state() const { return m_state; }

 private:
  FullStateKeyedDuplex(SpongeParams params, const BitString& key);
  BitString finish(std::size_t out_bits);

  SpongeParams m_params;
  BitString m_state;
};

}  // namespace pbc
