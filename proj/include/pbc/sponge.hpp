#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pbc/bit_string.hpp"
#include "pbc/keccak_p.hpp"
#include "pbc/padding.hpp"

namespace pbc {

/// Sponge[f, pad, r]. The capacity is whatever f leaves after the rate.
class SpongeParams {
 public:
  /// Throws std::invalid_argument unless 8 <= rate <= b and rate is a multiple of 8.
  SpongeParams(Permutation f, PaddingRule pad, std::size_t rate_bits);

  const Permutation& permutation() const { return m_f; }
  const PaddingRule& padding() const { return m_pad; }
  std::size_t rate() const { return m_rate; }
  std::size_t capacity() const { return m_f.width() - m_rate; }
  std::size_t width() const { return m_f.width(); }

  SpongeParams with_permutation(Permutation f) const;

 private:
  Permutation m_f;
  PaddingRule m_pad;
  std::size_t m_rate;
};

/// Keccak[r, c] parameters: Keccak-f[r + c] with pad10*1.
SpongeParams keccak_sponge_params(std::size_t rate_bits, std::size_t capacity_bits);

/// Absorbs pad(M) r bits at a time, then squeezes `out_bits` bits.
BitString sponge(const SpongeParams& params, const BitString& message, std::size_t out_bits);
BitString sponge(const SpongeParams& params, std::span<const std::uint8_t> message, std::size_t out_bits);

/// The byte-oriented Keccak[r, c] sponge over lanes. Requires r to be a
/// multiple of the lane width and b = r + c in {200, ..., 1600}. The result is
/// ceil(out_bits / 8) bytes; bits past out_bits in the last byte are zero.
Bytes keccak_rc_hash(std::size_t rate_bits, std::size_t capacity_bits, std::span<const std::uint8_t> message,
                     std::size_t out_bits);

/// Sponge(K || M).
BitString outer_keyed_sponge(const SpongeParams& params, const BitString& key, const BitString& message,
                             std::size_t out_bits);

/// f(x xor K) xor K. Key and block must both be exactly b bits.
BitString even_mansour(const Permutation& f, const BitString& key, const BitString& block);

/// Sponge using the Even-Mansour cipher keyed with the b-bit `key` as permutation.
BitString inner_keyed_sponge(const SpongeParams& params, const BitString& key, const BitString& message,
                             std::size_t out_bits);

struct KeyedSpongeParams {
  SpongeParams base;
  BitString key;  // k <= c bits, placed in the last k bits of the state
};

/// Full-state keyed sponge: absorbs pad10*-padded b-bit blocks, squeezes r bits at a time.
BitString fks(const KeyedSpongeParams& params, const BitString& message, std::size_t out_bits);

}  // namespace pbc
