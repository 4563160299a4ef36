#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pbc/byte_stream.hpp"
#include "pbc/keccak_p.hpp"

namespace pbc {

/// Positions of the four fragment offsets, relative to the absorb rate R_a.
struct FragmentOffset {
  static constexpr std::size_t kEndOfMessage = 0;
  static constexpr std::size_t kCryptEnd = 1;
  static constexpr std::size_t kInjectStart = 2;
  static constexpr std::size_t kInjectEnd = 3;
  static constexpr std::size_t kCount = 4;
};

/// A full-state keyed duplex that builds its own input blocks: plaintext in
/// [omega, R_s), metadata up to R_a, then the four fragment offsets.
class Piston {
 public:
  /// Requires squeeze_rate <= absorb_rate and absorb_rate + 4 <= b / 8.
  Piston(Permutation f, std::size_t squeeze_rate, std::size_t absorb_rate);

  /// En/decrypts from `in` into `out` starting at state byte `omega`, leaving
  /// the ciphertext in the state either way.
  void crypt(ByteStream& in, ByteStream& out, std::size_t omega, bool unwrap);
  /// Absorbs metadata from `in`, starting at R_s when the block already holds plaintext.
  void inject(ByteStream& in, bool crypting);
  /// Marks the end of message with the tag length (0xFF for no tag) and applies f.
  void spark(bool end_of_message, std::uint8_t tag_length);
  /// Appends the first `length` state bytes to `out`.
  void get_tag(ByteStream& out, std::size_t length) const;

  std::size_t squeeze_rate() const { return m_squeeze_rate; }
  std::size_t absorb_rate() const { return m_absorb_rate; }
  std::size_t offset_index(std::size_t which) const { return m_absorb_rate + which; }
  std::span<const std::uint8_t> state() const { return m_state; }
  /// Test hook for state-dependency experiments.
  std::span<std::uint8_t> mutable_state() { return m_state; }

 private:
  Permutation m_f;
  std::size_t m_squeeze_rate;
  std::size_t m_absorb_rate;
  Bytes m_state;
};

}  // namespace pbc
