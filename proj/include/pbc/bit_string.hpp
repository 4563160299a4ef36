#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pbc {

using Bytes = std::vector<std::uint8_t>;

/// A string of bits packed LSB-first into bytes: bit i lives in byte i/8 at
/// weight 2^(i mod 8). Unused high bits of the last byte are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t bits);
  /// Takes the first `bits` bits of `bytes` (all of them by default).
  explicit BitString(std::span<const std::uint8_t> bytes);
  BitString(std::span<const std::uint8_t> bytes, std::size_t bits);

  std::size_t size() const { return m_bits; }
  bool empty() const { return m_bits == 0; }
  bool byte_aligned() const { return m_bits % 8 == 0; }

  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  void push_back(bool value);
  void append(const BitString& other);
  void append_bytes(std::span<const std::uint8_t> bytes);

  /// XORs `other` into bits [offset, offset + other.size()).
  void xor_at(std::size_t offset, const BitString& other);

  /// Bits [begin, begin + len).
  BitString slice(std::size_t begin, std::size_t len) const;
  /// Zero-extends or truncates to `bits`.
  void resize(std::size_t bits);

  std::span<const std::uint8_t> bytes() const { return m_bytes; }
  const Bytes& to_bytes() const { return m_bytes; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void mask_tail();

  Bytes m_bytes;
  std::size_t m_bits = 0;
};

BitString concat(const BitString& a, const BitString& b);

}  // namespace pbc
