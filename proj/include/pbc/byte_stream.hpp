#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pbc/bit_string.hpp"

namespace pbc {

/// In-memory byte stream: put() appends, get() reads sequentially from a
/// cursor. Plaintext, ciphertext, metadata, tags and SUVs all travel in these.
class ByteStream {
 public:
  ByteStream() = default;
  explicit ByteStream(std::span<const std::uint8_t> contents) : m_buffer(contents.begin(), contents.end()) {}

  /// Throws std::out_of_range when the stream is exhausted.
  std::uint8_t get();
  void put(std::uint8_t byte) { m_buffer.push_back(byte); }
  void put(std::span<const std::uint8_t> bytes) { m_buffer.insert(m_buffer.end(), bytes.begin(), bytes.end()); }
  bool has_more() const { return m_cursor < m_buffer.size(); }

  /// Moves the read cursor to `position` (<= size()).
  void seek(std::size_t position);
  /// Empties the buffer and rewinds.
  void erase();

  std::size_t size() const { return m_buffer.size(); }
  std::size_t position() const { return m_cursor; }
  std::size_t remaining() const { return m_buffer.size() - m_cursor; }
  const Bytes& contents() const { return m_buffer; }

 private:
  Bytes m_buffer;
  std::size_t m_cursor = 0;
};

}  // namespace pbc
