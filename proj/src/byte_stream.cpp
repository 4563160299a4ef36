#include "pbc/byte_stream.hpp"

#include <stdexcept>

namespace pbc {

std::uint8_t ByteStream::get() {
  if (!has_more()) {
    throw std::out_of_range("ByteStream::get on exhausted stream");
  }
  return m_buffer[m_cursor++];
}

void ByteStream::seek(std::size_t position) {
  if (position > m_buffer.size()) {
    throw std::out_of_range("ByteStream::seek past end of stream");
  }
  m_cursor = position;
}

void ByteStream::erase() {
  m_buffer.clear();
  m_cursor = 0;
}

}  // namespace pbc
