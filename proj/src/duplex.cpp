#include "pbc/duplex.hpp"

#include <stdexcept>
#include <utility>

namespace pbc {

namespace {

std::size_t compute_max_rate(const PaddingRule& pad, std::size_t rate) {
  for (std::size_t m = rate; m-- > 0;) {
    if (m + pad(m, rate).size() == rate) {
      return m;
    }
  }
  throw std::invalid_argument("duplex: padding rule cannot fit any input in one block");
}

}  // namespace

Duplex::Duplex(SpongeParams params)
    : m_params(std::move(params)),
      m_max_rate(compute_max_rate(m_params.padding(), m_params.rate())),
      m_state(m_params.width()) {}

BitString Duplex::duplexing(const BitString& sigma, std::size_t out_bits) {
  if (sigma.size() > m_max_rate) {
    throw std::invalid_argument("duplexing: input exceeds the maximum duplex rate");
  }
  if (out_bits > m_params.rate()) {
    throw std::invalid_argument("duplexing: requested output exceeds the rate");
  }
  m_state.xor_at(0, apply_padding(m_params.padding(), sigma, m_params.rate()));
  m_state = m_params.permutation()(m_state);
  return m_state.slice(0, out_bits);
}

Bytes Duplex::duplexing(std::span<const std::uint8_t> sigma, std::size_t out_bytes) {
  return duplexing(BitString(sigma), out_bytes * 8).to_bytes();
}

FullStateKeyedDuplex::FullStateKeyedDuplex(SpongeParams params, const BitString& key)
    : m_params(std::move(params)), m_state(m_params.width()) {
  if (key.size() > m_params.capacity()) {
    throw std::invalid_argument("full-state keyed duplex: key longer than the capacity");
  }
  m_state.xor_at(m_params.width() - key.size(), key);
}

FullStateKeyedDuplex::FullStateKeyedDuplex(SpongeParams params, const BitString& key, const BitString& sigma0)
    : FullStateKeyedDuplex(std::move(params), key) {
  if (sigma0.size() > m_params.width() - key.size()) {
    throw std::invalid_argument("full-state keyed duplex: sigma0 longer than the outer part");
  }
  m_state.xor_at(0, sigma0);
  m_state = m_params.permutation()(m_state);
}

FullStateKeyedDuplex FullStateKeyedDuplex::full_state_duplex(SpongeParams params, const BitString& key) {
  return FullStateKeyedDuplex(std::move(params), key);
}

BitString FullStateKeyedDuplex::duplexing(const BitString& sigma, std::size_t out_bits) {
  if (sigma.size() > max_input_bits()) {
    throw std::invalid_argument("full-state duplexing: input exceeds b - 1 bits");
  }
  if (out_bits > m_params.rate()) {
    throw std::invalid_argument("full-state duplexing: requested output exceeds the rate");
  }
  const BitString block = apply_padding(pad10star, sigma, m_params.width());
  if (block.size() != m_params.width()) {
    throw std::logic_error("full-state duplexing: padded block is not b bits");
  }
  m_state.xor_at(0, block);
  return finish(out_bits);
}

BitString FullStateKeyedDuplex::duplexing_unpadded(const BitString& sigma, std::size_t out_bits) {
  if (sigma.size() > m_params.width()) {
    throw std::invalid_argument("full-state duplexing: input exceeds b bits");
  }
  if (out_bits > m_params.rate()) {
    throw std::invalid_argument("full-state duplexing: requested output exceeds the rate");
  }
  m_state.xor_at(0, sigma);
  return finish(out_bits);
}

BitString FullStateKeyedDuplex::finish(std::size_t out_bits) {
  m_state = m_params.permutation()(m_state);
  return m_state.slice(0, out_bits);
}

}  // namespace pbc
