#include "pbc/motorist.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pbc {

MotoristRates derive_rates(std::size_t width_bits, std::size_t alignment_bits, std::size_t capacity_bits) {
  if (alignment_bits == 0 || alignment_bits % 8 != 0) {
    throw std::invalid_argument("derive_rates: W must be a positive multiple of 8 bits");
  }
  if (width_bits % 8 != 0 || capacity_bits == 0) {
    throw std::invalid_argument("derive_rates: width must be byte aligned and capacity positive");
  }
  const std::size_t reserved_out = std::max<std::size_t>(capacity_bits, 32);
  if (width_bits <= reserved_out) {
    throw std::invalid_argument("derive_rates: capacity leaves no squeeze rate");
  }
  const std::size_t squeeze = (width_bits - reserved_out) / alignment_bits * alignment_bits;
  const std::size_t absorb = (width_bits - 32) / alignment_bits * alignment_bits;
  const std::size_t chaining = (capacity_bits + alignment_bits - 1) / alignment_bits * alignment_bits;
  if (squeeze == 0) {
    throw std::invalid_argument("derive_rates: W too large for the available rate");
  }
  return {squeeze / 8, absorb / 8, chaining};
}

std::string to_string(MotoristPhase phase) {
  switch (phase) {
    case MotoristPhase::kReady:
      return "ready";
    case MotoristPhase::kRiding:
      return "riding";
    case MotoristPhase::kFailed:
      return "failed";
  }
  return "unknown";
}

bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff |= static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  return diff == 0;
}

namespace {

MotoristRates checked_rates(const MotoristParams& p) {
  const MotoristRates rates = p.rates();
  if (p.tag_bits % 8 != 0 || p.tag_bits / 8 > rates.squeeze_rate) {
    throw std::invalid_argument("Motorist: tag length must be whole bytes and fit the squeeze rate");
  }
  if (rates.chaining_bits / 8 > rates.squeeze_rate) {
    throw std::invalid_argument("Motorist: chaining value does not fit the squeeze rate");
  }
  return rates;
}

}  // namespace

Motorist::Motorist(const MotoristParams& params)
    : m_params(params),
      m_rates(checked_rates(params)),
      m_engine(keccak_p_permutation(params.permutation), params.parallelism, m_rates.squeeze_rate,
               m_rates.absorb_rate) {}

bool Motorist::start_engine(ByteStream& suv, bool tag, ByteStream& tag_stream, bool unwrap, bool forget) {
  if (m_phase != MotoristPhase::kReady) {
    throw PhaseError("Motorist::start_engine not allowed in phase " + to_string(m_phase));
  }
  m_engine.inject_collective(suv, true);
  if (forget) {
    make_knot();
  }
  const bool ok = handle_tag(tag, tag_stream, unwrap);
  if (ok) {
    m_phase = MotoristPhase::kRiding;
  }
  return ok;
}

bool Motorist::wrap(ByteStream& in, ByteStream& out, ByteStream& metadata, ByteStream& tag_stream, bool unwrap,
                    bool forget) {
  if (m_phase != MotoristPhase::kRiding) {
    throw PhaseError("Motorist::wrap not allowed in phase " + to_string(m_phase));
  }
  if (!in.has_more() && !metadata.has_more()) {
    m_engine.inject(metadata);
  }
  while (in.has_more()) {
    m_engine.crypt(in, out, unwrap);
    m_engine.inject(metadata);
  }
  while (metadata.has_more()) {
    m_engine.inject(metadata);
  }
  if (m_params.parallelism > 1 || forget) {
    make_knot();
  }
  const bool ok = handle_tag(true, tag_stream, unwrap);
  if (!ok) {
    out.erase();
  }
  return ok;
}

void Motorist::make_knot() {
  ByteStream chaining;
  m_engine.get_tags(chaining, std::vector<std::size_t>(m_params.parallelism, m_rates.chaining_bits / 8));
  chaining.seek(0);
  m_engine.inject_collective(chaining, false);
}

bool Motorist::handle_tag(bool tag, ByteStream& tag_stream, bool unwrap) {
  ByteStream computed;
  std::vector<std::size_t> lengths(m_params.parallelism, 0);
  if (!tag) {
    m_engine.get_tags(computed, lengths);
    return true;
  }
  lengths[0] = m_params.tag_bits / 8;
  m_engine.get_tags(computed, lengths);
  if (!unwrap) {
    tag_stream.put(computed.contents());
    return true;
  }
  Bytes expected;
  while (expected.size() < lengths[0] && tag_stream.has_more()) {
    expected.push_back(tag_stream.get());
  }
  if (!constant_time_equal(computed.contents(), expected)) {
    m_phase = MotoristPhase::kFailed;
    return false;
  }
  return true;
}

}  // namespace pbc
