#include "pbc/sponge.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pbc {

namespace {

void xor_prefix(BitString& state, const BitString& block, std::size_t offset = 0) {
  state.xor_at(offset, block);
}

BitString squeeze(const Permutation& f, BitString& state, std::size_t rate, std::size_t out_bits) {
  BitString out;
  while (true) {
    const std::size_t take = std::min(rate, out_bits - out.size());
    out.append(state.slice(0, take));
    if (out.size() == out_bits) {
      return out;
    }
    state = f(state);
  }
}

}  // namespace

SpongeParams::SpongeParams(Permutation f, PaddingRule pad, std::size_t rate_bits)
    : m_f(std::move(f)), m_pad(std::move(pad)), m_rate(rate_bits) {
  if (!m_pad) {
    throw std::invalid_argument("sponge: missing padding rule");
  }
  if (rate_bits < 8 || rate_bits % 8 != 0 || rate_bits > m_f.width()) {
    throw std::invalid_argument("sponge: rate must be a positive multiple of 8 not exceeding the width");
  }
}

SpongeParams SpongeParams::with_permutation(Permutation f) const {
  if (f.width() != m_f.width()) {
    throw std::invalid_argument("sponge: replacement permutation has a different width");
  }
  return SpongeParams(std::move(f), m_pad, m_rate);
}

SpongeParams keccak_sponge_params(std::size_t rate_bits, std::size_t capacity_bits) {
  return SpongeParams(keccak_f_permutation(rate_bits + capacity_bits), pad10star1, rate_bits);
}

BitString sponge(const SpongeParams& params, const BitString& message, std::size_t out_bits) {
  const std::size_t r = params.rate();
  const Permutation& f = params.permutation();
  const BitString padded = apply_padding(params.padding(), message, r);
  if (padded.size() == 0 || padded.size() % r != 0) {
    throw std::logic_error("sponge: padding rule did not produce whole blocks");
  }
  BitString state(params.width());
  for (std::size_t offset = 0; offset < padded.size(); offset += r) {
    xor_prefix(state, padded.slice(offset, r));
    state = f(state);
  }
  if (out_bits == 0) {
    return {};
  }
  return squeeze(f, state, r, out_bits);
}

BitString sponge(const SpongeParams& params, std::span<const std::uint8_t> message, std::size_t out_bits) {
  return sponge(params, BitString(message), out_bits);
}

Bytes keccak_rc_hash(std::size_t rate_bits, std::size_t capacity_bits, std::span<const std::uint8_t> message,
                     std::size_t out_bits) {
  const std::size_t width = rate_bits + capacity_bits;
  KeccakState state = KeccakState::for_width(width);
  const std::size_t w = state.lane_width();
  if (w < 8 || rate_bits == 0 || rate_bits % w != 0 || rate_bits > width) {
    throw std::invalid_argument("keccak_rc_hash: rate must be a nonzero multiple of the lane size");
  }
  const std::size_t lane_bytes = w / 8;
  const std::size_t rate_lanes = rate_bits / w;
  const std::size_t block_bytes = rate_bits / 8;

  // P = M || 0x01 || 0x00 .. 0x00, then 0x80 xored into the last byte.
  Bytes padded(message.begin(), message.end());
  padded.push_back(0x01);
  while (padded.size() % block_bytes != 0) {
    padded.push_back(0x00);
  }
  padded.back() ^= 0x80;

  auto read_lane = [&](std::size_t offset) {
    std::uint64_t lane = 0;
    for (std::size_t k = 0; k < lane_bytes; ++k) {
      lane |= std::uint64_t{padded[offset + k]} << (8 * k);
    }
    return lane;
  };

  for (std::size_t block = 0; block < padded.size(); block += block_bytes) {
    for (unsigned y = 0; y < 5; ++y) {
      for (unsigned x = 0; x < 5; ++x) {
        if (x + 5 * y < rate_lanes) {
          state(x, y) ^= read_lane(block + (x + 5 * y) * lane_bytes);
        }
      }
    }
    state = keccak_f(state);
  }

  const std::size_t out_bytes = (out_bits + 7) / 8;
  Bytes out;
  out.reserve(out_bytes);
  while (out.size() < out_bytes) {
    for (unsigned i = 0; i < rate_lanes && out.size() < out_bytes; ++i) {
      const std::uint64_t lane = state(i % 5, i / 5);
      for (std::size_t k = 0; k < lane_bytes && out.size() < out_bytes; ++k) {
        out.push_back(static_cast<std::uint8_t>(lane >> (8 * k)));
      }
    }
    if (out.size() < out_bytes) {
      state = keccak_f(state);
    }
  }
  if (out_bits % 8 != 0) {
    out.back() &= static_cast<std::uint8_t>((1u << (out_bits % 8)) - 1);
  }
  return out;
}

BitString outer_keyed_sponge(const SpongeParams& params, const BitString& key, const BitString& message,
                             std::size_t out_bits) {
  return sponge(params, concat(key, message), out_bits);
}

BitString even_mansour(const Permutation& f, const BitString& key, const BitString& block) {
  if (key.size() != f.width() || block.size() != f.width()) {
    throw std::invalid_argument("even_mansour: key and block must be exactly b bits");
  }
  BitString x = block;
  xor_prefix(x, key);
  BitString y = f(x);
  xor_prefix(y, key);
  return y;
}

BitString inner_keyed_sponge(const SpongeParams& params, const BitString& key, const BitString& message,
                             std::size_t out_bits) {
  const Permutation& f = params.permutation();
  if (key.size() != f.width()) {
    throw std::invalid_argument("inner_keyed_sponge: key must be exactly b bits");
  }
  Permutation keyed(
      f.width(),
      [f, key](std::span<std::uint8_t> state) {
        const BitString out = even_mansour(f, key, BitString(state, f.width()));
        std::copy(out.bytes().begin(), out.bytes().end(), state.begin());
      },
      "EM[" + f.name() + "]");
  return sponge(params.with_permutation(std::move(keyed)), message, out_bits);
}

BitString fks(const KeyedSpongeParams& params, const BitString& message, std::size_t out_bits) {
  const SpongeParams& base = params.base;
  const std::size_t b = base.width();
  const std::size_t k = params.key.size();
  if (k > base.capacity()) {
    throw std::invalid_argument("fks: key longer than the capacity");
  }
  const Permutation& f = base.permutation();
  BitString state(b);
  xor_prefix(state, params.key, b - k);

  const BitString padded = apply_padding(pad10star, message, b);
  for (std::size_t offset = 0; offset < padded.size(); offset += b) {
    xor_prefix(state, padded.slice(offset, b));
    state = f(state);
  }
  if (out_bits == 0) {
    return {};
  }
  return squeeze(f, state, base.rate(), out_bits);
}

}  // namespace pbc
