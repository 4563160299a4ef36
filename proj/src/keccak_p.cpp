#include "pbc/keccak_p.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pbc {

namespace {

// Rotation offsets indexed [x][y].
constexpr std::array<std::array<unsigned, 5>, 5> kRotationOffsets{{
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
}};

constexpr std::uint64_t mask_for(unsigned width_log) {
  return width_log == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << lane_bits(width_log)) - 1;
}

constexpr bool lfsr_bit(std::uint64_t t) {
  unsigned reg = 1;
  for (std::uint64_t i = 0; i < t % 255; ++i) {
    reg <<= 1;
    if (reg & 0x100) {
      reg ^= 0x171;  // x^8 + x^6 + x^5 + x^4 + 1
    }
  }
  return reg & 1;
}

// RC[i][0, 0, 2^j - 1] = rc[j + 7i]; narrower lanes keep the low bits.
constexpr std::array<std::uint64_t, 24> make_round_constants() {
  std::array<std::uint64_t, 24> table{};
  for (unsigned i = 0; i < 24; ++i) {
    for (unsigned j = 0; j <= kMaxWidthLog; ++j) {
      if (lfsr_bit(j + 7 * i)) {
        table[i] |= std::uint64_t{1} << ((1u << j) - 1);
      }
    }
  }
  return table;
}

constexpr auto kRoundConstants = make_round_constants();

}  // namespace

unsigned width_log_for(std::size_t width_bits) {
  for (unsigned l = 0; l <= kMaxWidthLog; ++l) {
    if (state_bits(l) == width_bits) {
      return l;
    }
  }
  throw std::invalid_argument("Keccak width must be one of 25, 50, 100, 200, 400, 800, 1600");
}

PermutationSpec::PermutationSpec(std::size_t width_bits, unsigned round_count)
    : width(width_bits), rounds(round_count) {
  const unsigned l = width_log_for(width_bits);
  if (round_count < 1 || round_count > full_rounds(l)) {
    throw std::invalid_argument("Keccak-p round count must be in [1, 12 + 2l]");
  }
}

PermutationSpec PermutationSpec::keccak_f(std::size_t width_bits) {
  return PermutationSpec(width_bits, full_rounds(width_log_for(width_bits)));
}

bool lfsr_rc(std::uint64_t t) { return lfsr_bit(t); }

RoundConstant round_constant(unsigned round_index, unsigned width_log) {
  if (round_index >= 24) {
    throw std::out_of_range("round constant index must be below 24");
  }
  if (width_log > kMaxWidthLog) {
    throw std::invalid_argument("width log must be at most 6");
  }
  return {kRoundConstants[round_index] & mask_for(width_log), round_index, width_log};
}

unsigned rotation_offset(unsigned x, unsigned y) {
  if (x > 4 || y > 4) {
    throw std::out_of_range("rotation offset coordinates must be in 0..4");
  }
  return kRotationOffsets[x][y];
}

KeccakState::KeccakState(unsigned width_log) : m_width_log(width_log) {
  if (width_log > kMaxWidthLog) {
    throw std::invalid_argument("width log must be at most 6");
  }
}

KeccakState KeccakState::for_width(std::size_t width_bits) {
  return KeccakState(width_log_for(width_bits));
}

std::uint64_t KeccakState::lane_mask() const { return mask_for(m_width_log); }

void KeccakState::set_lane(unsigned x, unsigned y, std::uint64_t value) {
  m_lanes[index(x, y)] = value & lane_mask();
}

bool KeccakState::bit(std::size_t global_index) const {
  const std::size_t w = lane_width();
  return (m_lanes.at(global_index / w) >> (global_index % w)) & 1;
}

void KeccakState::set_bit(std::size_t global_index, bool value) {
  const std::size_t w = lane_width();
  auto& lane = m_lanes.at(global_index / w);
  const std::uint64_t m = std::uint64_t{1} << (global_index % w);
  lane = value ? (lane | m) : (lane & ~m);
}

BitString KeccakState::to_bits() const {
  BitString out(width());
  const std::size_t w = lane_width();
  if (w >= 8) {
    Bytes bytes(width() / 8);
    for (std::size_t i = 0; i < 25; ++i) {
      for (std::size_t k = 0; k < w / 8; ++k) {
        bytes[i * (w / 8) + k] = static_cast<std::uint8_t>(m_lanes[i] >> (8 * k));
      }
    }
    return BitString(bytes);
  }
  for (std::size_t i = 0; i < width(); ++i) {
    out.set(i, bit(i));
  }
  return out;
}

KeccakState KeccakState::from_bits(const BitString& bits) {
  KeccakState state = for_width(bits.size());
  const std::size_t w = state.lane_width();
  if (w >= 8) {
    const auto bytes = bits.bytes();
    for (std::size_t i = 0; i < 25; ++i) {
      std::uint64_t lane = 0;
      for (std::size_t k = 0; k < w / 8; ++k) {
        lane |= std::uint64_t{bytes[i * (w / 8) + k]} << (8 * k);
      }
      state.m_lanes[i] = lane;
    }
    return state;
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    state.set_bit(i, bits.bit(i));
  }
  return state;
}

Bytes state_to_bytes(const KeccakState& state) {
  if (state.width() % 8 != 0) {
    throw std::invalid_argument("state_to_bytes: width is not byte aligned");
  }
  return state.to_bits().to_bytes();
}

KeccakState bytes_to_state(std::span<const std::uint8_t> bytes) {
  const std::size_t width = bytes.size() * 8;
  if (width < 200) {
    throw std::invalid_argument("bytes_to_state: width is not byte aligned");
  }
  return KeccakState::from_bits(BitString(bytes));
}

std::uint64_t rotate_lane(std::uint64_t lane, unsigned offset, unsigned width_log) {
  const unsigned w = static_cast<unsigned>(lane_bits(width_log));
  const std::uint64_t mask = mask_for(width_log);
  const unsigned r = offset % w;
  lane &= mask;
  if (r == 0) {
    return lane;
  }
  return ((lane << r) | (lane >> (w - r))) & mask;
}

void theta(KeccakState& a) {
  const unsigned l = a.width_log();
  std::array<std::uint64_t, 5> c{};
  for (unsigned x = 0; x < 5; ++x) {
    c[x] = a(x, 0) ^ a(x, 1) ^ a(x, 2) ^ a(x, 3) ^ a(x, 4);
  }
  for (unsigned x = 0; x < 5; ++x) {
    const std::uint64_t d = c[(x + 4) % 5] ^ rotate_lane(c[(x + 1) % 5], 1, l);
    for (unsigned y = 0; y < 5; ++y) {
      a(x, y) ^= d;
    }
  }
}

void rho_pi(KeccakState& a) {
  KeccakState b(a.width_log());
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      b(y, 2 * x + 3 * y) = rotate_lane(a(x, y), kRotationOffsets[x][y], a.width_log());
    }
  }
  a = b;
}

void chi(KeccakState& a) {
  const std::uint64_t mask = a.lane_mask();
  for (unsigned y = 0; y < 5; ++y) {
    std::array<std::uint64_t, 5> row{};
    for (unsigned x = 0; x < 5; ++x) {
      row[x] = a(x, y);
    }
    for (unsigned x = 0; x < 5; ++x) {
      a(x, y) = row[x] ^ ((~row[(x + 1) % 5] & mask) & row[(x + 2) % 5]);
    }
  }
}

void iota(KeccakState& a, const RoundConstant& rc) {
  if (rc.width_log != a.width_log()) {
    throw std::invalid_argument("round constant lane width does not match state");
  }
  a(0, 0) ^= rc.value;
}

KeccakState apply_round(KeccakState state, const RoundConstant& rc) {
  theta(state);
  rho_pi(state);
  chi(state);
  iota(state, rc);
  return state;
}

KeccakState keccak_p(KeccakState state, const PermutationSpec& spec) {
  if (spec.width != state.width()) {
    throw std::invalid_argument("keccak_p: permutation width does not match state");
  }
  const unsigned l = state.width_log();
  for (unsigned i = spec.first_round(); i < full_rounds(l); ++i) {
    state = apply_round(state, round_constant(i, l));
  }
  return state;
}

KeccakState keccak_f(KeccakState state) {
  const auto spec = PermutationSpec::keccak_f(state.width());
  return keccak_p(state, spec);
}

void keccak_p_packed(std::span<std::uint8_t> state, const PermutationSpec& spec) {
  if (state.size() != (spec.width + 7) / 8) {
    throw std::invalid_argument("keccak_p_packed: buffer size does not match width");
  }
  const auto permuted = keccak_p(KeccakState::from_bits(BitString(state, spec.width)), spec).to_bits();
  std::copy(permuted.bytes().begin(), permuted.bytes().end(), state.begin());
}

Permutation::Permutation(std::size_t width_bits, Function fn, std::string name)
    : m_width(width_bits), m_fn(std::move(fn)), m_name(std::move(name)) {
  if (width_bits == 0 || !m_fn) {
    throw std::invalid_argument("Permutation: empty width or function");
  }
}

void Permutation::operator()(std::span<std::uint8_t> state) const {
  if (state.size() != width_bytes()) {
    throw std::invalid_argument("Permutation: state buffer size mismatch");
  }
  m_fn(state);
}

BitString Permutation::operator()(const BitString& state) const {
  if (state.size() != m_width) {
    throw std::invalid_argument("Permutation: state length mismatch");
  }
  Bytes buffer = state.to_bytes();
  m_fn(buffer);
  return BitString(buffer, m_width);
}

Permutation keccak_p_permutation(const PermutationSpec& spec) {
  return Permutation(
      spec.width, [spec](std::span<std::uint8_t> s) { keccak_p_packed(s, spec); },
      "Keccak-p[" + std::to_string(spec.width) + "," + std::to_string(spec.rounds) + "]");
}

Permutation keccak_f_permutation(std::size_t width_bits) {
  return keccak_p_permutation(PermutationSpec::keccak_f(width_bits));
}

}  // namespace pbc
