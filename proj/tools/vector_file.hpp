#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "pbc/bit_string.hpp"
#include "pbc/keyak.hpp"

namespace pbc::cli {

/// One line per field, records separated by a blank line:
///
///   Instance: Lake
///   Key: 000102...
///   Nonce: ...
///   AD: ...
///   PT: ...
///   CT: ...
///   Tag: ...
///   Forget: 0
struct VectorRecord {
  std::string instance;
  Bytes key;
  Bytes nonce;
  Bytes ad;
  Bytes pt;
  Bytes ct;
  Bytes tag;
  bool forget = false;

  friend bool operator==(const VectorRecord&, const VectorRecord&) = default;
};

void write_vectors(std::ostream& out, const std::vector<VectorRecord>& records);
/// Throws std::invalid_argument with a line number on malformed input.
std::vector<VectorRecord> read_vectors(std::istream& in);

/// Record `index` of the deterministic vector set for `seed`. Lengths and
/// contents come from Keccak[1088, 512] over seed || le32(index).
VectorRecord derive_vector(const KeyakInstance& instance, std::span<const std::uint8_t> seed, std::uint32_t index);

/// Recomputes ct and tag and checks that unwrapping succeeds.
bool verify_vector(const VectorRecord& record);

}  // namespace pbc::cli
