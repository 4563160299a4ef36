#include "vector_file.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

#include "pbc/hex.hpp"
#include "pbc/sponge.hpp"

namespace pbc::cli {

namespace {

constexpr std::array<std::string_view, 8> kFields{"Instance", "Key", "Nonce", "AD", "PT", "CT", "Tag", "Forget"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t pick(std::uint8_t lo, std::uint8_t hi, std::size_t bound) {
  return (std::size_t{lo} | std::size_t{hi} << 8) % (bound + 1);
}

}  // namespace

void write_vectors(std::ostream& out, const std::vector<VectorRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i != 0) {
      out << '\n';
    }
    out << "Instance: " << r.instance << '\n'
        << "Key: " << to_hex(r.key) << '\n'
        << "Nonce: " << to_hex(r.nonce) << '\n'
        << "AD: " << to_hex(r.ad) << '\n'
        << "PT: " << to_hex(r.pt) << '\n'
        << "CT: " << to_hex(r.ct) << '\n'
        << "Tag: " << to_hex(r.tag) << '\n'
        << "Forget: " << (r.forget ? 1 : 0) << '\n';
  }
}

std::vector<VectorRecord> read_vectors(std::istream& in) {
  std::vector<VectorRecord> records;
  VectorRecord current;
  std::size_t seen = 0;  // fields read for the current record
  std::size_t line_number = 0;
  std::string line;

  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_number) + ": " + what);
  };
  auto flush = [&] {
    if (seen == 0) {
      return;
    }
    if (seen != kFields.size()) {
      fail("incomplete record");
    }
    records.push_back(current);
    current = {};
    seen = 0;
  };

  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view text = trim(line);
    if (text.empty()) {
      flush();
      continue;
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      fail("expected 'Field: value'");
    }
    const std::string_view name = trim(text.substr(0, colon));
    const std::string_view value = trim(text.substr(colon + 1));
    if (seen >= kFields.size() || name != kFields[seen]) {
      fail("expected field " + std::string(seen < kFields.size() ? kFields[seen] : "<blank line>"));
    }
    try {
      switch (seen) {
        case 0: current.instance = std::string(value); break;
        case 1: current.key = from_hex(value); break;
        case 2: current.nonce = from_hex(value); break;
        case 3: current.ad = from_hex(value); break;
        case 4: current.pt = from_hex(value); break;
        case 5: current.ct = from_hex(value); break;
        case 6: current.tag = from_hex(value); break;
        case 7:
          if (value != "0" && value != "1") {
            fail("Forget must be 0 or 1");
          }
          current.forget = value == "1";
          break;
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    ++seen;
  }
  flush();
  return records;
}

VectorRecord derive_vector(const KeyakInstance& instance, std::span<const std::uint8_t> seed, std::uint32_t index) {
  Bytes input(seed.begin(), seed.end());
  for (int k = 0; k < 4; ++k) {
    input.push_back(static_cast<std::uint8_t>(index >> (8 * k)));
  }
  auto xof = [&](std::size_t n) { return keccak_rc_hash(1088, 512, input, 8 * n); };

  const MotoristRates rates = instance.rates();
  const Bytes header = xof(8);
  const std::size_t key_len = 16 + header[0] % (instance.max_key_bytes() - 16 + 1);
  const std::size_t nonce_len = pick(header[1], 0, rates.absorb_rate - instance.key_pack_length() - 2);
  const std::size_t ad_len = pick(header[2], header[3], 2 * rates.absorb_rate);
  const std::size_t pt_len = pick(header[4], header[5], 2 * instance.parallelism() * rates.squeeze_rate + 1);
  const bool forget = header[6] & 1;

  const Bytes stream = xof(8 + key_len + nonce_len + ad_len + pt_len);
  auto take = [&, at = std::size_t{8}](std::size_t n) mutable {
    Bytes out(stream.begin() + static_cast<std::ptrdiff_t>(at), stream.begin() + static_cast<std::ptrdiff_t>(at + n));
    at += n;
    return out;
  };

  VectorRecord record;
  record.instance = instance.name();
  record.key = take(key_len);
  record.nonce = take(nonce_len);
  record.ad = take(ad_len);
  record.pt = take(pt_len);
  record.forget = forget;
  const Ciphertext sealed = aead_encrypt(instance, record.key, record.nonce, record.ad, record.pt, forget);
  record.ct = sealed.ciphertext;
  record.tag = sealed.tag;
  return record;
}

bool verify_vector(const VectorRecord& record) {
  const auto instance = KeyakInstance::by_name(record.instance);
  if (!instance) {
    return false;
  }
  try {
    const Ciphertext sealed = aead_encrypt(*instance, record.key, record.nonce, record.ad, record.pt, record.forget);
    if (sealed.ciphertext != record.ct || sealed.tag != record.tag) {
      return false;
    }
    const auto opened = aead_decrypt(*instance, record.key, record.nonce, record.ad, record.ct, record.tag, record.forget);
    return opened && *opened == record.pt;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace pbc::cli
