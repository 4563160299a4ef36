#include "pbc/keyak.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "pbc/padding.hpp"

namespace pbc {

namespace {

constexpr unsigned kKeyakRounds = 12;
constexpr std::size_t kKeyakCapacity = 256;
constexpr std::size_t kKeyakTag = 128;

}  // namespace

KeyakInstance::KeyakInstance(std::string name, std::size_t width_bits, unsigned rounds, std::size_t parallelism,
                             std::size_t capacity_bits, std::size_t tag_bits)
    : m_name(std::move(name)),
      m_width(width_bits),
      m_rounds(rounds),
      m_parallelism(parallelism),
      m_capacity(capacity_bits),
      m_tag_bits(tag_bits) {
  // Validates width, round count and rates.
  Motorist probe(motorist_params());
  if (key_pack_length() > 255) {
    throw std::invalid_argument("Keyak: key pack length exceeds 255 bytes");
  }
}

KeyakInstance KeyakInstance::river() { return {"River", 800, kKeyakRounds, 1, kKeyakCapacity, kKeyakTag}; }
KeyakInstance KeyakInstance::lake() { return {"Lake", 1600, kKeyakRounds, 1, kKeyakCapacity, kKeyakTag}; }
KeyakInstance KeyakInstance::sea() { return {"Sea", 1600, kKeyakRounds, 2, kKeyakCapacity, kKeyakTag}; }
KeyakInstance KeyakInstance::ocean() { return {"Ocean", 1600, kKeyakRounds, 4, kKeyakCapacity, kKeyakTag}; }
KeyakInstance KeyakInstance::lunar() { return {"Lunar", 1600, kKeyakRounds, 8, kKeyakCapacity, kKeyakTag}; }

const std::vector<KeyakInstance>& KeyakInstance::named() {
  static const std::vector<KeyakInstance> instances{river(), lake(), sea(), ocean(), lunar()};
  return instances;
}

std::optional<KeyakInstance> KeyakInstance::by_name(std::string_view name) {
  for (const auto& instance : named()) {
    const auto& candidate = instance.name();
    if (candidate.size() == name.size() &&
        std::equal(candidate.begin(), candidate.end(), name.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
        })) {
      return instance;
    }
  }
  return std::nullopt;
}

KeyakInstance KeyakInstance::custom(std::string name, std::size_t width_bits, unsigned rounds,
                                    std::size_t parallelism, std::size_t capacity_bits, std::size_t tag_bits) {
  return {std::move(name), width_bits, rounds, parallelism, capacity_bits, tag_bits};
}

std::size_t KeyakInstance::alignment_bits() const { return std::max<std::size_t>(m_width / 25, 8); }

std::size_t KeyakInstance::key_pack_length() const {
  const std::size_t w = alignment_bits();
  return (w / 8) * ((m_capacity + 9 + w - 1) / w);
}

MotoristParams KeyakInstance::motorist_params() const {
  return {PermutationSpec(m_width, m_rounds), m_parallelism, alignment_bits(), m_capacity, m_tag_bits};
}

Bytes key_pack(std::span<const std::uint8_t> key, std::size_t length) {
  if (length >= 256) {
    throw std::invalid_argument("key_pack: length must be below 256");
  }
  if (1 + key.size() >= length) {
    throw std::invalid_argument("key_pack: key leaves no room for padding");
  }
  Bytes out;
  out.reserve(length);
  out.push_back(enc8(static_cast<unsigned>(length)));
  out.insert(out.end(), key.begin(), key.end());
  const BitString pad = pad10star(8 * key.size(), 8 * (length - 1));
  out.insert(out.end(), pad.bytes().begin(), pad.bytes().end());
  return out;
}

Bytes make_suv(const KeyakInstance& instance, std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce) {
  if (key.size() < 16 || key.size() > instance.max_key_bytes()) {
    throw std::invalid_argument("make_suv: key must be between 16 and l_k - 2 bytes");
  }
  Bytes suv = key_pack(key, instance.key_pack_length());
  suv.insert(suv.end(), nonce.begin(), nonce.end());
  return suv;
}

Motorist new_session(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                     std::span<const std::uint8_t> nonce, bool tag, ByteStream& tag_stream, bool unwrap, bool forget) {
  ByteStream suv(make_suv(instance, key, nonce));
  Motorist session(instance.motorist_params());
  if (!session.start_engine(suv, tag, tag_stream, unwrap, forget)) {
    throw std::runtime_error("new_session: start tag verification failed");
  }
  return session;
}

Ciphertext aead_encrypt(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> ad,
                        std::span<const std::uint8_t> plaintext, bool forget) {
  ByteStream unused;
  Motorist session = new_session(instance, key, nonce, false, unused, false, false);
  ByteStream in(plaintext);
  ByteStream metadata(ad);
  ByteStream out;
  ByteStream tag;
  session.wrap(in, out, metadata, tag, false, forget);
  return {out.contents(), tag.contents()};
}

std::optional<Bytes> aead_decrypt(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                                  std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> ad,
                                  std::span<const std::uint8_t> ciphertext, std::span<const std::uint8_t> tag,
                                  bool forget) {
  if (tag.size() != instance.tag_bytes()) {
    throw std::invalid_argument("aead_decrypt: tag must be tau/8 bytes");
  }
  ByteStream unused;
  Motorist session = new_session(instance, key, nonce, false, unused, false, false);
  ByteStream in(ciphertext);
  ByteStream metadata(ad);
  ByteStream out;
  ByteStream tag_stream(tag);
  if (!session.wrap(in, out, metadata, tag_stream, true, forget)) {
    return std::nullopt;
  }
  return out.contents();
}

}  // namespace pbc
