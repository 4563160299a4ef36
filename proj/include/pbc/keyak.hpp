#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbc/bit_string.hpp"
#include "pbc/motorist.hpp"

namespace pbc {

/// Keyak[b, n_r, Pi, c, tau] = Motorist[Keccak-p[b, n_r], Pi, W, c, tau] with
/// W = max(b/25, 8). Only the five named instances are reachable without
/// going through custom().
class KeyakInstance {
 public:
  static KeyakInstance river();
  static KeyakInstance lake();
  static KeyakInstance sea();
  static KeyakInstance ocean();
  static KeyakInstance lunar();
  static const std::vector<KeyakInstance>& named();
  /// Case-insensitive lookup of "river", "lake", "sea", "ocean" or "lunar".
  static std::optional<KeyakInstance> by_name(std::string_view name);

  /// Any other parameter set. Validated through derive_rates.
  static KeyakInstance custom(std::string name, std::size_t width_bits, unsigned rounds, std::size_t parallelism,
                              std::size_t capacity_bits, std::size_t tag_bits);

  const std::string& name() const { return m_name; }
  std::size_t width() const { return m_width; }
  unsigned rounds() const { return m_rounds; }
  std::size_t parallelism() const { return m_parallelism; }
  std::size_t capacity() const { return m_capacity; }
  std::size_t tag_bits() const { return m_tag_bits; }
  std::size_t tag_bytes() const { return m_tag_bits / 8; }
  std::size_t alignment_bits() const;
  /// Key pack length l_k = (W/8) * ceil((c + 9) / W) bytes.
  std::size_t key_pack_length() const;
  std::size_t max_key_bytes() const { return key_pack_length() - 2; }

  MotoristParams motorist_params() const;
  MotoristRates rates() const { return motorist_params().rates(); }

 private:
  KeyakInstance(std::string name, std::size_t width_bits, unsigned rounds, std::size_t parallelism,
                std::size_t capacity_bits, std::size_t tag_bits);

  std::string m_name;
  std::size_t m_width;
  unsigned m_rounds;
  std::size_t m_parallelism;
  std::size_t m_capacity;
  std::size_t m_tag_bits;
};

/// enc8(l) || K || 0x01 || 0x00..., l bytes in total. Requires 1 + |K| < l < 256.
Bytes key_pack(std::span<const std::uint8_t> key, std::size_t length);

/// KeyPack(K, l_k) || N. Key must be 16..l_k - 2 bytes.
Bytes make_suv(const KeyakInstance& instance, std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce);

/// Builds the Motorist for `instance` and starts it with the SUV. Throws
/// std::runtime_error if an unwrap-side start fails tag verification.
Motorist new_session(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                     std::span<const std::uint8_t> nonce, bool tag, ByteStream& tag_stream, bool unwrap, bool forget);

struct Ciphertext {
  Bytes ciphertext;
  Bytes tag;
};

/// One-shot encryption: a fresh session, one wrap. |ciphertext| = |plaintext|.
Ciphertext aead_encrypt(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> ad,
                        std::span<const std::uint8_t> plaintext, bool forget = false);

/// Returns the plaintext, or std::nullopt when authentication fails. Parameter
/// problems (bad key size, wrong tag length) throw std::invalid_argument.
std::optional<Bytes> aead_decrypt(const KeyakInstance& instance, std::span<const std::uint8_t> key,
                                  std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> ad,
                                  std::span<const std::uint8_t> ciphertext, std::span<const std::uint8_t> tag,
                                  bool forget = false);

}  // namespace pbc
