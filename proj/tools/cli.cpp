#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pbc/hex.hpp"
#include "pbc/keccak_p.hpp"
#include "pbc/keyak.hpp"
#include "pbc/sponge.hpp"
#include "pbc/testkit/bit_oracle.hpp"
#include "vector_file.hpp"

namespace pbc::cli {

namespace {

/// I/O problems map to exit code 1 like usage errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bytes read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open " + path);
  }
  return Bytes(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, std::span<const std::uint8_t> data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !file.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()))) {
    throw IoError("cannot write " + path);
  }
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(c);
    }
  }
  return out;
}

KeyakInstance lookup_instance(const std::string& name) {
  auto instance = KeyakInstance::by_name(name);
  if (!instance) {
    throw std::invalid_argument("unknown instance '" + name + "' (expected river, lake, sea, ocean or lunar)");
  }
  return *instance;
}

struct HashOptions {
  std::size_t rate = 1088;
  std::size_t capacity = 512;
  std::size_t bits = 256;
  std::string input;
};

int cmd_hash(const HashOptions& o, std::istream& in, std::ostream& out) {
  const std::size_t width = o.rate + o.capacity;
  if (width != 800 && width != 1600) {
    throw std::invalid_argument("rate + capacity must be 800 or 1600");
  }
  if (o.rate == 0 || o.rate % 8 != 0 || o.rate >= width) {
    throw std::invalid_argument("rate must be a positive multiple of 8 below the width");
  }
  const Bytes message = read_input(o.input, in);
  Bytes digest;
  if (o.rate % lane_bits(width_log_for(width)) == 0) {
    digest = keccak_rc_hash(o.rate, o.capacity, message, o.bits);
  } else {
    digest = sponge(keccak_sponge_params(o.rate, o.capacity), message, o.bits).to_bytes();
  }
  out << to_hex(digest) << '\n';
  return kSuccess;
}

struct AeadOptions {
  std::string instance;
  std::string key;
  std::string nonce;
  std::string ad_file;
  std::string input;
  std::string output;
  std::string tag;
  std::string tag_out;
  bool forget = false;
  bool tag_append = false;
};

int cmd_wrap(const AeadOptions& o, std::istream& in, std::ostream& out) {
  const KeyakInstance instance = lookup_instance(o.instance);
  const Bytes key = from_hex(o.key);
  const Bytes nonce = from_hex(o.nonce);
  const Bytes ad = o.ad_file.empty() ? Bytes{} : read_input(o.ad_file, in);
  const Bytes plaintext = read_input(o.input, in);

  const Ciphertext sealed = aead_encrypt(instance, key, nonce, ad, plaintext, o.forget);
  Bytes body = sealed.ciphertext;
  if (o.tag_append) {
    body.insert(body.end(), sealed.tag.begin(), sealed.tag.end());
  }
  write_output(o.output, body, out);
  const std::string tag_hex = to_hex(sealed.tag);
  if (!o.tag_out.empty()) {
    const std::string line = tag_hex + "\n";
    write_output(o.tag_out, std::span(reinterpret_cast<const std::uint8_t*>(line.data()), line.size()), out);
  }
  if (!o.output.empty() && o.output != "-") {
    out << tag_hex << '\n';
  }
  return kSuccess;
}

int cmd_unwrap(const AeadOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const KeyakInstance instance = lookup_instance(o.instance);
  const Bytes key = from_hex(o.key);
  const Bytes nonce = from_hex(o.nonce);
  const Bytes ad = o.ad_file.empty() ? Bytes{} : read_input(o.ad_file, in);
  Bytes body = read_input(o.input, in);

  Bytes tag;
  if (o.tag_append) {
    if (!o.tag.empty()) {
      throw std::invalid_argument("--tag and --tag-append are mutually exclusive");
    }
    if (body.size() < instance.tag_bytes()) {
      throw std::invalid_argument("input shorter than the appended tag");
    }
    tag.assign(body.end() - static_cast<std::ptrdiff_t>(instance.tag_bytes()), body.end());
    body.resize(body.size() - instance.tag_bytes());
  } else {
    if (o.tag.empty()) {
      throw std::invalid_argument("unwrap needs --tag or --tag-append");
    }
    tag = from_hex(strip_whitespace(o.tag));
  }

  const auto plaintext = aead_decrypt(instance, key, nonce, ad, body, tag, o.forget);
  if (!plaintext) {
    err << "authentication failed\n";
    return kVerifyFailure;
  }
  write_output(o.output, *plaintext, out);
  return kSuccess;
}

struct VectorOptions {
  std::string instance;
  std::size_t count = 8;
  std::string seed;
  std::string output;
  std::string check;
};

int cmd_vectors(const VectorOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!o.check.empty()) {
    const Bytes text = read_input(o.check, in);
    std::istringstream stream(std::string(text.begin(), text.end()));
    const auto records = read_vectors(stream);
    int status = kSuccess;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!verify_vector(records[i])) {
        err << "record " << i << " (" << records[i].instance << "): verification failed\n";
        status = kVerifyFailure;
      }
    }
    if (status == kSuccess) {
      out << records.size() << " records verified\n";
    }
    return status;
  }
  if (o.instance.empty() || o.seed.empty()) {
    throw std::invalid_argument("vectors needs --instance and --seed (or --check FILE)");
  }
  const KeyakInstance instance = lookup_instance(o.instance);
  const Bytes seed = from_hex(o.seed);
  std::vector<VectorRecord> records;
  records.reserve(o.count);
  for (std::size_t i = 0; i < o.count; ++i) {
    records.push_back(derive_vector(instance, seed, static_cast<std::uint32_t>(i)));
  }
  std::ostringstream text;
  write_vectors(text, records);
  const std::string s = text.str();
  write_output(o.output, std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()), out);
  return kSuccess;
}

struct PermOptions {
  std::size_t width = 1600;
  std::optional<unsigned> rounds;
  bool oracle = false;
  bool trace = false;
};

int cmd_perm(const PermOptions& o, std::istream& in, std::ostream& out) {
  const unsigned l = width_log_for(o.width);
  const PermutationSpec spec(o.width, o.rounds.value_or(full_rounds(l)));

  const std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
  const Bytes input = from_hex(strip_whitespace(text));
  if (input.size() != (o.width + 7) / 8) {
    throw std::invalid_argument("state must be " + std::to_string((o.width + 7) / 8) + " bytes of hex");
  }
  const BitString bits(input, o.width);
  if (bits.to_bytes() != input) {
    throw std::invalid_argument("state has bits set beyond the permutation width");
  }

  if (o.oracle) {
    testkit::BitState state = testkit::from_packed(input, l);
    for (unsigned i = spec.first_round(); i < full_rounds(l); ++i) {
      state = testkit::oracle_round(state, i);
      if (o.trace) {
        out << "round " << i << " " << to_hex(testkit::to_packed(state)) << '\n';
      }
    }
    out << to_hex(testkit::to_packed(state)) << '\n';
    return kSuccess;
  }

  KeccakState state = KeccakState::from_bits(bits);
  for (unsigned i = spec.first_round(); i < full_rounds(l); ++i) {
    if (!o.trace) {
      state = apply_round(state, round_constant(i, l));
      continue;
    }
    theta(state);
    out << "round " << i << " theta " << to_hex(state.to_bits().bytes()) << '\n';
    rho_pi(state);
    out << "round " << i << " rho-pi " << to_hex(state.to_bits().bytes()) << '\n';
    chi(state);
    out << "round " << i << " chi " << to_hex(state.to_bits().bytes()) << '\n';
    iota(state, round_constant(i, l));
    out << "round " << i << " iota " << to_hex(state.to_bits().bytes()) << '\n';
  }
  out << to_hex(state.to_bits().bytes()) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Keccak-p, sponge and Keyak toolkit", "pbc"};
  app.require_subcommand(1);

  HashOptions hash_opts;
  auto* hash = app.add_subcommand("hash", "Keccak[r,c] digest of a file or stdin");
  hash->add_option("--rate", hash_opts.rate, "Bitrate r in bits")->capture_default_str();
  hash->add_option("--capacity", hash_opts.capacity, "Capacity c in bits")->capture_default_str();
  hash->add_option("--bits", hash_opts.bits, "Output length in bits")->capture_default_str();
  hash->add_option("--in", hash_opts.input, "Input file (default stdin)");

  AeadOptions wrap_opts;
  AeadOptions unwrap_opts;
  auto add_aead = [](CLI::App* cmd, AeadOptions& o) {
    cmd->add_option("--instance", o.instance, "river, lake, sea, ocean or lunar")->required();
    cmd->add_option("--key", o.key, "Key as hex")->required();
    cmd->add_option("--nonce", o.nonce, "Nonce as hex");
    cmd->add_option("--ad", o.ad_file, "Associated data file");
    cmd->add_option("--in", o.input, "Input file (default stdin)");
    cmd->add_option("--out", o.output, "Output file (default stdout)");
    cmd->add_flag("--forget", o.forget, "Knot after the message (must match on both sides)");
    cmd->add_flag("--tag-append", o.tag_append, "Frame the cryptogram as ciphertext || tag");
  };
  auto* wrap = app.add_subcommand("wrap", "Encrypt and authenticate a file");
  add_aead(wrap, wrap_opts);
  wrap->add_option("--tag-out", wrap_opts.tag_out, "Also write the tag hex to this file");
  auto* unwrap = app.add_subcommand("unwrap", "Verify and decrypt a file");
  add_aead(unwrap, unwrap_opts);
  unwrap->add_option("--tag", unwrap_opts.tag, "Tag as hex");

  VectorOptions vec_opts;
  auto* vectors = app.add_subcommand("vectors", "Generate or check deterministic Keyak test vectors");
  vectors->add_option("--instance", vec_opts.instance, "Instance name");
  vectors->add_option("--count", vec_opts.count, "Number of records")->capture_default_str();
  vectors->add_option("--seed", vec_opts.seed, "Seed as hex");
  vectors->add_option("--out", vec_opts.output, "Output file (default stdout)");
  vectors->add_option("--check", vec_opts.check, "Verify an existing vector file");

  PermOptions perm_opts;
  auto* perm = app.add_subcommand("perm", "Apply Keccak-p to a hex state read from stdin");
  perm->add_option("--width", perm_opts.width, "Permutation width b")->capture_default_str();
  perm->add_option("--rounds", perm_opts.rounds, "Round count n_r (default 12 + 2l)");
  perm->add_flag("--oracle", perm_opts.oracle, "Use the bit-level reference implementation");
  perm->add_flag("--trace", perm_opts.trace, "Print intermediate states");

  std::vector<const char*> argv{"pbc"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*hash) return cmd_hash(hash_opts, in, out);
    if (*wrap) return cmd_wrap(wrap_opts, in, out);
    if (*unwrap) return cmd_unwrap(unwrap_opts, in, out, err);
    if (*vectors) return cmd_vectors(vec_opts, in, out, err);
    if (*perm) return cmd_perm(perm_opts, in, out);
  } catch (const std::exception& e) {
    err << "pbc: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pbc::cli
