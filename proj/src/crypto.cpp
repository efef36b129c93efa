#include "sqkd/crypto.hpp"

#include <sodium.h>

#include <array>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string_view>

namespace sqkd {
namespace {

void ensure_sodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  });
}

void append_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// Counter-mode expansion:
//   seed_key = BLAKE2b-256(pack(seed) || le64(|seed|))
//   block_c  = BLAKE2b-512_{seed_key}(domain || le64(in_len) || le64(out_len) || le64(c))
// Output bits are taken little-endian from consecutive blocks.
BitSeq expand_seed(const BitSeq& seed, std::string_view domain, std::size_t in_len,
                   std::size_t out_len, std::size_t count) {
  ensure_sodium();
  std::vector<std::uint8_t> material = seed.pack();
  append_u64(material, seed.size());
  std::array<std::uint8_t, 32> seed_key{};
  crypto_generichash(seed_key.data(), seed_key.size(), material.data(), material.size(), nullptr, 0);

  BitSeq out;
  out.reserve(count);
  std::array<std::uint8_t, 64> block{};
  for (std::uint64_t counter = 0; out.size() < count; ++counter) {
    std::vector<std::uint8_t> msg(domain.begin(), domain.end());
    append_u64(msg, in_len);
    append_u64(msg, out_len);
    append_u64(msg, counter);
    crypto_generichash(block.data(), block.size(), msg.data(), msg.size(), seed_key.data(),
                       seed_key.size());
    for (std::size_t bit = 0; bit < block.size() * 8 && out.size() < count; ++bit) {
      out.push_back(((block[bit / 8] >> (bit % 8)) & 1) != 0);
    }
  }
  return out;
}

}  // namespace

void ToeplitzSpec::validate() const {
  if (in_len == 0 || out_len == 0) throw std::invalid_argument("ToeplitzSpec: zero length");
  if (key_bits.size() != in_len + out_len - 1) {
    throw std::invalid_argument("ToeplitzSpec: key length must be in_len + out_len - 1");
  }
  if (mask_bits.size() != out_len) throw std::invalid_argument("ToeplitzSpec: mask length must be out_len");
}

BitSeq toeplitz_hash(const ToeplitzSpec& spec, const BitSeq& x) {
  spec.validate();
  if (x.size() != spec.in_len) throw std::invalid_argument("toeplitz_hash: input length mismatch");
  const auto& key = spec.key_bits.bits();
  const auto& in = x.bits();
  BitSeq y(spec.out_len);
  for (std::size_t i = 0; i < spec.out_len; ++i) {
    // Row i reads key[out_len-1-i .. out_len-1-i+in_len-1].
    const std::uint8_t* diag = key.data() + (spec.out_len - 1 - i);
    std::uint8_t acc = spec.mask_bits[i];
    for (std::size_t j = 0; j < spec.in_len; ++j) acc ^= diag[j] & in[j];
    y.set(i, acc != 0);
  }
  return y;
}

ToeplitzSpec derive_hash_spec(const BitSeq& kh, std::size_t in_len, std::size_t out_len) {
  if (kh.size() < kMinSeedBits) throw std::invalid_argument("derive_hash_spec: hash key shorter than 128 bits");
  if (in_len == 0 || out_len == 0) throw std::invalid_argument("derive_hash_spec: zero length");
  const std::size_t key_len = in_len + out_len - 1;
  BitSeq stream = expand_seed(kh, "sqkd/check-hash", in_len, out_len, key_len + out_len);
  ToeplitzSpec spec;
  spec.in_len = in_len;
  spec.out_len = out_len;
  spec.key_bits = BitSeq(key_len);
  spec.mask_bits = BitSeq(out_len);
  for (std::size_t i = 0; i < key_len; ++i) spec.key_bits.set(i, stream[i]);
  for (std::size_t i = 0; i < out_len; ++i) spec.mask_bits.set(i, stream[key_len + i]);
  return spec;
}

BitSeq privacy_amplify(const BitSeq& raw, const BitSeq& pa_seed, std::size_t out_len) {
  if (raw.empty()) throw std::invalid_argument("privacy_amplify: empty raw key");
  if (out_len == 0) throw std::invalid_argument("privacy_amplify: out_len must be at least 1");
  if (out_len > raw.size()) throw std::invalid_argument("privacy_amplify: out_len exceeds raw key length");
  if (pa_seed.size() < kMinSeedBits) throw std::invalid_argument("privacy_amplify: seed shorter than 128 bits");
  ToeplitzSpec spec;
  spec.in_len = raw.size();
  spec.out_len = out_len;
  spec.key_bits = expand_seed(pa_seed, "sqkd/privacy-amplification", raw.size(), out_len,
                              raw.size() + out_len - 1);
  spec.mask_bits = BitSeq(out_len);
  return toeplitz_hash(spec, raw);
}

}  // namespace sqkd
