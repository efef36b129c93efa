#pragma once

// Keyed Toeplitz hashing over GF(2) for check digests, and the same family
// (without mask) as a privacy-amplification compressor.

#include <cstddef>

#include "sqkd/bitseq.hpp"

namespace sqkd {

/// Minimum length of a pre-shared hash key or PA seed, in bits.
inline constexpr std::size_t kMinSeedBits = 128;

/// out_len x in_len Toeplitz matrix T plus an XOR mask. Entry
/// T[i][j] = key_bits[j - i + out_len - 1]: the first row is
/// key_bits[out_len-1 .. in_len+out_len-2] left to right, and the first
/// column is key_bits[0 .. out_len-1] read bottom to top.
struct ToeplitzSpec {
  BitSeq key_bits;
  BitSeq mask_bits;
  std::size_t in_len = 0;
  std::size_t out_len = 0;

  /// Throws std::invalid_argument if the lengths are inconsistent.
  void validate() const;
};

/// y = T x xor mask. Throws std::invalid_argument if |x| != in_len.
BitSeq toeplitz_hash(const ToeplitzSpec& spec, const BitSeq& x);

/// Deterministically expands the pre-shared key `kh` into a full spec.
/// Throws std::invalid_argument if |kh| < kMinSeedBits or a length is 0.
ToeplitzSpec derive_hash_spec(const BitSeq& kh, std::size_t in_len, std::size_t out_len);

/// Compresses `raw` to `out_len` bits with an unmasked Toeplitz matrix
/// expanded from the public `pa_seed`.
/// Throws std::invalid_argument unless 1 <= out_len <= |raw|.
BitSeq privacy_amplify(const BitSeq& raw, const BitSeq& pa_seed, std::size_t out_len);

/// Output length used for AUTO privacy amplification: floor(raw_len / 2).
constexpr std::size_t auto_pa_length(std::size_t raw_len) { return raw_len / 2; }

}  // namespace sqkd
