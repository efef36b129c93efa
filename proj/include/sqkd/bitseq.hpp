#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sqkd {

/// Ordered sequence of bits. Every element is 0 or 1.
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::size_t length, std::uint8_t fill = 0);
  BitSeq(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters; throws std::invalid_argument otherwise.
  static BitSeq from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t at(std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  BitSeq complement() const;
  std::size_t count_ones() const;
  std::string to_string() const;

  /// Packs bits little-endian within each byte (bit i -> byte i/8, bit i%8).
  std::vector<std::uint8_t> pack() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Bitwise XOR; throws std::invalid_argument on length mismatch.
BitSeq operator^(const BitSeq& a, const BitSeq& b);

std::size_t hamming_distance(const BitSeq& a, const BitSeq& b);

}  // namespace sqkd
