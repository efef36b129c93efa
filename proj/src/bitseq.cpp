#include "sqkd/bitseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqkd {

BitSeq::BitSeq(std::size_t length, std::uint8_t fill) : bits_(length, fill ? 1 : 0) {}

BitSeq::BitSeq(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitSeq: element not in {0, 1}");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitSeq BitSeq::from_string(std::string_view text) {
  BitSeq out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitSeq: invalid character '" + std::string(1, c) + "'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitSeq BitSeq::complement() const {
  BitSeq out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::size_t BitSeq::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitSeq::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<std::uint8_t> BitSeq::pack() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (i % 8));
  }
  return out;
}

BitSeq operator^(const BitSeq& a, const BitSeq& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitSeq xor: length mismatch");
  BitSeq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a[i] != b[i]);
  return out;
}

std::size_t hamming_distance(const BitSeq& a, const BitSeq& b) {
  return (a ^ b).count_ones();
}

}  // namespace sqkd
