#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgpir {

/// Fixed-length bit vector over GF(2). Bit positions are 1-indexed, matching
/// the convention used for vertices, edges and file indices throughout the
/// library; to_string() renders bit 1 first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int len) : bits_(len, 0) {}

  static BitVector from_string(const std::string& s) {
    BitVector v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') {
        throw std::invalid_argument("BitVector: bad character in '" + s + "'");
      }
      v.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return v;
  }

  int size() const { return static_cast<int>(bits_.size()); }

  int get(int index) const {
    check(index);
    return bits_[index - 1];
  }

  void set(int index, int value) {
    check(index);
    bits_[index - 1] = static_cast<std::uint8_t>(value & 1);
  }

  void flip(int index) {
    check(index);
    bits_[index - 1] ^= 1;
  }

  BitVector& operator^=(const BitVector& o) {
    if (o.size() != size()) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool operator==(const BitVector&) const = default;

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
  }

 private:
  void check(int index) const {
    if (index < 1 || index > size()) throw std::out_of_range("BitVector: index out of range");
  }

  std::vector<std::uint8_t> bits_;
};

/// Rank over GF(2) of a matrix given as packed 64-bit rows.
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int num_cols) {
  const int words = (num_cols + 63) / 64;
  int rank = 0;
  for (int col = 0; col < num_cols && rank < static_cast<int>(rows.size()); ++col) {
    const int w = col / 64;
    const std::uint64_t mask = 1ULL << (col % 64);
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][w] & mask) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && (rows[i][w] & mask)) {
        for (int k = 0; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace mgpir
