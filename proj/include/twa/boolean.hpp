#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace twa {

/// Dense square Boolean matrix, rows packed into 64-bit words.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n = 0);
  static BoolMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const noexcept { return m.hash(); }
};

}  // namespace twa
