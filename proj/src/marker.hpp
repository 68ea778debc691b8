#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tucker::detail {

// Set over [0, n) with O(1) clear.
class Marker {
 public:
  explicit Marker(std::size_t n) : stamp_(n, 0) {}

  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void mark(std::size_t i) { stamp_[i] = epoch_; }
  void unmark(std::size_t i) { stamp_[i] = 0; }
  bool marked(std::size_t i) const { return stamp_[i] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

}  // namespace tucker::detail
