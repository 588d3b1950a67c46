#pragma once

#include <array>
#include <vector>

namespace vmcsim {

// Fixed-capacity ring of recent per-interval host utilizations.
class UtilizationHistory {
 public:
  static constexpr int kCapacity = 32;

  void push(double u) {
    buf_[head_] = u;
    head_ = (head_ + 1) % kCapacity;
    if (size_ < kCapacity) ++size_;
  }

  int size() const { return size_; }

  // Last n samples, oldest first. n is clamped to size().
  std::vector<double> last(int n) const {
    if (n > size_) n = size_;
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int idx = (head_ - n + i + 2 * kCapacity) % kCapacity;
      out[static_cast<size_t>(i)] = buf_[idx];
    }
    return out;
  }

 private:
  std::array<double, kCapacity> buf_{};
  int size_ = 0;
  int head_ = 0;
};

}  // namespace vmcsim
