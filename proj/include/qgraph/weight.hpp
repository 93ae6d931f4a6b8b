#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgraph {

// Nonnegative edge weight; infinity stands for an absent edge.
// IEEE semantics already give us absorbing addition and dominating
// comparison for infinity, so this is a thin guard around double.
class Weight {
 public:
  Weight() : value_(0.0) {}

  explicit Weight(double value) : value_(value) {
    if (std::isnan(value) || value < 0.0) {
      throw std::invalid_argument("weight must be a nonnegative real or inf");
    }
  }

  static Weight infinity() {
    return Weight(std::numeric_limits<double>::infinity());
  }

  double value() const { return value_; }
  bool is_infinite() const { return std::isinf(value_); }

  friend Weight operator+(Weight a, Weight b) { return Weight(a.value_ + b.value_); }
  friend bool operator==(Weight a, Weight b) { return a.value_ == b.value_; }
  friend bool operator!=(Weight a, Weight b) { return a.value_ != b.value_; }
  friend bool operator<(Weight a, Weight b) { return a.value_ < b.value_; }
  friend bool operator<=(Weight a, Weight b) { return a.value_ <= b.value_; }
  friend bool operator>(Weight a, Weight b) { return a.value_ > b.value_; }
  friend bool operator>=(Weight a, Weight b) { return a.value_ >= b.value_; }

 private:
  double value_;
};

}  // namespace qgraph
