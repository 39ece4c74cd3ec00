#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace msiim {

/// Exact non-negative rational. Trust values are sums of per-node delivery
/// ratios; keeping them exact makes path ranking independent of float
/// rounding.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(std::int64_t num, std::int64_t den);

  static Ratio integer(std::int64_t n) { return Ratio(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Ratio operator+(const Ratio& other) const;
  bool operator==(const Ratio& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  std::strong_ordering operator<=>(const Ratio& other) const;

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0, gcd(num, den) == 1
};

}  // namespace msiim
