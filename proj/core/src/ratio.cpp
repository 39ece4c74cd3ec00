#include "msiimgrid/ratio.hpp"

#include "msiimgrid/error.hpp"

namespace msiim {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidLength, "ratio with zero denominator");
  if (num < 0 || den < 0)
    throw Error(ErrorCode::InvalidLength, "trust ratios are non-negative");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::operator+(const Ratio& other) const {
  // Denominators stay small (test-message counts), __int128 guards overflow.
  __int128 n = static_cast<__int128>(num_) * other.den_ +
               static_cast<__int128>(other.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * other.den_;
  // Reduce before narrowing.
  auto gcd128 = [](__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  };
  __int128 r = gcd128(n, d);
  if (r == 0) r = 1;
  n /= r;
  d /= r;
  return Ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

std::strong_ordering Ratio::operator<=>(const Ratio& other) const {
  __int128 lhs = static_cast<__int128>(num_) * other.den_;
  __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace msiim
