#ifndef SEIDEL_RATIONAL_HPP
#define SEIDEL_RATIONAL_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace seidel {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers.
// Invariants: gcd(|num|, den) == 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, normalized_tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // canonical form makes fieldwise comparison exact
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "p" when integral, otherwise "p/q"
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct normalized_tag {};
  Rational(BigInt num, BigInt den, normalized_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

// Accepts "p" or "p/q" with an optional leading sign; q must be positive.
inline std::optional<Rational> parse_rational(std::string_view s) {
  auto read_int = [](std::string_view& v, bool allow_sign) -> std::optional<BigInt> {
    std::string digits;
    if (allow_sign && !v.empty() && (v.front() == '+' || v.front() == '-')) {
      if (v.front() == '-') digits.push_back('-');
      v.remove_prefix(1);
    }
    if (v.empty() || !std::isdigit(static_cast<unsigned char>(v.front()))) return std::nullopt;
    while (!v.empty() && std::isdigit(static_cast<unsigned char>(v.front()))) {
      digits.push_back(v.front());
      v.remove_prefix(1);
    }
    return BigInt(digits);
  };

  auto num = read_int(s, true);
  if (!num) return std::nullopt;
  if (s.empty()) return Rational(*num);
  if (s.front() != '/') return std::nullopt;
  s.remove_prefix(1);
  auto den = read_int(s, false);
  if (!den || !s.empty() || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace seidel

#endif  // SEIDEL_RATIONAL_HPP
