#ifndef QCORR_EXACT_HPP
#define QCORR_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace qcorr {

using Rational = boost::multiprecision::cpp_rational;

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both parts are arbitrary-precision rationals in reduced form, so
/// equality is structural and zero tests are exact: a + b*sqrt(2) = 0
/// iff a = 0 and b = 0, since sqrt(2) is irrational.
class ExactScalar {
public:
  ExactScalar() = default;
  ExactScalar(long long n) : rat_(n) {}
  ExactScalar(Rational rat, Rational root = Rational(0))
      : rat_(std::move(rat)), root_(std::move(root)) {}

  static ExactScalar fraction(long long num, long long den) {
    return ExactScalar(Rational(num, den));
  }
  /// 0 + 1*sqrt(2)
  static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& rat_part() const { return rat_; }
  const Rational& root_part() const { return root_; }

  bool is_zero() const { return rat_.is_zero() && root_.is_zero(); }

  /// (a - b*sqrt(2)) / (a^2 - 2 b^2); throws std::domain_error on zero.
  ExactScalar inverse() const;

  /// a + b*sqrt(2) in double precision.
  double to_double() const;

  /// Rendered as "p/q + r/s·√2" with integer parts shortened.
  std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.rat_ + y.rat_, x.root_ + y.root_);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.rat_ - y.rat_, x.root_ - y.root_);
  }
  friend ExactScalar operator-(const ExactScalar& x) {
    return ExactScalar(-x.rat_, -x.root_);
  }
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r  with  r = sqrt(2)
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.rat_ * y.rat_ + 2 * x.root_ * y.root_,
                       x.rat_ * y.root_ + x.root_ * y.rat_);
  }
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    return x * y.inverse();
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.rat_ == y.rat_ && x.root_ == y.root_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) {
    return !(x == y);
  }

private:
  Rational rat_ = 0;   // rational part a
  Rational root_ = 0;  // coefficient b of sqrt(2)
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace qcorr

#endif
