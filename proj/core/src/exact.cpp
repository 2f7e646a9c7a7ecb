#include "qcorr/exact.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcorr {

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
  // a^2 - 2 b^2 vanishes only at a = b = 0 (sqrt(2) is irrational).
  const Rational den = rat_ * rat_ - 2 * root_ * root_;
  return ExactScalar(rat_ / den, -root_ / den);
}

double ExactScalar::to_double() const {
  return rat_.convert_to<double>() +
         root_.convert_to<double>() * std::numbers::sqrt2;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!rat_.is_zero()) out = rational_str(rat_);
  if (!root_.is_zero()) {
    Rational b = root_;
    if (out.empty()) {
      if (b < 0) {
        out = "-";
        b = -b;
      }
    } else {
      out += b < 0 ? " - " : " + ";
      if (b < 0) b = -b;
    }
    if (b != 1) out += rational_str(b) + "·";
    out += "√2";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.to_string();
}

}  // namespace qcorr
