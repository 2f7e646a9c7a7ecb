#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcorr/exact.hpp"
#include "qcorr/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

using qcorr::ExactScalar;
using qcorr::Rational;

namespace {

ExactScalar random_small(qcorr::Stream& g) {
  auto part = [&g] {
    const long long num = static_cast<long long>(g.next_below(199)) - 99;
    const long long den = static_cast<long long>(g.next_below(20)) + 1;
    return Rational(num, den);
  };
  return ExactScalar(part(), part());
}

}  // namespace

TEST_CASE("arithmetic on closed-form inputs") {
  const ExactScalar r2 = ExactScalar::sqrt2();
  const ExactScalar one(1);

  CHECK((one + r2) + (one - r2) == ExactScalar(2));
  CHECK(ExactScalar(0) + (one + r2) == one + r2);
  CHECK(ExactScalar::fraction(1, 2) + ExactScalar::fraction(1, 2) == one);

  CHECK((one + r2) * (one + r2) == ExactScalar(3) + ExactScalar(2) * r2);
  CHECK((one + r2) * (one - r2) == ExactScalar(-1));
  CHECK(r2 * r2 == ExactScalar(2));

  CHECK((one + r2) - (one + r2) == ExactScalar(0));
  CHECK((-(one + r2)) + one + r2 == ExactScalar(0));
}

TEST_CASE("inverse") {
  const ExactScalar r2 = ExactScalar::sqrt2();
  const ExactScalar gamma = ExactScalar(1) + r2;

  CHECK(gamma * gamma.inverse() == ExactScalar(1));
  CHECK(gamma.inverse() == r2 - ExactScalar(1));
  CHECK(r2.inverse() * r2 == ExactScalar(1));
  CHECK(ExactScalar(1) / gamma == gamma.inverse());
  CHECK_THROWS_AS(ExactScalar(0).inverse(), std::domain_error);

  qcorr::Stream g(11);
  for (int i = 0; i < 2000; ++i) {
    const ExactScalar x = random_small(g);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == ExactScalar(1));
  }
}

TEST_CASE("to_double") {
  const double r2 = std::numbers::sqrt2_v<double>;
  CHECK(ExactScalar(0).to_double() == 0.0);
  CHECK(ExactScalar(2).to_double() == 2.0);
  CHECK(std::abs((ExactScalar(2) + ExactScalar::sqrt2()).to_double() - (2.0 + r2)) < 1e-15);
  CHECK(std::abs((ExactScalar(2) * ExactScalar::sqrt2()).to_double() - 2.0 * r2) < 1e-15);
  CHECK(std::abs(ExactScalar::fraction(1, 3).to_double() - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("to_double is a homomorphism within 1e-12") {
  qcorr::Stream g(12);
  auto tiny = [&g] {
    auto part = [&g] {
      const long long num = static_cast<long long>(g.next_below(19)) - 9;
      const long long den = static_cast<long long>(g.next_below(4)) + 1;
      return Rational(num, den);
    };
    return ExactScalar(part(), part());
  };
  for (int i = 0; i < 5000; ++i) {
    const ExactScalar x = tiny();
    const ExactScalar y = tiny();
    CHECK(std::abs((x + y).to_double() - (x.to_double() + y.to_double())) < 1e-12);
    CHECK(std::abs((x * y).to_double() - x.to_double() * y.to_double()) < 1e-12);
  }
  // at larger magnitudes the statement is relative, one part in 1e12
  for (int i = 0; i < 5000; ++i) {
    const ExactScalar x = random_small(g);
    const ExactScalar y = random_small(g);
    const double scale = std::max(1.0, std::abs((x * y).to_double()));
    CHECK(std::abs((x * y).to_double() - x.to_double() * y.to_double()) < 1e-12 * scale);
  }
}

TEST_CASE("field axioms hold exactly on random triples") {
  qcorr::Stream g(13);
  for (int i = 0; i < 10000; ++i) {
    const ExactScalar x = random_small(g);
    const ExactScalar y = random_small(g);
    const ExactScalar z = random_small(g);

    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + ExactScalar(0) == x);
    CHECK(x * ExactScalar(1) == x);
    CHECK(x - x == ExactScalar(0));
  }
}

TEST_CASE("structural zero test") {
  // rational and root parts are linearly independent over Q, so the
  // representation is canonical and equality is structural
  const ExactScalar x = ExactScalar::fraction(3, 7) + ExactScalar(Rational(0), Rational(2, 5));
  CHECK(x.rat_part() == Rational(3, 7));
  CHECK(x.root_part() == Rational(2, 5));
  CHECK(!x.is_zero());
  CHECK((x - x).is_zero());
}

TEST_CASE("rendering") {
  CHECK(ExactScalar(0).to_string() == "0");
  const std::string s = (ExactScalar(3) + ExactScalar(2) * ExactScalar::sqrt2()).to_string();
  CHECK(s.find('3') != std::string::npos);
  CHECK(s.find("√2") != std::string::npos);
}
