#include "qcorr/boxes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {
namespace {

constexpr double kTableTol = 1e-12;

void check_setting(int k, const char* name) {
  if (k != 1 && k != 2)
    throw std::out_of_range(std::string(name) + " must be 1 or 2");
}

void check_outcome(int x, const char* name) {
  if (x != 1 && x != -1)
    throw std::out_of_range(std::string(name) + " must be +1 or -1");
}

std::string cell_name(int k, int l, int x, int y) {
  const auto sgn = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return "p(" + sgn(x) + "," + sgn(y) + "|" + std::to_string(k) + "," +
         std::to_string(l) + ")";
}

}  // namespace

std::size_t BehaviorTable::index(int k, int l, int x, int y) {
  check_setting(k, "k");
  check_setting(l, "l");
  check_outcome(x, "x");
  check_outcome(y, "y");
  const std::size_t xi = x == 1 ? 0 : 1;
  const std::size_t yi = y == 1 ? 0 : 1;
  return (static_cast<std::size_t>(k - 1) * 2 +
          static_cast<std::size_t>(l - 1)) *
             4 +
         xi * 2 + yi;
}

BehaviorTable BehaviorTable::from_array(const std::array<double, 16>& p) {
  for (const int k : {1, 2})
    for (const int l : {1, 2}) {
      double sum = 0.0;
      for (const int x : {1, -1})
        for (const int y : {1, -1}) {
          const double v = p[index(k, l, x, y)];
          if (!(v >= -kTableTol && v <= 1.0 + kTableTol))
            throw std::invalid_argument(cell_name(k, l, x, y) + " = " +
                                        std::to_string(v) +
                                        " is outside [0, 1]");
          sum += v;
        }
      if (std::abs(sum - 1.0) > kTableTol)
        throw std::invalid_argument(
            "outcomes at settings (" + std::to_string(k) + "," +
            std::to_string(l) + ") sum to " + std::to_string(sum));
    }
  // No-signaling: each party's marginal must not depend on the other's
  // setting.
  for (const int k : {1, 2})
    for (const int x : {1, -1}) {
      const double m1 = p[index(k, 1, x, 1)] + p[index(k, 1, x, -1)];
      const double m2 = p[index(k, 2, x, 1)] + p[index(k, 2, x, -1)];
      if (std::abs(m1 - m2) > kTableTol)
        throw std::invalid_argument(
            "signaling to Alice: marginal p(x=" + std::string(x > 0 ? "+1" : "-1") +
            "|k=" + std::to_string(k) + ") is " + std::to_string(m1) +
            " for l=1 but " + std::to_string(m2) + " for l=2");
    }
  for (const int l : {1, 2})
    for (const int y : {1, -1}) {
      const double m1 = p[index(1, l, 1, y)] + p[index(1, l, -1, y)];
      const double m2 = p[index(2, l, 1, y)] + p[index(2, l, -1, y)];
      if (std::abs(m1 - m2) > kTableTol)
        throw std::invalid_argument(
            "signaling to Bob: marginal p(y=" + std::string(y > 0 ? "+1" : "-1") +
            "|l=" + std::to_string(l) + ") is " + std::to_string(m1) +
            " for k=1 but " + std::to_string(m2) + " for k=2");
    }
  return BehaviorTable(p);
}

BehaviorTable BehaviorTable::pr_box() {
  std::array<double, 16> p{};
  for (const int k : {1, 2})
    for (const int l : {1, 2}) {
      const int target = (k == 2 && l == 2) ? -1 : +1;
      for (const int x : {1, -1})
        for (const int y : {1, -1})
          p[index(k, l, x, y)] = x * y == target ? 0.5 : 0.0;
    }
  return from_array(p);
}

BehaviorTable BehaviorTable::deterministic(const DeterministicStrategy& s) {
  check_outcome(s.a1, "a1");
  check_outcome(s.a2, "a2");
  check_outcome(s.b1, "b1");
  check_outcome(s.b2, "b2");
  std::array<double, 16> p{};
  const int a[2] = {s.a1, s.a2};
  const int b[2] = {s.b1, s.b2};
  for (const int k : {1, 2})
    for (const int l : {1, 2}) p[index(k, l, a[k - 1], b[l - 1])] = 1.0;
  return from_array(p);
}

BehaviorTable BehaviorTable::uniform() {
  std::array<double, 16> p{};
  p.fill(0.25);
  return from_array(p);
}

BehaviorTable BehaviorTable::mix(const BehaviorTable& a, const BehaviorTable& b,
                                 double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("mix: lambda must lie in [0, 1]");
  std::array<double, 16> p{};
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = lambda * a.p_[i] + (1.0 - lambda) * b.p_[i];
  return from_array(p);
}

double BehaviorTable::p(int k, int l, int x, int y) const {
  return p_[index(k, l, x, y)];
}

double BehaviorTable::correlator(int k, int l) const {
  double e = 0.0;
  for (const int x : {1, -1})
    for (const int y : {1, -1}) e += x * y * p(k, l, x, y);
  return e;
}

double behavior_chsh(const BehaviorTable& t) {
  return t.correlator(1, 1) + t.correlator(1, 2) + t.correlator(2, 1) -
         t.correlator(2, 2);
}

std::string to_string(BehaviorClass c) {
  switch (c) {
    case BehaviorClass::local_witnessed: return "local-witnessed";
    case BehaviorClass::nonlocal: return "nonlocal";
    case BehaviorClass::supra_quantum: return "supra-quantum";
  }
  throw std::logic_error("to_string: bad behavior class");
}

BehaviorClass classify_behavior(const BehaviorTable& t) {
  const double e[2][2] = {{t.correlator(1, 1), t.correlator(1, 2)},
                          {t.correlator(2, 1), t.correlator(2, 2)}};
  double best = 0.0;
  for (int mk = 0; mk < 2; ++mk)
    for (int ml = 0; ml < 2; ++ml) {
      double expr = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          expr += (k == mk && l == ml) ? -e[k][l] : e[k][l];
      best = std::max(best, std::abs(expr));
    }
  if (best <= 2.0 + 1e-9) return BehaviorClass::local_witnessed;
  if (best <= kTsirelsonBound + 1e-9) return BehaviorClass::nonlocal;
  return BehaviorClass::supra_quantum;
}

BehaviorTable induced_behavior(const CorrelationScenario& s) {
  std::array<double, 16> p{};
  const ComplexMatrix eye_a = ComplexMatrix::identity(s.dim_a());
  const ComplexMatrix eye_b = ComplexMatrix::identity(s.dim_b());
  for (const int k : {1, 2})
    for (const int l : {1, 2})
      for (const int x : {1, -1})
        for (const int y : {1, -1}) {
          ComplexMatrix ea = eye_a;
          if (x == 1)
            ea += s.alice(k).matrix();
          else
            ea -= s.alice(k).matrix();
          ComplexMatrix eb = eye_b;
          if (y == 1)
            eb += s.bob(l).matrix();
          else
            eb -= s.bob(l).matrix();
          double v =
              0.25 * trace_product_real(s.state().rho().matrix(), kron(ea, eb));
          if (v < 0.0 && v >= -kTableTol) v = 0.0;
          if (v > 1.0 && v <= 1.0 + kTableTol) v = 1.0;
          p[BehaviorTable::index(k, l, x, y)] = v;
        }
  return BehaviorTable::from_array(p);
}

}  // namespace qcorr
