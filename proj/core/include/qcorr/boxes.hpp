#ifndef QCORR_BOXES_HPP
#define QCORR_BOXES_HPP

#include <array>
#include <string>

#include "qcorr/nonlocality.hpp"

namespace qcorr {

/// Conditional outcome distribution p(x, y | k, l) for the two-setting,
/// two-outcome bipartite scenario, x, y in {+1, -1} and k, l in {1, 2}.
/// Every instance is normalized and no-signaling within 1e-12.
class BehaviorTable {
public:
  /// Layout: ((k-1)*2 + (l-1))*4 + xi*2 + yi with xi = 0 for x = +1.
  static std::size_t index(int k, int l, int x, int y);

  /// Validates ranges, normalization, and no-signaling; the exception message
  /// names the first offending cell or marginal.
  static BehaviorTable from_array(const std::array<double, 16>& p);

  static BehaviorTable pr_box();
  static BehaviorTable deterministic(const DeterministicStrategy& s);
  static BehaviorTable uniform();
  static BehaviorTable mix(const BehaviorTable& a, const BehaviorTable& b,
                           double lambda);  // lambda*a + (1-lambda)*b

  double p(int k, int l, int x, int y) const;
  /// E_kl = sum_{x,y} x*y*p(x,y|k,l).
  double correlator(int k, int l) const;
  const std::array<double, 16>& raw() const { return p_; }

private:
  explicit BehaviorTable(const std::array<double, 16>& p) : p_(p) {}
  std::array<double, 16> p_;
};

/// E11 + E12 + E21 - E22.
double behavior_chsh(const BehaviorTable& t);

enum class BehaviorClass { local_witnessed, nonlocal, supra_quantum };

std::string to_string(BehaviorClass c);

/// Takes the maximum of the CHSH expression over its 8 sign symmetries
/// (minus on any one of the four correlators, overall sign free) and places
/// it against the 2 and 2*sqrt(2) thresholds, each widened by 1e-9. The
/// CHSH test is a witness: "local_witnessed" means no symmetry exceeds 2.
BehaviorClass classify_behavior(const BehaviorTable& t);

/// Table obtained by measuring the scenario's observables two-valuedly:
/// p(x,y|k,l) = tr(rho ((I + x a_k)/2 x (I + y b_l)/2)). Its correlators
/// reproduce correlation(s, k, l).
BehaviorTable induced_behavior(const CorrelationScenario& s);

}  // namespace qcorr

#endif
