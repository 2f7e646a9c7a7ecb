#ifndef QCORR_LOGIC_HPP
#define QCORR_LOGIC_HPP

#include <span>
#include <vector>

#include "qcorr/eig.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// Event of the quantum logic: an orthogonal projection.
/// Idempotence ||P^2 - P||_max <= tol is checked at construction.
class Event {
public:
  explicit Event(HermitianMatrix projection, double tol = 1e-10);
  static Event zero(std::size_t dim);
  static Event identity(std::size_t dim);
  /// |i><i| in the computational basis.
  static Event basis(std::size_t dim, std::size_t index);
  /// Rank-one projection onto psi (normalized internally).
  static Event ray(std::span<const Complex> psi);

  const HermitianMatrix& projection() const { return proj_; }
  std::size_t dim() const { return proj_.dim(); }

private:
  HermitianMatrix proj_;
};

/// State: a density operator (positive semidefinite, unit trace).
class State {
public:
  explicit State(HermitianMatrix rho, double tol = 1e-10);
  /// |psi><psi| / <psi|psi>
  static State pure(std::span<const Complex> psi);
  static State maximally_mixed(std::size_t dim);

  const HermitianMatrix& rho() const { return rho_; }
  std::size_t dim() const { return rho_.dim(); }

private:
  HermitianMatrix rho_;
};

/// True iff ||e f||_max <= tol.
bool orthogonal(const Event& e, const Event& f, double tol = 1e-10);

/// Partial sum, defined only for orthogonal events; throws otherwise.
Event event_sum(const Event& e, const Event& f);

/// Orthocomplement I - e.
Event complement(const Event& e);

/// tr(rho e), clamped into [0,1] when within 1e-10 outside.
double probability(const State& mu, const Event& e);

/// Luders update tr(e rho e f) / tr(rho e); conditioning on an event with
/// probability <= epsilon throws std::domain_error.
double conditional_probability(const State& mu, const Event& f, const Event& e,
                               double epsilon = 1e-12);

/// The post-measurement state e rho e / tr(rho e) behind the Luders update.
State conditional_state(const State& mu, const Event& e,
                        double epsilon = 1e-12);

/// Observable sum alpha_i e_i over pairwise orthogonal events.
HermitianMatrix observable_from_spectrum(std::span<const double> coeffs,
                                         std::span<const Event> events);

/// Compatibility in the matrix model: the commutator vanishes.
bool compatible(const HermitianMatrix& a, const HermitianMatrix& b,
                double tol = 1e-10);

}  // namespace qcorr

#endif
