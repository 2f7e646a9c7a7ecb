#include "qcorr/logic.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

Event::Event(HermitianMatrix projection, double tol)
    : proj_(std::move(projection)) {
  const ComplexMatrix& p = proj_.matrix();
  const double dev = (mat_mul(p, p) - p).max_abs();
  if (dev > tol)
    throw std::invalid_argument("Event: projection not idempotent, ||P^2-P|| = " +
                                std::to_string(dev));
}

Event Event::zero(std::size_t dim) {
  return Event(HermitianMatrix::zero(dim));
}

Event Event::identity(std::size_t dim) {
  return Event(HermitianMatrix::identity(dim));
}

Event Event::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("Event::basis: index out of range");
  ComplexMatrix p(dim, dim);
  p(index, index) = 1.0;
  return Event(HermitianMatrix(std::move(p)));
}

Event Event::ray(std::span<const Complex> psi) {
  const std::size_t n = psi.size();
  double nrm2 = 0.0;
  for (const Complex& c : psi) nrm2 += std::norm(c);
  if (nrm2 == 0.0) throw std::invalid_argument("Event::ray: zero vector");
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = psi[i] * std::conj(psi[j]) / nrm2;
  return Event(HermitianMatrix(std::move(p)));
}

State::State(HermitianMatrix rho, double tol) : rho_(std::move(rho)) {
  const double tr = rho_.matrix().trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw std::invalid_argument("State: trace = " + std::to_string(tr));
  const double lambda_min = min_eigenvalue(rho_);
  if (lambda_min < -tol)
    throw std::invalid_argument("State: min eigenvalue = " +
                                std::to_string(lambda_min));
}

State State::pure(std::span<const Complex> psi) {
  const std::size_t n = psi.size();
  double nrm2 = 0.0;
  for (const Complex& c : psi) nrm2 += std::norm(c);
  if (nrm2 == 0.0) throw std::invalid_argument("State::pure: zero vector");
  ComplexMatrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho(i, j) = psi[i] * std::conj(psi[j]) / nrm2;
  return State(HermitianMatrix(std::move(rho)));
}

State State::maximally_mixed(std::size_t dim) {
  ComplexMatrix rho = ComplexMatrix::identity(dim);
  rho *= 1.0 / static_cast<double>(dim);
  return State(HermitianMatrix(std::move(rho)));
}

bool orthogonal(const Event& e, const Event& f, double tol) {
  if (e.dim() != f.dim())
    throw std::invalid_argument("orthogonal: dimension mismatch");
  return mat_mul(e.projection().matrix(), f.projection().matrix()).max_abs() <=
         tol;
}

Event event_sum(const Event& e, const Event& f) {
  if (!orthogonal(e, f))
    throw std::invalid_argument(
        "event_sum: operands not orthogonal (partial sum undefined)");
  return Event(
      HermitianMatrix(e.projection().matrix() + f.projection().matrix()));
}

Event complement(const Event& e) {
  return Event(HermitianMatrix(ComplexMatrix::identity(e.dim()) -
                               e.projection().matrix()));
}

double probability(const State& mu, const Event& e) {
  if (mu.dim() != e.dim())
    throw std::invalid_argument("probability: dimension mismatch");
  double p = trace_product_real(mu.rho().matrix(), e.projection().matrix());
  if (p < 0.0 && p >= -1e-10) p = 0.0;
  if (p > 1.0 && p <= 1.0 + 1e-10) p = 1.0;
  return p;
}

double conditional_probability(const State& mu, const Event& f, const Event& e,
                               double epsilon) {
  if (mu.dim() != e.dim() || mu.dim() != f.dim())
    throw std::invalid_argument("conditional_probability: dimension mismatch");
  const double pe = probability(mu, e);
  if (pe <= epsilon)
    throw std::domain_error(
        "conditional_probability: conditioning event has probability " +
        std::to_string(pe));
  const ComplexMatrix& p = e.projection().matrix();
  const ComplexMatrix ere = mat_mul(p, mat_mul(mu.rho().matrix(), p));
  double cp = trace_product_real(ere, f.projection().matrix()) / pe;
  if (cp < 0.0 && cp >= -1e-10) cp = 0.0;
  if (cp > 1.0 && cp <= 1.0 + 1e-10) cp = 1.0;
  return cp;
}

State conditional_state(const State& mu, const Event& e, double epsilon) {
  const double pe = probability(mu, e);
  if (pe <= epsilon)
    throw std::domain_error(
        "conditional_state: conditioning event has probability " +
        std::to_string(pe));
  const ComplexMatrix& p = e.projection().matrix();
  ComplexMatrix ere = mat_mul(p, mat_mul(mu.rho().matrix(), p));
  ere *= 1.0 / pe;
  return State(HermitianMatrix(hermitian_part(ere)));
}

HermitianMatrix observable_from_spectrum(std::span<const double> coeffs,
                                         std::span<const Event> events) {
  if (coeffs.size() != events.size())
    throw std::invalid_argument(
        "observable_from_spectrum: coefficient/event count mismatch");
  if (events.empty())
    throw std::invalid_argument("observable_from_spectrum: no events");
  for (std::size_t i = 0; i < events.size(); ++i)
    for (std::size_t j = i + 1; j < events.size(); ++j)
      if (!orthogonal(events[i], events[j]))
        throw std::invalid_argument(
            "observable_from_spectrum: events not pairwise orthogonal");
  ComplexMatrix sum(events.front().dim(), events.front().dim());
  for (std::size_t i = 0; i < events.size(); ++i) {
    ComplexMatrix term = events[i].projection().matrix();
    term *= coeffs[i];
    sum += term;
  }
  return HermitianMatrix(std::move(sum));
}

bool compatible(const HermitianMatrix& a, const HermitianMatrix& b,
                double tol) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("compatible: dimension mismatch");
  const ComplexMatrix ab = mat_mul(a.matrix(), b.matrix());
  const ComplexMatrix ba = mat_mul(b.matrix(), a.matrix());
  return (ab - ba).max_abs() <= tol;
}

}  // namespace qcorr
