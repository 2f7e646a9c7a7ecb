#include "qcorr/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qcorr {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  return z ^ (z >> 33);
}

}  // namespace

Stream Stream::for_sample(std::uint64_t seed, std::uint64_t index) {
  return Stream(mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL)));
}

std::uint64_t Stream::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Stream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Stream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be > 0");
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

double Stream::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] so the log is finite
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Stream::next_cnormal() {
  const double re = next_normal();
  const double im = next_normal();
  return Complex(re, im);
}

ComplexMatrix random_ginibre(std::size_t dim, Stream& g) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = g.next_cnormal();
  return m;
}

HermitianMatrix random_hermitian(std::size_t dim, Stream& g) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = g.next_normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z = g.next_cnormal();
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return HermitianMatrix(std::move(m));
}

State random_state(std::size_t dim, Stream& g) {
  const ComplexMatrix gin = random_ginibre(dim, g);
  ComplexMatrix rho = mat_mul(gin, gin.adjoint());
  rho *= 1.0 / rho.trace().real();
  return State(HermitianMatrix(hermitian_part(rho)));
}

HermitianMatrix random_observable(std::size_t dim, Stream& g) {
  const EigResult basis = hermitian_eig(random_hermitian(dim, g));
  std::vector<double> spectrum(dim);
  for (double& x : spectrum) x = 2.0 * g.next_double() - 1.0;
  ComplexMatrix out(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex vik = basis.vectors(i, k);
      if (vik == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        out(i, j) += spectrum[k] * vik * std::conj(basis.vectors(j, k));
    }
  return HermitianMatrix(hermitian_part(out));
}

namespace {

Event projection_from_columns(const ComplexMatrix& vectors, std::size_t first,
                              std::size_t count) {
  const std::size_t n = vectors.rows();
  ComplexMatrix p(n, n);
  for (std::size_t k = first; k < first + count; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = vectors(i, k);
      if (vik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) += vik * std::conj(vectors(j, k));
    }
  return Event(HermitianMatrix(hermitian_part(p)));
}

}  // namespace

Event random_event(std::size_t dim, std::size_t rank, Stream& g) {
  if (rank > dim) throw std::invalid_argument("random_event: rank > dim");
  if (rank == 0) return Event::zero(dim);
  if (rank == dim) return Event::identity(dim);
  const EigResult basis = hermitian_eig(random_hermitian(dim, g));
  return projection_from_columns(basis.vectors, 0, rank);
}

std::vector<Event> random_orthogonal_events(std::size_t dim,
                                            std::span<const std::size_t> ranks,
                                            Stream& g) {
  const std::size_t total = std::accumulate(ranks.begin(), ranks.end(),
                                            std::size_t{0});
  if (total > dim)
    throw std::invalid_argument("random_orthogonal_events: ranks exceed dim");
  const EigResult basis = hermitian_eig(random_hermitian(dim, g));
  std::vector<Event> events;
  events.reserve(ranks.size());
  std::size_t first = 0;
  for (const std::size_t r : ranks) {
    events.push_back(r == 0 ? Event::zero(dim)
                            : projection_from_columns(basis.vectors, first, r));
    first += r;
  }
  return events;
}

}  // namespace qcorr
