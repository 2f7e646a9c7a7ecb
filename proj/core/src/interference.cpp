#include "qcorr/interference.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qcorr {

SlitConfiguration::SlitConfiguration(std::vector<Event> slits, Event detector,
                                     State state, double tol)
    : slits_(std::move(slits)),
      detector_(std::move(detector)),
      state_(std::move(state)) {
  if (slits_.empty())
    throw std::invalid_argument("SlitConfiguration: no slits");
  for (const Event& e : slits_)
    if (e.dim() != state_.dim() || detector_.dim() != state_.dim())
      throw std::invalid_argument("SlitConfiguration: dimension mismatch");
  for (std::size_t i = 0; i < slits_.size(); ++i)
    for (std::size_t j = i + 1; j < slits_.size(); ++j)
      if (!orthogonal(slits_[i], slits_[j], tol))
        throw std::invalid_argument(
            "SlitConfiguration: slits not pairwise orthogonal");
}

double joint_term(const SlitConfiguration& cfg,
                  std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("joint_term: empty subset");
  const std::size_t n = cfg.dim();
  ComplexMatrix es(n, n);
  std::vector<bool> seen(cfg.slits().size(), false);
  for (const std::size_t idx : subset) {
    if (idx >= cfg.slits().size())
      throw std::out_of_range("joint_term: slit index out of range");
    if (seen[idx])
      throw std::invalid_argument("joint_term: repeated slit index");
    seen[idx] = true;
    es += cfg.slits()[idx].projection().matrix();
  }
  const ComplexMatrix es_rho_es =
      mat_mul(es, mat_mul(cfg.state().rho().matrix(), es));
  return trace_product_real(es_rho_es, cfg.detector().projection().matrix());
}

double sorkin_term(const SlitConfiguration& cfg, std::size_t order) {
  if (order < 2) throw std::invalid_argument("sorkin_term: order must be >= 2");
  if (cfg.slits().size() != order)
    throw std::invalid_argument("sorkin_term: configuration has " +
                                std::to_string(cfg.slits().size()) +
                                " slits, expected " + std::to_string(order));
  double sum = 0.0;
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 1; mask < (1u << order); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < order; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    const int missing = static_cast<int>(order - subset.size());
    const double sign = missing % 2 == 0 ? 1.0 : -1.0;
    sum += sign * joint_term(cfg, subset);
  }
  return sum;
}

std::vector<SweepPoint> interference_sweep(const SlitFamily& family,
                                           std::span<const double> grid,
                                           std::size_t order) {
  std::vector<SweepPoint> rows;
  rows.reserve(grid.size());
  for (const double x : grid)
    rows.push_back({x, sorkin_term(family(x), order)});
  return rows;
}

SlitConfiguration phase_slit_configuration(std::size_t order, std::size_t dim,
                                           double phi) {
  if (order < 2 || dim < order)
    throw std::invalid_argument(
        "phase_slit_configuration: need dim >= order >= 2");
  std::vector<Event> slits;
  slits.reserve(order);
  for (std::size_t i = 0; i < order; ++i) slits.push_back(Event::basis(dim, i));

  std::vector<Complex> base(dim, Complex(0.0));
  std::vector<Complex> detector(dim, Complex(0.0));
  for (std::size_t j = 0; j < order; ++j) {
    base[j] = 1.0;
    detector[j] = std::polar(1.0, phi * static_cast<double>(j));
  }
  return SlitConfiguration(std::move(slits), Event::ray(detector),
                           State::pure(base));
}

std::vector<double> phase_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("phase_grid: need >= 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = 2.0 * std::numbers::pi * static_cast<double>(i) /
              static_cast<double>(points - 1);
  return grid;
}

SlitConfiguration random_slit_configuration(std::size_t dim, std::size_t order,
                                            Stream& g) {
  if (order < 2 || dim < order)
    throw std::invalid_argument(
        "random_slit_configuration: need dim >= order >= 2");
  // one free rank unit per slit, the leftovers spread over slits + "unused"
  std::vector<std::size_t> ranks(order, 1);
  for (std::size_t extra = dim - order; extra > 0; --extra) {
    const std::size_t bucket = g.next_below(order + 1);
    if (bucket < order) ++ranks[bucket];
  }
  std::vector<Event> slits = random_orthogonal_events(dim, ranks, g);
  Event detector = random_event(dim, 1 + g.next_below(dim), g);
  State state = random_state(dim, g);
  return SlitConfiguration(std::move(slits), std::move(detector),
                           std::move(state));
}

}  // namespace qcorr
