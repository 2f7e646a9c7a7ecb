#ifndef QCORR_INTERFERENCE_HPP
#define QCORR_INTERFERENCE_HPP

#include <functional>
#include <span>
#include <vector>

#include "qcorr/logic.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

/// Pairwise orthogonal slit events, a detector event and a state,
/// all of one dimension.
class SlitConfiguration {
public:
  SlitConfiguration(std::vector<Event> slits, Event detector, State state,
                    double tol = 1e-10);

  const std::vector<Event>& slits() const { return slits_; }
  const Event& detector() const { return detector_; }
  const State& state() const { return state_; }
  std::size_t dim() const { return state_.dim(); }

private:
  std::vector<Event> slits_;
  Event detector_;
  State state_;
};

/// mu(f | e_S) mu(e_S) for the slit subset S, in the product form
/// tr(e_S rho e_S f), which extends continuously to mu(e_S) = 0.
double joint_term(const SlitConfiguration& cfg,
                  std::span<const std::size_t> subset);

/// Sorkin interference term of the given order n (= number of slits):
/// I_n = sum over nonempty subsets S of (-1)^(n-|S|) joint_term(S).
/// I_2 is ordinary interference; I_3 vanishes identically on quantum data.
double sorkin_term(const SlitConfiguration& cfg, std::size_t order);

struct SweepPoint {
  double parameter;
  double value;
};

using SlitFamily = std::function<SlitConfiguration(double)>;

/// One Sorkin term per grid point, in grid order.
std::vector<SweepPoint> interference_sweep(const SlitFamily& family,
                                           std::span<const double> grid,
                                           std::size_t order);

/// Built-in detector-phase family: slits on the first n basis rays of C^dim,
/// state the equal superposition of those rays, detector the ray
/// sum_j exp(i j phi) |j> / sqrt(n).
SlitConfiguration phase_slit_configuration(std::size_t order, std::size_t dim,
                                           double phi);

/// 181 evenly spaced points covering [0, 2*pi].
std::vector<double> phase_grid(std::size_t points = 181);

/// Random configuration: slit ranks drawn as a random composition, detector
/// an independent random event, state full-rank random.
SlitConfiguration random_slit_configuration(std::size_t dim, std::size_t order,
                                            Stream& g);

}  // namespace qcorr

#endif
