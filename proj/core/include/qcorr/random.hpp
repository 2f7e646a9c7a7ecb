#ifndef QCORR_RANDOM_HPP
#define QCORR_RANDOM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qcorr/logic.hpp"

namespace qcorr {

/// SplitMix64 stream. Substreams for (seed, sample index) pairs go through
/// a MurmurHash3 finalizer, so any sample can be drawn out of order and the
/// result is byte-identical regardless of thread count.
class Stream {
public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}
  static Stream for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1), 53 bits.
  double next_double();
  /// Uniform on {0, ..., bound-1}.
  std::uint64_t next_below(std::uint64_t bound);
  /// Standard normal via Box-Muller.
  double next_normal();
  /// Independent N(0,1) real and imaginary parts.
  Complex next_cnormal();

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Square matrix of iid complex Gaussian entries.
ComplexMatrix random_ginibre(std::size_t dim, Stream& g);

/// GUE-style random Hermitian matrix.
HermitianMatrix random_hermitian(std::size_t dim, Stream& g);

/// Full-rank random density matrix G G† / tr(G G†).
State random_state(std::size_t dim, Stream& g);

/// Random Hermitian with spectrum drawn uniformly from [-1, 1].
HermitianMatrix random_observable(std::size_t dim, Stream& g);

/// Rank-k eigenprojection of a random Hermitian matrix.
Event random_event(std::size_t dim, std::size_t rank, Stream& g);

/// Pairwise orthogonal projections with the given ranks, cut from one
/// random eigenbasis; sum of ranks must not exceed dim.
std::vector<Event> random_orthogonal_events(std::size_t dim,
                                            std::span<const std::size_t> ranks,
                                            Stream& g);

}  // namespace qcorr

#endif
