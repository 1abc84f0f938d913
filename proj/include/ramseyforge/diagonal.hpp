#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramseyforge/filter_oracle.hpp"
#include "ramseyforge/germ.hpp"
#include "ramseyforge/periodic_set.hpp"

namespace rf {

/// A decreasing chain of subsets of N. Finite chains continue with their last
/// element; lazy chains are queried on demand and validated up to a probe
/// depth only.
class Chain {
 public:
  explicit Chain(std::vector<PeriodicSet> sets);
  explicit Chain(std::function<PeriodicSet(uint64_t)> generator);

  PeriodicSet at(uint64_t i) const;
  bool is_finite() const { return !sets_.empty(); }
  uint64_t finite_size() const { return sets_.size(); }

 private:
  std::vector<PeriodicSet> sets_;
  std::function<PeriodicSet(uint64_t)> gen_;
};

/// Pick a germ whose membership is True for every supplied chain element: the
/// greedy diagonal x_0 = min X_0, x_i = min{x in X_i : x > x_{i-1}}.
///
/// Every element must be infinite (raises not_cofinite otherwise) and the
/// chain must be decreasing. For finite chains the diagonal eventually steps
/// through consecutive elements of the last set, so it re-encodes exactly as
/// a quasi-linear germ. Lazy chains yield a stream-backed germ that answers
/// membership through chain certificates.
Germ chain_witness(const std::vector<PeriodicSet>& chain);
Germ chain_witness(std::function<PeriodicSet(uint64_t)> chain, uint64_t probe_depth = 48);

/// Greedy diagonal through a chain the largeness oracle accepts: returns
/// x_0 < x_1 < ... with x_n in X_n (hence x_{n+1} in X_n). Raises
/// not_large(i) when large(X_i) != True and exhausted(i) when a set runs dry.
std::vector<uint64_t> scip_diagonalize(const Chain& chain, const FilterOracle& largeness,
                                       uint64_t count);

/// Plateau reparameterization of a germ with positive drift everywhere: the
/// output repeats the running-record values of phi, so it is nondecreasing,
/// unbounded, and agrees with phi on the record set. Where phi's plateaus
/// already align with its records the agreement is cofinite.
Germ scip_witness(const Germ& phi);

}  // namespace rf
