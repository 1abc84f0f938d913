#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramseyforge/diagonal.hpp"
#include "ramseyforge/forcing.hpp"
#include "ramseyforge/lazy_tree.hpp"

namespace rf {

/// Tree with stem s whose truncated branches are exactly the truncated
/// members of [s,X]. Branch sets are described by X's ground set when one
/// exists. Throws empty_cube when [s,X] is empty and not_large when the
/// oracle rejects the stem's extension set.
LazyTree tree_from_cube(const Approx& s, const Real& x, const FilterOracle& oracle, Code bound);

/// Greedy minimal diagonal through a validated tree: X extends s and every
/// truncated member of [s,X] stays inside [T]. Validation runs first
/// (validation_failed when the constant assignment is not True to `levels`);
/// `validation_bound` caps its node coverage separately from the diagonal
/// search range (0 = same as bound).
Real diagonalize_to_real(const LazyTree& tree, const FilterOracle& beta, const Approx& s,
                         uint64_t levels, Code bound, Code validation_bound = 0);

/// The greedy diagonal itself: codes x_0 < x_1 < ... such that appending any
/// sub-selection of them to s lands in the tree; stops when no candidate
/// <= code_bound survives or `count` codes are found.
std::vector<Code> greedy_diagonal(const LazyTree& tree, const Approx& s, uint64_t count,
                                  Code code_bound);

struct PipelineOutcome {
  Verdict verdict = Verdict::undecided;
  std::vector<uint64_t> diagonal;               // extracted homogeneous stream
  std::optional<std::vector<uint64_t>> witness;  // first k elements when found
  bool witness_rechecked = false;
};

/// The one-level homogenization chain on a ground stream: cube to tree,
/// homogenize at the target level, diagonalize back, then recheck the
/// extracted witness against the target in one pass.
PipelineOutcome ramsey_pipeline(uint32_t n, const std::function<bool(const Approx&)>& target,
                                const Real& x, uint64_t ground, uint32_t k,
                                std::optional<uint32_t> threshold);

/// True iff every prefix of X up to `levels` has a large extension set under
/// its assigned oracle (the membership test for the family of streams the
/// assignment accepts); Unknown joins in, False dominates.
Tri r_alpha_member(const Real& x, const FilterAssignment& filters, uint64_t levels, Code bound);

/// Assignment of germ filters built by diagonalizing each node's decreasing
/// extension chains (the canonical witness sequence); makes the space's full
/// tree validate True. Raises not_cofinite on spaces with finite extension
/// sets.
FilterAssignment make_alpha_assignment(const Space& space, uint64_t chain_length = 4);

}  // namespace rf
