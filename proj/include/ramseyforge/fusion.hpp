#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramseyforge/lazy_tree.hpp"

namespace rf {

/// Node family used as a fusion target. `test` decides node membership;
/// `child_codes`, when provided, gives the codes c with test(s + c) as a
/// periodic set so largeness stays exactly decidable on described branches.
struct NodePredicate {
  std::string label;
  std::function<bool(const Approx&)> test;
  std::function<std::optional<PeriodicSet>(const Approx&)> child_codes;

  /// Nodes all of whose ground elements lie in `allowed` (Ellentuck) or all
  /// of whose block elements lie in `allowed` (Milliken).
  static NodePredicate elements_in(const Space& space, PeriodicSet allowed);
  static NodePredicate everything();
};

/// Level-by-level shrink of T keeping only nodes in H above the stem: the
/// sub-filter-tree whose branch sets are branch(T) restricted to H-children.
/// The promise that those restrictions stay large is checked eagerly to
/// (`levels`, `bound`) and lazily afterwards; a failure raises
/// promise_violated with the offending node, the signal that H is not
/// invariant for the assignment.
LazyTree fuse_into(const LazyTree& tree, const FilterAssignment& filters, const NodePredicate& h,
                   uint64_t levels, Code bound);

/// Shrink rule: given a tree restemmed at some node, produce a sub-filter-
/// tree with the same stem avoiding one target family.
using ShrinkRule = std::function<LazyTree(const LazyTree&)>;

/// Nested application of finitely many shrink rules, scheduling rule k at
/// level |stem|+k: the k-th avoided family is dodged by every branch once it
/// passes that level. Promise violations from inner fusions propagate.
LazyTree sigma_fuse(const LazyTree& tree, const FilterAssignment& filters,
                    const std::vector<ShrinkRule>& avoiders, uint64_t levels, Code bound);

}  // namespace rf
