#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramseyforge/filter_oracle.hpp"
#include "ramseyforge/space.hpp"
#include "ramseyforge/tri.hpp"

namespace rf {

/// One-step branching data of a tree node: the set of codes extending it.
///   - explicit_codes: a finite list;
///   - described: a periodic set of codes (possibly infinite) — the shape the
///     largeness oracles can judge exactly;
///   - generated: an enumerator probed up to a bound, judged Unknown by
///     validation since a bounded view certifies nothing about largeness.
class BranchSet {
 public:
  enum class Kind { explicit_codes, described, generated };

  static BranchSet explicit_codes(std::vector<Code> codes);
  static BranchSet described(PeriodicSet codes);
  static BranchSet generated(std::function<std::vector<Code>(Code)> enumerate, Code bound_hint);

  Kind kind() const { return kind_; }
  bool contains(Code c) const;
  std::vector<Code> codes_within(Code bound) const;
  /// Exact periodic description when one exists.
  std::optional<PeriodicSet> as_periodic() const;

  BranchSet intersect(const BranchSet& other) const;
  BranchSet erase(const std::vector<Code>& codes) const;

 private:
  Kind kind_ = Kind::explicit_codes;
  std::vector<Code> codes_;
  std::optional<PeriodicSet> set_;
  std::function<std::vector<Code>(Code)> enumerate_;
  Code bound_hint_ = 0;
};

/// Assignment of a largeness oracle to every node (the weight sequence the
/// tree constructions thread through every level).
struct FilterAssignment {
  std::function<FilterOracle(const Approx&)> at;

  static FilterAssignment constant(FilterOracle oracle);
};

/// Tree of approximations with a stem, given by a memoized branching rule for
/// the nodes extending the stem. Nodes below the stem (its prefixes) are
/// implicit members. Values are immutable; the shared memo table keeps every
/// consumer on one consistent tree.
class LazyTree {
 public:
  LazyTree(const Space& space, Approx stem, std::function<BranchSet(const Approx&)> rule);

  const Space& space() const { return *space_; }
  const Approx& stem() const { return stem_; }

  /// Branch set of a node at or above the stem, clipped to structurally valid
  /// extension codes.
  BranchSet branch(const Approx& node) const;

  bool contains(const Approx& node) const;
  std::vector<Approx> children(const Approx& node, Code bound) const;
  /// Stem plus all descendants within `levels` levels above the stem, codes
  /// bounded; breadth-first, code-ordered — the deterministic certificate
  /// order.
  std::vector<Approx> nodes_to_depth(uint64_t levels, Code bound) const;

  /// Same tree viewed from a deeper stem (shares the memo table).
  LazyTree restem(Approx new_stem) const;

 private:
  struct Memo;
  const Space* space_;
  Approx stem_;
  std::function<BranchSet(const Approx&)> rule_;
  std::shared_ptr<Memo> memo_;
};

/// Full tree of a space: every structurally valid node, stem empty.
LazyTree full_tree(const Space& space);
/// Tree branching into a fixed periodic code set everywhere (clipped per
/// node to valid extensions).
LazyTree uniform_tree(const Space& space, Approx stem, PeriodicSet codes);

struct ValidationReport {
  Tri verdict = Tri::yes;
  std::optional<Approx> witness;  // first node failing / undecided
  uint64_t nodes_checked = 0;
};

/// Checks F(s).large(branch(s)) = True for every node of T/stem up to
/// `levels` above the stem, covering children with codes <= bound. False
/// wins over Unknown; the witness is the first offending node in BFS order.
ValidationReport validate_filter_tree(const LazyTree& tree, const FilterAssignment& filters,
                                      uint64_t levels, Code bound);

struct IntersectionResult {
  std::optional<LazyTree> tree;  // empty: degenerate (stem condition failed)
  bool degenerate() const { return !tree.has_value(); }
};

/// Node-wise intersection. Defined exactly when one stem extends the other
/// and the longer stem belongs to the other tree; degenerate otherwise.
IntersectionResult intersect_trees(const LazyTree& s, const LazyTree& t, uint64_t levels);

}  // namespace rf
