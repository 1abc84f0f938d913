#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "ramseyforge/lazy_tree.hpp"

namespace rf {

enum class NodeLabel { inside, outside, undecided };
enum class Verdict { inside, outside, undecided };

std::string_view to_string(NodeLabel l);
std::string_view to_string(Verdict v);

/// Target family determined at one level: the nodes of length `level` it
/// contains. `member` decides membership; `stem_child_codes` describes the
/// member codes over the stem when the level is one above it (the shape the
/// exact oracle mode needs).
struct LevelTarget {
  uint64_t level = 0;
  std::function<bool(const Approx&)> member;
  std::optional<PeriodicSet> stem_child_codes;

  static LevelTarget from_codes(uint64_t level, PeriodicSet codes);
  static LevelTarget from_predicate(uint64_t level, std::function<bool(const Approx&)> member);
};

/// Finite engine parameters: nodes are explored with ground elements
/// < ground; a node counts as decided when at least `threshold` children
/// carry the label, or a majority of its children when the threshold is
/// omitted.
struct FiniteMode {
  uint64_t ground = 0;
  std::optional<uint32_t> threshold;
};

/// Exact mode: largeness is judged by the node's filter oracle; only valid
/// one level above the stem with a described target. When the oracle cannot
/// decide (Unknown both ways) and a fallback is configured, the finite
/// engine takes over.
struct ExactMode {
  std::optional<FiniteMode> fallback;
};

using ForcingMode = std::variant<ExactMode, FiniteMode>;

struct PartitionLabeling {
  uint64_t level = 0;
  std::map<Approx, NodeLabel> labels;
};

struct ForcingResult {
  PartitionLabeling labeling;
  LazyTree subtree;
  Verdict verdict = Verdict::undecided;
  bool used_fallback = false;
};

/// Label the nodes of T between stem and the target level from the target
/// down: level nodes are inside/outside by membership, lower nodes take a
/// label when their so-labeled children are large (oracle or threshold), and
/// stay undecided otherwise. Returns the labeling, the homogenizing subtree
/// following the stem's label, and the verdict the stem label dictates.
ForcingResult gfh_partition(const LazyTree& tree, const FilterAssignment& filters,
                            const LevelTarget& target, const ForcingMode& mode);

/// One-level homogenization: run the partition for the lifted target
/// {X : r_level(X) in A} and return the side subtree.
ForcingResult homogenize_level_n(const LazyTree& tree, const FilterAssignment& filters,
                                 const LevelTarget& a, const ForcingMode& mode);

}  // namespace rf
