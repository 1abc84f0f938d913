#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rf {

/// Total color assignment for the level-n nodes over a finite ground set.
/// arity > 0 colors the size-`arity` subsets of {0..ground_count-1};
/// arity == 0 colors every nonempty subset (finite-unions instances).
/// Nodes are encoded as bitmasks over the ground set.
class ColoringTable {
 public:
  ColoringTable(uint32_t arity, uint64_t ground_count, uint32_t colors);

  void set(uint64_t mask, uint16_t color);
  uint16_t color(uint64_t mask) const;
  bool is_colored(uint64_t mask) const;
  bool total() const;

  uint32_t arity() const { return arity_; }
  uint64_t ground_count() const { return ground_count_; }
  uint32_t colors() const { return colors_; }

  /// Masks the table must color, in increasing mask order.
  const std::vector<uint64_t>& domain() const { return domain_; }

  static ColoringTable from_function(uint32_t arity, uint64_t ground_count, uint32_t colors,
                                     const std::function<uint16_t(uint64_t)>& f);

 private:
  uint32_t arity_;
  uint64_t ground_count_;
  uint32_t colors_;
  std::vector<uint64_t> domain_;
  std::vector<int32_t> table_;  // indexed by mask, -1 = unset
};

struct SearchStats {
  uint64_t candidates = 0;  // witness candidates examined
};

struct RamseyWitness {
  std::vector<uint64_t> elements;  // increasing
  uint16_t color = 0;
};

/// Lexicographically first k-subset of {0..N} (N = max element) all of whose
/// size-n subsets share one color; nullopt after exhausting every candidate.
std::optional<RamseyWitness> finite_ramsey_search(uint64_t n_max_element, uint32_t n, uint32_t r,
                                                  const ColoringTable& coloring, uint32_t k,
                                                  SearchStats* stats = nullptr);

bool recheck_ramsey_witness(const ColoringTable& coloring, const RamseyWitness& witness,
                            uint32_t n);

struct UnionsWitness {
  std::vector<uint64_t> block_masks;  // block-ordered
  uint16_t color = 0;
};

/// Lexicographically first block sequence s_1 < ... < s_b inside {0..N-1}
/// (N = count) with every nonempty union of its blocks monochromatic.
std::optional<UnionsWitness> finite_unions_search(uint64_t n_count, uint32_t r,
                                                  const ColoringTable& coloring, uint32_t b,
                                                  SearchStats* stats = nullptr);

bool recheck_unions_witness(const ColoringTable& coloring, const UnionsWitness& witness);

/// Outcome of a minimal-number sweep. Statistics are reported as the
/// equivalent sequential scan would count them, so parallel runs stay
/// byte-deterministic.
struct OracleOutcome {
  std::optional<uint64_t> value;  // minimal N; empty = NotFound(limit)
  uint64_t limit = 0;
  uint64_t colorings_checked = 0;
  // Failing coloring at value-1 (or at the limit when NotFound), as colors
  // listed per domain mask in increasing mask order.
  std::optional<std::vector<uint16_t>> counterexample;
};

/// Least N <= max_n (vertex count) such that every r-coloring of the size-n
/// subsets of {0..N-1} admits a size-k homogeneous set. Exhaustive over
/// colorings; color-permutation pruning fixes the first subset's color unless
/// audit_mode is set.
OracleOutcome ramsey_number_oracle(uint32_t n, uint32_t k, uint32_t r, uint64_t max_n,
                                   bool audit_mode = false, uint32_t jobs = 1);

/// Least N <= max_n such that every r-coloring of the nonempty subsets of
/// {0..N-1} admits a b-block monochromatic-unions witness.
OracleOutcome unions_number_oracle(uint32_t b, uint32_t r, uint64_t max_n,
                                   bool audit_mode = false, uint32_t jobs = 1);

struct SweepResult {
  std::optional<uint64_t> counterexample;  // first failing instance index
  std::string note;                        // property's failure note
  uint64_t verified = 0;                   // instances verified (all, on success)
};

/// Deterministic enumeration of `count` instances; the property returns a
/// failure note to flag a counterexample.
SweepResult exhaustive_sweep(uint64_t count,
                             const std::function<std::optional<std::string>(uint64_t)>& property);

enum class ForcingSide { inside, outside, undecided };

/// Plain-recursion evaluation of the threshold forcing semantics on the full
/// increasing-sequence tree over {0..ground_count-1}: a node at level n is
/// good iff the target agrees; below, a node is good iff at least
/// k(children) of its children are, where k is the fixed threshold or the
/// majority count when absent. Deliberately table-free: the independent
/// route against the labeling engine.
ForcingSide forcing_brute_force(uint64_t ground_count, uint32_t n,
                                const std::function<bool(uint64_t mask)>& in_target,
                                std::optional<uint32_t> threshold);

}  // namespace rf
