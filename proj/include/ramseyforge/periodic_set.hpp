#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rf {

/// Finitely presented subset of N: an eventually periodic core (modulus +
/// residue classes) adjusted by finitely many exceptions. The representation
/// is kept normalized: the modulus is the minimal period of the set's tail,
/// every plus exception misses the core, every minus exception hits it, and
/// the exception lists are sorted and disjoint. Normalized presentations are
/// unique, so structural equality decides set equality.
class PeriodicSet {
 public:
  /// The empty set.
  PeriodicSet();

  static PeriodicSet naturals();
  static PeriodicSet empty();
  static PeriodicSet finite(std::vector<uint64_t> elements);
  static PeriodicSet multiples_of(uint64_t m);
  /// {x : x >= from}
  static PeriodicSet tail(uint64_t from);
  static PeriodicSet residue_classes(uint64_t modulus, std::vector<uint64_t> residues);
  static PeriodicSet make(uint64_t modulus, std::vector<uint64_t> residues,
                          std::vector<uint64_t> plus, std::vector<uint64_t> minus);

  bool contains(uint64_t n) const;
  bool is_finite() const;
  bool is_infinite() const { return !is_finite(); }
  bool is_cofinite() const;
  bool is_empty() const;
  bool is_subset_of(const PeriodicSet& other) const;

  uint64_t modulus() const { return modulus_; }
  const std::vector<uint64_t>& residues() const { return residues_; }
  const std::vector<uint64_t>& plus_exceptions() const { return plus_; }
  const std::vector<uint64_t>& minus_exceptions() const { return minus_; }

  /// Least element >= from, if any.
  std::optional<uint64_t> next_geq(uint64_t from) const;
  std::optional<uint64_t> next_after(uint64_t x) const { return next_geq(x + 1); }
  std::optional<uint64_t> min_element() const { return next_geq(0); }
  std::vector<uint64_t> elements_upto(uint64_t bound) const;

  PeriodicSet complement() const;

  bool operator==(const PeriodicSet& other) const;
  bool operator!=(const PeriodicSet& other) const { return !(*this == other); }
  /// Total order on normalized presentations (for deterministic containers).
  bool operator<(const PeriodicSet& other) const;

  /// Textual form: "mod=M; res=[..]; plus=[..]; minus=[..]".
  std::string to_text() const;
  /// Accepts the textual form with optional whitespace; plus/minus may be
  /// omitted. Throws parse_error.
  static PeriodicSet parse(std::string_view text);

 private:
  PeriodicSet(uint64_t modulus, std::vector<uint64_t> residues, std::vector<uint64_t> plus,
              std::vector<uint64_t> minus);
  void normalize();

  uint64_t modulus_ = 1;
  std::vector<uint64_t> residues_;  // sorted subset of {0..modulus_-1}
  std::vector<uint64_t> plus_;      // sorted, core misses each
  std::vector<uint64_t> minus_;     // sorted, core hits each
};

enum class SetOp { union_, intersect, difference };

PeriodicSet ps_combine(SetOp op, const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet ps_union(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet ps_intersect(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet ps_difference(const PeriodicSet& a, const PeriodicSet& b);

}  // namespace rf
