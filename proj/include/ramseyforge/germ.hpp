#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ramseyforge/periodic_set.hpp"
#include "ramseyforge/tri.hpp"

namespace rf {

/// Equivalence class of a sequence of naturals modulo cofinite agreement.
///
/// Two presentations are decidable:
///   - standard: eventually constant, written std:N;
///   - quasi_linear: eventually phi_i = base[i mod p] + drift[i mod p] *
///     floor((i - onset)/p), written ql:p=..;base=[..];drift=[..];onset=N.
/// Both are kept canonical (minimal period, minimal onset), so equality of
/// canonical fields coincides with germ equality being True.
///
/// A third, stream-backed presentation exists for diagonal sequences that are
/// not eventually quasi-linear. Stream germs are strictly increasing by
/// construction and support only value enumeration and membership queries;
/// equality and affine maps on them raise unsupported_capability.
class Germ {
 public:
  enum class Kind { standard, quasi_linear, stream };

  /// Default: the constant-0 germ.
  Germ() = default;

  static Germ standard(uint64_t value);
  static Germ quasi_linear(uint64_t period, std::vector<uint64_t> base,
                           std::vector<uint64_t> drift, uint64_t onset);
  /// The germ of i -> i.
  static Germ identity();
  /// The germ of i -> a*i + b.
  static Germ affine(uint64_t a, uint64_t b);
  /// Stream-backed germ. `values` must yield a strictly increasing sequence;
  /// `witness_chain`, when given, provides the decreasing sets the stream
  /// diagonalizes, enabling decidable membership certificates.
  static Germ stream(std::function<uint64_t(uint64_t)> values,
                     std::function<PeriodicSet(uint64_t)> witness_chain,
                     uint64_t chain_probe_depth);

  Kind kind() const { return kind_; }
  bool is_standard() const { return kind_ == Kind::standard; }
  bool is_quasi_linear() const { return kind_ == Kind::quasi_linear; }
  bool is_stream() const { return kind_ == Kind::stream; }

  /// Canonical representative value at index i (total; memoized for streams).
  uint64_t value_at(uint64_t i) const;

  /// A germ is nonstandard iff no constant agrees with it on an infinite
  /// index set; for quasi-linear germs that is "every drift entry positive".
  bool is_nonstandard() const;

  uint64_t standard_value() const;      // standard only
  uint64_t period() const { return period_; }
  uint64_t onset() const { return onset_; }
  const std::vector<uint64_t>& base() const { return base_; }
  const std::vector<uint64_t>& drift() const { return drift_; }

  /// Canonical-form equality (standard/quasi_linear only). Stream germs
  /// compare equal only to themselves (shared representation).
  bool operator==(const Germ& other) const;
  bool operator!=(const Germ& other) const { return !(*this == other); }

  std::string to_text() const;
  static Germ parse(std::string_view text);

  friend Tri germ_eq(const Germ& phi, const Germ& psi);
  friend Tri germ_member(const Germ& phi, const PeriodicSet& x);
  friend Germ germ_apply_affine(uint64_t u, uint64_t v, const Germ& phi);

 private:
  struct StreamRep;

  // Tail form used internally: for i >= onset_, value = anchor_[i % p] +
  // drift_[i % p] * floor(i / p). The anchor may be negative even though all
  // represented values are naturals.
  void rebuild_from_tail(uint64_t period, std::vector<int64_t> anchor,
                         std::vector<uint64_t> drift, uint64_t steady_from);

  Kind kind_ = Kind::standard;
  uint64_t value_ = 0;  // standard

  uint64_t period_ = 1;
  uint64_t onset_ = 0;
  std::vector<uint64_t> base_;
  std::vector<uint64_t> drift_;
  std::vector<int64_t> anchor_;

  std::shared_ptr<StreamRep> stream_;
};

/// True iff {i : phi_i = psi_i} is cofinite, False iff finite, Unknown
/// otherwise. Reflexive, symmetric, and transitive on True verdicts.
Tri germ_eq(const Germ& phi, const Germ& psi);

/// True iff {i : phi_i in X} is cofinite, False iff finite, Unknown otherwise.
Tri germ_member(const Germ& phi, const PeriodicSet& x);

/// Germ of i -> u*phi_i + v.
Germ germ_apply_affine(uint64_t u, uint64_t v, const Germ& phi);

/// Property check behind the "membership forces infinitude" fact: for a
/// nonstandard phi, germ_member(phi, x) = True implies x is infinite. Returns
/// the implication's truth value, which must always be true.
bool assert_infinite_if_member(const Germ& phi, const PeriodicSet& x);

}  // namespace rf
