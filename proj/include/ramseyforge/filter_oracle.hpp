#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ramseyforge/germ.hpp"
#include "ramseyforge/periodic_set.hpp"
#include "ramseyforge/tri.hpp"

namespace rf {

/// Decidable largeness test on periodic sets. Three shapes:
///   - frechet: True iff cofinite, False iff finite, Unknown otherwise;
///   - principal(n): True iff the set contains n;
///   - germ_filter(beta): True iff {i : beta_i in X} is cofinite (the set
///     family a hypernatural's ideal value would pick out).
class FilterOracle {
 public:
  enum class Kind { frechet, principal, germ };

  static FilterOracle frechet();
  static FilterOracle principal(uint64_t n);
  static FilterOracle germ_filter(Germ beta);

  Kind kind() const { return kind_; }
  Tri large(const PeriodicSet& x) const;

  const Germ& beta() const;
  uint64_t principal_point() const;

  /// "frechet" | "principal:N" | "germ:<germ literal>"
  std::string describe() const;
  static FilterOracle parse(std::string_view text);

 private:
  Kind kind_ = Kind::frechet;
  uint64_t point_ = 0;
  std::optional<Germ> beta_;
};

}  // namespace rf
