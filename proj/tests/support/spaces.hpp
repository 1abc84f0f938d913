#pragma once

// Space wrappers for planting defects in axiom and construction tests.

#include "ramseyforge/space.hpp"

namespace rf::test {

class ForwardingSpace : public Space {
 public:
  explicit ForwardingSpace(const Space& base) : base_(base) {}
  Kind kind() const override { return base_.kind(); }
  std::string_view name() const override { return base_.name(); }
  bool node_valid(const Approx& s) const override { return base_.node_valid(s); }
  bool can_append(const Approx& s, Code c) const override { return base_.can_append(s, c); }
  PeriodicSet extension_code_universe(const Approx& s) const override {
    return base_.extension_code_universe(s);
  }
  bool lefin(const Approx& s, const Approx& t) const override { return base_.lefin(s, t); }
  std::vector<Approx> lefin_downset(const Approx& s) const override {
    return base_.lefin_downset(s);
  }
  bool compatible(const Approx& s, const Real& x, uint64_t probe) const override {
    return base_.compatible(s, x, probe);
  }
  std::vector<Code> extension_codes(const Approx& s, const Real& x, Code bound) const override {
    return base_.extension_codes(s, x, bound);
  }
  Real splice(const Real& y, uint64_t depth, const Real& x) const override {
    return base_.splice(y, depth, x);
  }

 private:
  const Space& base_;
};

}  // namespace rf::test
