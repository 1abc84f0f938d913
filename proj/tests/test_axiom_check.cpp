#include <doctest.h>

#include "ramseyforge/axiom_check.hpp"
#include "support/spaces.hpp"

using namespace rf;

namespace {

class IrreflexiveFinitization final : public test::ForwardingSpace {
 public:
  IrreflexiveFinitization() : ForwardingSpace(Space::ellentuck()) {}
  bool lefin(const Approx& s, const Approx& t) const override {
    if (s == t && !s.empty()) return false;  // planted defect
    return ForwardingSpace::lefin(s, t);
  }
};

}  // namespace

TEST_SUITE("axiom_check") {

TEST_CASE("ellentuck passes the desk-scale suite") {
  CheckReport r = check_axioms(Space::ellentuck(), 10, 3, 32);
  CHECK(r.all_pass());
  CHECK(r.entries.size() == 9);
  for (const AxiomCheckEntry& e : r.entries) {
    CHECK(e.pass);
    CHECK(e.cases > 0);
    CHECK(e.witness.empty());
  }
}

TEST_CASE("milliken passes the desk-scale suite") {
  CheckReport r = check_axioms(Space::milliken(), 8, 2, 32);
  CHECK(r.all_pass());
  CHECK(r.entry("A4") != nullptr);
  CHECK(r.entry("A4")->cases == 32);
}

TEST_CASE("a planted irreflexive finitization fails A2 with a witness") {
  IrreflexiveFinitization broken;
  CheckReport r = check_axioms(broken, 6, 2, 4);
  CHECK(!r.all_pass());
  const AxiomCheckEntry* a2 = r.entry("A2a");
  REQUIRE(a2 != nullptr);
  CHECK(!a2->pass);
  CHECK(!a2->witness.empty());
}

}  // TEST_SUITE
