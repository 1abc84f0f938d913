#include <doctest.h>

#include <atomic>
#include <thread>

#include "ramseyforge/errors.hpp"
#include "ramseyforge/lazy_tree.hpp"
#include "support/oracles.hpp"

using namespace rf;

TEST_SUITE("lazy_tree") {

TEST_CASE("the full tree is a filter tree for the tail filter everywhere") {
  LazyTree t = full_tree(Space::ellentuck());
  ValidationReport r =
      validate_filter_tree(t, FilterAssignment::constant(FilterOracle::frechet()), 3, 10);
  CHECK(r.verdict == Tri::yes);
  CHECK(!r.witness.has_value());
  CHECK(r.nodes_checked > 100);
}

TEST_CASE("a finite branch set fails validation at its node") {
  Approx bad_node{1};
  LazyTree t(Space::ellentuck(), {}, [bad_node](const Approx& s) {
    if (s == bad_node) return BranchSet::explicit_codes({2, 4});
    return BranchSet::described(PeriodicSet::naturals());
  });
  ValidationReport r =
      validate_filter_tree(t, FilterAssignment::constant(FilterOracle::frechet()), 2, 8);
  CHECK(r.verdict == Tri::no);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == bad_node);
}

TEST_CASE("an evens-branching tree validates under the doubling germ filter") {
  LazyTree t = uniform_tree(Space::ellentuck(), {}, PeriodicSet::multiples_of(2));
  FilterAssignment doubling =
      FilterAssignment::constant(FilterOracle::germ_filter(Germ::affine(2, 0)));
  CHECK(validate_filter_tree(t, doubling, 4, 16).verdict == Tri::yes);
  // the same tree is Unknown under the cofinite filter
  CHECK(validate_filter_tree(t, FilterAssignment::constant(FilterOracle::frechet()), 4, 16)
            .verdict == Tri::unknown);
}

TEST_CASE("generated branch sets cannot certify largeness") {
  LazyTree t(Space::ellentuck(), {}, [](const Approx&) {
    return BranchSet::generated(
        [](Code bound) {
          std::vector<Code> out;
          for (Code c = 0; c <= bound; c += 2) out.push_back(c);
          return out;
        },
        32);
  });
  CHECK(validate_filter_tree(t, FilterAssignment::constant(FilterOracle::frechet()), 1, 8)
            .verdict == Tri::unknown);
}

TEST_CASE("trees are prefix-closed and membership follows branch sets") {
  LazyTree t = uniform_tree(Space::ellentuck(), {0}, PeriodicSet::multiples_of(3));
  for (const Approx& node : t.nodes_to_depth(3, 18)) {
    CHECK(t.contains(node));
    for (size_t len = 0; len <= node.size(); ++len)
      CHECK(t.contains(Approx(node.begin(), node.begin() + len)));
  }
  CHECK(t.contains({0, 3, 9}));
  CHECK(!t.contains({0, 4}));
  CHECK(!t.contains({1}));
  CHECK(t.contains({}));  // prefix of the stem
}

TEST_CASE("branch rules are memoized: one evaluation per node") {
  auto counter = std::make_shared<std::atomic<int>>(0);
  LazyTree t(Space::ellentuck(), {}, [counter](const Approx&) {
    counter->fetch_add(1);
    return BranchSet::described(PeriodicSet::naturals());
  });
  t.branch({});
  t.branch({});
  t.children({}, 4);
  CHECK(counter->load() == 1);
}

TEST_CASE("intersecting a tree with itself changes nothing") {
  LazyTree t = uniform_tree(Space::ellentuck(), {1}, PeriodicSet::multiples_of(2));
  IntersectionResult r = intersect_trees(t, t, 3);
  REQUIRE(!r.degenerate());
  for (const Approx& node : t.nodes_to_depth(2, 12))
    CHECK(r.tree->branch(node).codes_within(12) == t.branch(node).codes_within(12));
}

TEST_CASE("incomparable stems degenerate") {
  LazyTree s = uniform_tree(Space::ellentuck(), {0}, PeriodicSet::naturals());
  LazyTree t = uniform_tree(Space::ellentuck(), {1}, PeriodicSet::naturals());
  CHECK(intersect_trees(s, t, 3).degenerate());
}

TEST_CASE("comparable stems with membership produce a valid filter tree") {
  LazyTree s = uniform_tree(Space::ellentuck(), {}, PeriodicSet::make(1, {0}, {}, {1}));
  LazyTree t = uniform_tree(Space::ellentuck(), {2}, PeriodicSet::make(1, {0}, {}, {3}));
  REQUIRE(s.contains(t.stem()));
  IntersectionResult r = intersect_trees(s, t, 4);
  REQUIRE(!r.degenerate());
  CHECK(r.tree->stem() == Approx{2});
  ValidationReport v =
      validate_filter_tree(*r.tree, FilterAssignment::constant(FilterOracle::frechet()), 4, 16);
  CHECK(v.verdict == Tri::yes);
}

TEST_CASE("comparable stems without membership degenerate") {
  // S branches only into evens, so stem {3} of T is not an S node
  LazyTree s = uniform_tree(Space::ellentuck(), {}, PeriodicSet::multiples_of(2));
  LazyTree t = uniform_tree(Space::ellentuck(), {3}, PeriodicSet::naturals());
  CHECK(intersect_trees(s, t, 3).degenerate());
}

TEST_CASE("intersection matches the stem condition over a generated family") {
  test::Rng rng(2024);
  std::vector<LazyTree> family;
  std::vector<Approx> stems = {{}, {0}, {1}, {2}, {0, 2}, {0, 4}, {1, 3}, {2, 5}};
  for (int i = 0; i < 16; ++i) {
    Approx stem = stems[rng.below(stems.size())];
    std::vector<uint64_t> cut;
    for (int j = 0; j < 3; ++j) cut.push_back(rng.below(12));
    PeriodicSet branch = ps_difference(PeriodicSet::naturals(), PeriodicSet::finite(cut));
    family.push_back(uniform_tree(Space::ellentuck(), stem, branch));
  }
  FilterAssignment frechet = FilterAssignment::constant(FilterOracle::frechet());
  auto is_prefix = [](const Approx& a, const Approx& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  };
  int checked = 0;
  for (const LazyTree& s : family)
    for (const LazyTree& t : family) {
      bool condition = (is_prefix(t.stem(), s.stem()) && t.contains(s.stem())) ||
                       (is_prefix(s.stem(), t.stem()) && s.contains(t.stem()));
      IntersectionResult r = intersect_trees(s, t, 3);
      CHECK(r.degenerate() == !condition);
      if (!r.degenerate())
        CHECK(validate_filter_tree(*r.tree, frechet, 3, 16).verdict == Tri::yes);
      checked++;
    }
  CHECK(checked == 256);
}

TEST_CASE("restemming shares the memoized branches") {
  LazyTree t = uniform_tree(Space::ellentuck(), {}, PeriodicSet::naturals());
  LazyTree deeper = t.restem({3});
  CHECK(deeper.stem() == Approx{3});
  CHECK(deeper.contains({3, 5}));
  CHECK_THROWS_AS(t.restem({0, 0}), std::invalid_argument);
}

TEST_CASE("validation over disjoint subtrees can run concurrently") {
  LazyTree t = uniform_tree(Space::ellentuck(), {}, PeriodicSet::naturals());
  FilterAssignment frechet = FilterAssignment::constant(FilterOracle::frechet());
  std::atomic<int> failures{0};
  std::vector<std::thread> workers;
  for (Code c = 0; c < 4; ++c)
    workers.emplace_back([&, c] {
      LazyTree sub = t.restem({c});
      if (validate_filter_tree(sub, frechet, 3, 12).verdict != Tri::yes) failures.fetch_add(1);
    });
  for (auto& w : workers) w.join();
  CHECK(failures.load() == 0);
}

TEST_CASE("identical inputs build identical trees") {
  auto build = [] {
    LazyTree t = uniform_tree(Space::ellentuck(), {1},
                              ps_difference(PeriodicSet::naturals(), PeriodicSet::finite({4})));
    return t.nodes_to_depth(3, 10);
  };
  CHECK(build() == build());
}

}  // TEST_SUITE
