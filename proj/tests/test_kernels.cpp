#include <doctest.h>

#include "ramseyforge/coloring.hpp"
#include "ramseyforge/errors.hpp"
#include "ramseyforge/kernels.hpp"
#include "support/oracles.hpp"

using namespace rf;

namespace {

ColoringTable sum_parity_pairs(uint64_t ground) {
  return ColoringTable::from_function(2, ground, 2, [](uint64_t mask) {
    uint64_t a = uint64_t(__builtin_ctzll(mask));
    uint64_t b = 63 - uint64_t(__builtin_clzll(mask));
    return uint16_t((a + b) % 2 == 0 ? 1 : 0);
  });
}

ColoringTable pentagon_pairs() {
  // color 1 exactly on the cycle distances {1,4} mod 5
  return ColoringTable::from_function(2, 5, 2, [](uint64_t mask) {
    uint64_t a = uint64_t(__builtin_ctzll(mask));
    uint64_t b = 63 - uint64_t(__builtin_clzll(mask));
    uint64_t d = (b - a) % 5;
    return uint16_t(d == 1 || d == 4 ? 1 : 0);
  });
}

ColoringTable size_parity_subsets(uint64_t ground) {
  return ColoringTable::from_function(0, ground, 2, [](uint64_t mask) {
    return uint16_t(__builtin_popcountll(mask) % 2);
  });
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("arity-1 pigeonhole always finds a half-sized class") {
  test::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    uint64_t n_max = 3 + rng.below(10);
    ColoringTable coloring = ColoringTable::from_function(
        1, n_max + 1, 2, [&](uint64_t) { return uint16_t(rng.next() & 1); });
    uint32_t k = uint32_t((n_max + 2) / 2);
    std::optional<RamseyWitness> w = finite_ramsey_search(n_max, 1, 2, coloring, k);
    REQUIRE(w.has_value());
    CHECK(recheck_ramsey_witness(coloring, *w, 1));
  }
}

TEST_CASE("sum-parity pairs on {0..5} have the lexicographically first witness {0,2,4}") {
  std::optional<RamseyWitness> w = finite_ramsey_search(5, 2, 2, sum_parity_pairs(6), 3);
  REQUIRE(w.has_value());
  CHECK(w->elements == std::vector<uint64_t>{0, 2, 4});
  CHECK(w->color == 1);
  CHECK(recheck_ramsey_witness(sum_parity_pairs(6), *w, 2));
}

TEST_CASE("the pentagon coloring defeats size-3 homogeneity exhaustively") {
  SearchStats stats;
  std::optional<RamseyWitness> w = finite_ramsey_search(4, 2, 2, pentagon_pairs(), 3, &stats);
  CHECK(!w.has_value());
  CHECK(stats.candidates == 10);  // C(5,3): the search really was exhaustive
}

TEST_CASE("witness recheck rejects tampering") {
  std::optional<RamseyWitness> w = finite_ramsey_search(5, 2, 2, sum_parity_pairs(6), 3);
  REQUIRE(w.has_value());
  RamseyWitness bad = *w;
  bad.elements.back() = 5;
  CHECK(!recheck_ramsey_witness(sum_parity_pairs(6), bad, 2));
}

TEST_CASE("minimal homogeneity ground for singletons is the pigeonhole bound") {
  OracleOutcome two = ramsey_number_oracle(1, 2, 2, 6);
  CHECK(two.value == 3);
  OracleOutcome three = ramsey_number_oracle(1, 3, 2, 8);
  CHECK(three.value == 5);
  OracleOutcome r3 = ramsey_number_oracle(1, 2, 3, 6);
  CHECK(r3.value == 4);
}

TEST_CASE("minimal ground for monochromatic pair-triangles") {
  OracleOutcome outcome = ramsey_number_oracle(2, 3, 2, 8, false, 4);
  CHECK(outcome.value == 6);

  OracleOutcome capped = ramsey_number_oracle(2, 3, 2, 5, false, 4);
  CHECK(!capped.value.has_value());
  CHECK(capped.limit == 5);
  REQUIRE(capped.counterexample.has_value());
  // the recorded coloring genuinely defeats every 3-subset of {0..4}
  ColoringTable cx(2, 5, 2);
  size_t pos = 0;
  for (uint64_t mask : cx.domain()) cx.set(mask, (*capped.counterexample)[pos++]);
  CHECK(!finite_ramsey_search(4, 2, 2, cx, 3).has_value());
}

TEST_CASE("audit mode reproduces the pruned oracle's value") {
  OracleOutcome pruned = ramsey_number_oracle(2, 3, 2, 6, false, 4);
  OracleOutcome audited = ramsey_number_oracle(2, 3, 2, 6, true, 4);
  CHECK(pruned.value == audited.value);
  CHECK(pruned.colorings_checked <= audited.colorings_checked);
}

TEST_CASE("oracle ground grows with the homogeneity target and the color count") {
  CHECK(*ramsey_number_oracle(1, 2, 2, 8).value <= *ramsey_number_oracle(1, 3, 2, 8).value);
  CHECK(*ramsey_number_oracle(1, 2, 2, 8).value <= *ramsey_number_oracle(1, 2, 3, 8).value);
}

TEST_CASE("one color makes the first singleton blocks a unions witness") {
  ColoringTable mono = ColoringTable::from_function(0, 3, 2, [](uint64_t) { return 0; });
  std::optional<UnionsWitness> w = finite_unions_search(3, 1, mono, 2);
  REQUIRE(w.has_value());
  CHECK(w->block_masks == std::vector<uint64_t>{1, 2});
  CHECK(recheck_unions_witness(mono, *w));
}

TEST_CASE("size-parity coloring yields an all-even witness at four points") {
  std::optional<UnionsWitness> w = finite_unions_search(4, 2, size_parity_subsets(4), 2);
  REQUIRE(w.has_value());
  CHECK(recheck_unions_witness(size_parity_subsets(4), *w));
  CHECK(w->color == 0);
  for (uint64_t mask : w->block_masks) CHECK(__builtin_popcountll(mask) % 2 == 0);
}

TEST_CASE("size-parity coloring defeats two blocks at three points") {
  CHECK(!finite_unions_search(3, 2, size_parity_subsets(3), 2).has_value());
}

TEST_CASE("unions witness recheck rejects block-order violations") {
  UnionsWitness bad;
  bad.block_masks = {2, 1};
  bad.color = 0;
  CHECK(!recheck_unions_witness(size_parity_subsets(2), bad));
}

TEST_CASE("minimal unions ground for one block is a single point") {
  OracleOutcome outcome = unions_number_oracle(1, 2, 4);
  CHECK(outcome.value == 1);
}

TEST_CASE("two blocks and two colors have no witness threshold below three points") {
  OracleOutcome capped = unions_number_oracle(2, 2, 2, false, 2);
  CHECK(!capped.value.has_value());
  CHECK(capped.limit == 2);
  REQUIRE(capped.counterexample.has_value());
  ColoringTable cx(0, 2, 2);
  size_t pos = 0;
  for (uint64_t mask : cx.domain()) cx.set(mask, (*capped.counterexample)[pos++]);
  CHECK(!finite_unions_search(2, 2, cx, 2).has_value());
}

TEST_CASE("audit mode agrees with pruning on small unions grounds") {
  OracleOutcome pruned = unions_number_oracle(2, 2, 4, false, 4);
  OracleOutcome audited = unions_number_oracle(2, 2, 4, true, 4);
  CHECK(pruned.value == audited.value);
  CHECK(!pruned.value.has_value());  // the threshold is above four points
  // both find defeating colorings at every ground up to four
  CHECK(pruned.counterexample.has_value());
  CHECK(audited.counterexample.has_value());
}

TEST_CASE("exhaustive sweeps report the first counterexample or the full count") {
  SweepResult ok = exhaustive_sweep(10, [](uint64_t) { return std::nullopt; });
  CHECK(!ok.counterexample.has_value());
  CHECK(ok.verified == 10);
  SweepResult bad = exhaustive_sweep(10, [](uint64_t i) -> std::optional<std::string> {
    if (i == 7) return "planted";
    return std::nullopt;
  });
  CHECK(bad.counterexample == 7);
  CHECK(bad.note == "planted");
}

TEST_CASE("kernels are pure: identical runs, identical outputs") {
  SearchStats s1, s2;
  auto w1 = finite_ramsey_search(5, 2, 2, sum_parity_pairs(6), 3, &s1);
  auto w2 = finite_ramsey_search(5, 2, 2, sum_parity_pairs(6), 3, &s2);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->elements == w2->elements);
  CHECK(s1.candidates == s2.candidates);
  OracleOutcome o1 = ramsey_number_oracle(2, 3, 2, 6, false, 4);
  OracleOutcome o2 = ramsey_number_oracle(2, 3, 2, 6, false, 1);
  CHECK(o1.value == o2.value);
  CHECK(o1.colorings_checked == o2.colorings_checked);
  CHECK(o1.counterexample == o2.counterexample);
}

TEST_CASE("coloring ingestion round trips through json and rejects gaps") {
  ColoringTable parity = sum_parity_pairs(5);
  std::string json = coloring_to_json_text(parity);
  ColoringTable back = coloring_from_json_text(json);
  CHECK(back.arity() == parity.arity());
  CHECK(back.ground_count() == parity.ground_count());
  for (uint64_t mask : parity.domain()) CHECK(back.color(mask) == parity.color(mask));

  CHECK_THROWS_AS(coloring_from_json_text("{\"arity\": 2}"), parse_error);
  CHECK_THROWS_AS(coloring_from_json_text(
                      "{\"arity\": 2, \"ground\": 4, \"colors\": 2, \"entries\": "
                      "[[[0,1],0]]}"),
                  parse_error);
  CHECK_THROWS_AS(coloring_from_csv_text("0 1\n"), parse_error);
  CHECK_THROWS_AS(coloring_from_csv_text("0 1,4x\n"), parse_error);
  // duplicate entries are rejected
  CHECK_THROWS_AS(coloring_from_csv_text("0 1,0\n1 0,1\n"), parse_error);
}

}  // TEST_SUITE
