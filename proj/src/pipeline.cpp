#include "ramseyforge/pipeline.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ramseyforge/errors.hpp"

namespace rf {

LazyTree tree_from_cube(const Approx& s, const Real& x, const FilterOracle& oracle, Code bound) {
  const Space& space = x.space();
  if (!space.compatible(s, x)) throw empty_cube("[s,X] is empty at " + space.format_node(s));

  LazyTree tree = [&] {
    if (x.ground()) {
      PeriodicSet g = *x.ground();
      return LazyTree(space, s, [g](const Approx&) { return BranchSet::described(g); });
    }
    Real src = x;
    Code b = bound;
    return LazyTree(space, s, [src, b](const Approx& node) {
      return BranchSet::generated(
          [src, node](Code probe) {
            // probe is a code bound; the space scan wants a ground-element
            // bound, so over-collect and filter
            uint64_t elem_bound = probe;
            if (src.space().kind() == Space::Kind::milliken)
              elem_bound = probe == 0 ? 0 : 63 - uint64_t(__builtin_clzll(probe));
            std::vector<Code> out;
            for (Code c : src.space().extension_codes(node, src, elem_bound))
              if (c <= probe) out.push_back(c);
            return out;
          },
          b);
    });
  }();

  std::optional<PeriodicSet> stem_codes = tree.branch(s).as_periodic();
  if (stem_codes && oracle.large(*stem_codes) != Tri::yes) throw not_large(0);
  return tree;
}

std::vector<Code> greedy_diagonal(const LazyTree& tree, const Approx& s, uint64_t count,
                                  Code code_bound) {
  const Space& space = tree.space();
  std::vector<Code> chosen;
  while (chosen.size() < count) {
    Code from = chosen.empty() ? 0 : chosen.back() + 1;
    std::optional<Code> picked;
    for (Code c = from; c <= code_bound; ++c) {
      Approx candidate_blocks = chosen;
      candidate_blocks.push_back(c);
      if (!space.node_valid(candidate_blocks)) continue;
      if (!space.can_append(s, candidate_blocks.front())) continue;
      // Every way of assembling an approximation from the chosen codes must
      // stay inside the tree, so the final stream's truncations all do.
      bool ok = true;
      for (const Approx& u : space.lefin_downset(candidate_blocks)) {
        Approx node = s;
        node.insert(node.end(), u.begin(), u.end());
        if (!space.node_valid(node)) {
          ok = false;
          break;
        }
        if (!tree.contains(node)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        picked = c;
        break;
      }
    }
    if (!picked) break;
    chosen.push_back(*picked);
  }
  return chosen;
}

Real diagonalize_to_real(const LazyTree& tree, const FilterOracle& beta, const Approx& s,
                         uint64_t levels, Code bound, Code validation_bound) {
  if (!tree.contains(s)) throw validation_failed("s is not a node of the tree");
  if (validation_bound == 0) validation_bound = bound;
  ValidationReport report =
      validate_filter_tree(tree, FilterAssignment::constant(beta), levels, validation_bound);
  if (report.verdict != Tri::yes)
    throw validation_failed("tree does not validate as a filter tree to the requested depth");

  auto state = std::make_shared<std::pair<std::mutex, std::vector<Code>>>();
  LazyTree t = tree;
  Approx stem = s;
  Code b = bound;
  Real out = Real::from_generator(tree.space(), [state, t, stem, b](uint64_t i) {
    std::lock_guard<std::mutex> lock(state->first);
    std::vector<Code>& cache = state->second;
    if (i < stem.size()) return stem[i];
    uint64_t need = i - stem.size() + 1;
    while (cache.size() < need) {
      std::vector<Code> next = greedy_diagonal(t, stem, cache.size() + 1, b);
      if (next.size() > cache.size()) {
        cache = std::move(next);
        continue;
      }
      throw exhausted(cache.size());
    }
    return cache[i - stem.size()];
  });
  // Materialize the first levels eagerly so construction errors surface here.
  out.prefix(s.size() + levels);
  return out;
}

PipelineOutcome ramsey_pipeline(uint32_t n, const std::function<bool(const Approx&)>& target,
                                const Real& x, uint64_t ground, uint32_t k,
                                std::optional<uint32_t> threshold) {
  if (!x.ground())
    throw std::invalid_argument("the homogenization chain needs a described ground stream");

  Germ beta = chain_witness(std::vector<PeriodicSet>{*x.ground()});
  FilterOracle oracle = FilterOracle::germ_filter(std::move(beta));
  FilterAssignment filters = FilterAssignment::constant(oracle);

  Code bound = x.space().kind() == Space::Kind::ellentuck ? ground - 1
                                                          : (Code{1} << ground) - 1;
  LazyTree tree = tree_from_cube({}, x, oracle, bound);
  LevelTarget level_target = LevelTarget::from_predicate(n, target);
  ForcingResult forced =
      homogenize_level_n(tree, filters, level_target, FiniteMode{ground, threshold});

  PipelineOutcome out;
  out.verdict = forced.verdict;
  if (forced.verdict == Verdict::undecided) return out;

  out.diagonal = greedy_diagonal(forced.subtree, {}, ground, bound);
  if (out.diagonal.size() < k) return out;
  out.witness = std::vector<uint64_t>(out.diagonal.begin(), out.diagonal.begin() + k);

  // Independent single-pass recheck of the claimed side over the witness.
  bool want = forced.verdict == Verdict::inside;
  std::vector<uint32_t> pick(n);
  for (uint32_t i = 0; i < n; ++i) pick[i] = i;
  bool ok = true;
  if (n <= k) {
    while (ok) {
      Approx node;
      for (uint32_t i = 0; i < n; ++i) node.push_back((*out.witness)[pick[i]]);
      if (target(node) != want) ok = false;
      uint32_t i = n;
      while (i > 0 && pick[i - 1] == k - n + (i - 1)) i--;
      if (i == 0) break;
      pick[i - 1]++;
      for (uint32_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.witness_rechecked = ok;
  if (!ok) out.witness.reset();
  return out;
}

Tri r_alpha_member(const Real& x, const FilterAssignment& filters, uint64_t levels, Code bound) {
  (void)bound;
  const Space& space = x.space();
  Tri verdict = Tri::yes;
  for (uint64_t i = 0; i <= levels; ++i) {
    Approx s = x.prefix(i);
    Tri node_verdict = Tri::unknown;
    if (x.ground()) {
      PeriodicSet ext = ps_intersect(*x.ground(), space.extension_code_universe(s));
      node_verdict = filters.at(s).large(ext);
    }
    verdict = tri_and(verdict, node_verdict);
    if (verdict == Tri::no) return verdict;
  }
  return verdict;
}

FilterAssignment make_alpha_assignment(const Space& space, uint64_t chain_length) {
  const Space* sp = &space;
  uint64_t len = std::max<uint64_t>(chain_length, 2);
  auto memo = std::make_shared<std::pair<std::mutex, std::map<Approx, FilterOracle>>>();
  return FilterAssignment{[sp, len, memo](const Approx& s) {
    {
      std::lock_guard<std::mutex> lock(memo->first);
      auto it = memo->second.find(s);
      if (it != memo->second.end()) return it->second;
    }
    // Decreasing chain: the node's extension universe with its i least
    // members removed; the diagonal walks the universe's enumeration.
    PeriodicSet universe = sp->extension_code_universe(s);
    std::vector<PeriodicSet> chain;
    std::vector<uint64_t> skipped;
    PeriodicSet current = universe;
    for (uint64_t i = 0; i < len; ++i) {
      chain.push_back(current);
      if (current.is_finite()) break;  // chain_witness reports the failure
      std::optional<uint64_t> least = current.min_element();
      if (!least) break;
      skipped.push_back(*least);
      current = ps_difference(universe, PeriodicSet::finite(skipped));
    }
    FilterOracle oracle = FilterOracle::germ_filter(chain_witness(chain));
    std::lock_guard<std::mutex> lock(memo->first);
    auto [it, inserted] = memo->second.emplace(s, std::move(oracle));
    (void)inserted;
    return it->second;
  }};
}

}  // namespace rf
