#include "ramseyforge/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ramseyforge/errors.hpp"

namespace rf {

NodePredicate NodePredicate::elements_in(const Space& space, PeriodicSet allowed) {
  const Space* sp = &space;
  PeriodicSet ok = allowed;
  auto element_ok = [sp, ok](Code c) {
    if (sp->kind() == Space::Kind::ellentuck) return ok.contains(c);
    for (uint64_t e = 0; e < 64; ++e)
      if ((c & (uint64_t{1} << e)) && !ok.contains(e)) return false;
    return true;
  };
  NodePredicate p;
  p.label = "elements-in:" + allowed.to_text();
  p.test = [element_ok](const Approx& s) {
    return std::all_of(s.begin(), s.end(), element_ok);
  };
  if (space.kind() == Space::Kind::ellentuck) {
    p.child_codes = [ok](const Approx&) -> std::optional<PeriodicSet> { return ok; };
  } else if (allowed.is_cofinite()) {
    // Blocks avoiding a finite forbidden element set: the masks m with
    // m & forbidden == 0, which recur with period 2^(max forbidden + 1).
    PeriodicSet forbidden = allowed.complement();
    uint64_t top = 0;
    Code fmask = 0;
    for (uint64_t e : forbidden.plus_exceptions()) {
      top = std::max(top, e);
      fmask |= Code{1} << e;
    }
    if (fmask == 0) {
      p.child_codes = [](const Approx&) -> std::optional<PeriodicSet> {
        return PeriodicSet::naturals();
      };
    } else if (top < 20) {
      uint64_t modulus = uint64_t{1} << (top + 1);
      std::vector<uint64_t> residues;
      for (uint64_t r = 0; r < modulus; ++r)
        if ((r & fmask) == 0) residues.push_back(r);
      PeriodicSet codes = PeriodicSet::residue_classes(modulus, residues);
      p.child_codes = [codes](const Approx&) -> std::optional<PeriodicSet> { return codes; };
    } else {
      p.child_codes = nullptr;  // forbidden elements too spread out to describe
    }
  } else {
    p.child_codes = nullptr;  // co-infinite element sets have no periodic mask image
  }
  return p;
}

NodePredicate NodePredicate::everything() {
  NodePredicate p;
  p.label = "everything";
  p.test = [](const Approx&) { return true; };
  p.child_codes = [](const Approx&) -> std::optional<PeriodicSet> {
    return PeriodicSet::naturals();
  };
  return p;
}

LazyTree fuse_into(const LazyTree& tree, const FilterAssignment& filters, const NodePredicate& h,
                   uint64_t levels, Code bound) {
  if (!h.test(tree.stem()))
    throw promise_violated("stem is outside the target family", tree.stem());

  LazyTree source = tree;
  NodePredicate target = h;
  FilterAssignment assign = filters;
  auto rule = [source, target, assign](const Approx& node) {
    BranchSet restricted = [&] {
      BranchSet raw = source.branch(node);
      if (target.child_codes) {
        std::optional<PeriodicSet> codes = target.child_codes(node);
        if (codes) return raw.intersect(BranchSet::described(*codes));
      }
      // Fall back to filtering whatever the branch can enumerate.
      BranchSet src = raw;
      NodePredicate tgt = target;
      Approx parent = node;
      return raw.intersect(BranchSet::generated(
          [src, tgt, parent](Code b) {
            std::vector<Code> out;
            for (Code c : src.codes_within(b)) {
              Approx child = parent;
              child.push_back(c);
              if (tgt.test(child)) out.push_back(c);
            }
            return out;
          },
          UINT64_MAX));
    }();
    std::optional<PeriodicSet> ps = restricted.as_periodic();
    Tri verdict = ps ? assign.at(node).large(*ps) : Tri::unknown;
    if (verdict != Tri::yes)
      throw promise_violated("restricted branch set is not large at " +
                                 source.space().format_node(node),
                             node);
    return restricted;
  };

  LazyTree fused(tree.space(), tree.stem(), rule);
  // Eager sweep: the level-by-level construction materializes (and thereby
  // promise-checks) everything within the requested window.
  fused.nodes_to_depth(levels, bound);
  return fused;
}

LazyTree sigma_fuse(const LazyTree& tree, const FilterAssignment& filters,
                    const std::vector<ShrinkRule>& avoiders, uint64_t levels, Code bound) {
  (void)filters;
  if (avoiders.empty()) return tree;

  // Per-node current trees: the stem's tree is avoiders[0] applied to T; a
  // node at level |stem|+k applies avoiders[k] to its parent's tree restemmed
  // there, and past the supplied rules the parent's tree just carries on.
  struct State {
    State(LazyTree src, std::vector<ShrinkRule> rs, Approx rt)
        : source(std::move(src)), rules(std::move(rs)), root(std::move(rt)) {}

    LazyTree at(const Approx& node) {
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = trees.find(node);
        if (it != trees.end()) return it->second;
      }
      LazyTree result = [&] {
        if (node == root) return rules[0](source);
        Approx parent(node.begin(), node.end() - 1);
        LazyTree restemmed = at(parent).restem(node);
        uint64_t k = node.size() - root.size();
        if (k < rules.size()) return rules[k](restemmed);
        return restemmed;
      }();
      std::lock_guard<std::mutex> lock(mu);
      auto [it, inserted] = trees.emplace(node, std::move(result));
      (void)inserted;
      return it->second;
    }

    LazyTree source;
    std::vector<ShrinkRule> rules;
    Approx root;
    std::map<Approx, LazyTree> trees;
    std::mutex mu;
  };
  auto state = std::make_shared<State>(tree, avoiders, tree.stem());

  auto rule = [state](const Approx& node) { return state->at(node).branch(node); };
  LazyTree fused(tree.space(), tree.stem(), rule);
  fused.nodes_to_depth(levels, bound);
  return fused;
}

}  // namespace rf
