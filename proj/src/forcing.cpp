#include "ramseyforge/forcing.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

#include "ramseyforge/errors.hpp"

namespace rf {

std::string_view to_string(NodeLabel l) {
  switch (l) {
    case NodeLabel::inside: return "inside";
    case NodeLabel::outside: return "outside";
    default: return "undecided";
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::outside: return "outside";
    default: return "undecided";
  }
}

LevelTarget LevelTarget::from_codes(uint64_t level, PeriodicSet codes) {
  LevelTarget t;
  t.level = level;
  PeriodicSet cs = codes;
  t.member = [cs](const Approx& node) { return !node.empty() && cs.contains(node.back()); };
  t.stem_child_codes = std::move(codes);
  return t;
}

LevelTarget LevelTarget::from_predicate(uint64_t level,
                                        std::function<bool(const Approx&)> member) {
  LevelTarget t;
  t.level = level;
  t.member = std::move(member);
  return t;
}

namespace {

Code code_bound_for(const Space& space, uint64_t ground) {
  if (ground == 0) throw std::invalid_argument("finite mode needs a positive ground");
  if (space.kind() == Space::Kind::ellentuck) return ground - 1;
  if (ground > 20) throw std::invalid_argument("milliken ground too large");
  return (Code{1} << ground) - 1;
}

ForcingResult finite_partition(const LazyTree& tree, const LevelTarget& target,
                               const FiniteMode& mode) {
  const Space& space = tree.space();
  Code bound = code_bound_for(space, mode.ground);
  uint64_t stem_len = tree.stem().size();
  uint64_t n = target.level;

  auto labels = std::make_shared<std::map<Approx, NodeLabel>>();

  // Levels stem..n of T within the ground.
  std::vector<std::vector<Approx>> levels(n - stem_len + 1);
  levels[0] = {tree.stem()};
  for (uint64_t d = 0; d + 1 < levels.size(); ++d)
    for (const Approx& node : levels[d])
      for (Approx& child : tree.children(node, bound)) levels[d + 1].push_back(std::move(child));

  for (const Approx& node : levels.back())
    (*labels)[node] = target.member(node) ? NodeLabel::inside : NodeLabel::outside;

  for (uint64_t d = levels.size() - 1; d-- > 0;) {
    for (const Approx& node : levels[d]) {
      uint64_t in = 0, out = 0, total = 0;
      for (const Approx& child : tree.children(node, bound)) {
        total++;
        auto it = labels->find(child);
        assert(it != labels->end());
        if (it->second == NodeLabel::inside) in++;
        if (it->second == NodeLabel::outside) out++;
      }
      uint64_t need = mode.threshold ? *mode.threshold : (total + 1) / 2;
      NodeLabel l = in >= need    ? NodeLabel::inside
                    : out >= need ? NodeLabel::outside
                                  : NodeLabel::undecided;
      (*labels)[node] = l;
    }
  }

  NodeLabel stem_label = labels->at(tree.stem());
  ForcingResult result{PartitionLabeling{n, *labels}, tree, Verdict::undecided, false};
  if (stem_label == NodeLabel::undecided) return result;

  result.verdict = stem_label == NodeLabel::inside ? Verdict::inside : Verdict::outside;
  LazyTree source = tree;
  NodeLabel side = stem_label;
  uint64_t level_n = n;
  auto rule = [labels, source, side, level_n, bound](const Approx& node) {
    if (node.size() >= level_n) return source.branch(node);
    std::vector<Code> keep;
    for (Code c : source.branch(node).codes_within(bound)) {
      Approx child = node;
      child.push_back(c);
      auto it = labels->find(child);
      if (it != labels->end() && it->second == side) keep.push_back(c);
    }
    return BranchSet::explicit_codes(std::move(keep));
  };
  result.subtree = LazyTree(space, tree.stem(), rule);
  return result;
}

}  // namespace

ForcingResult gfh_partition(const LazyTree& tree, const FilterAssignment& filters,
                            const LevelTarget& target, const ForcingMode& mode) {
  uint64_t stem_len = tree.stem().size();

  // A target at or below the stem is settled by the stem's own prefix.
  if (target.level <= stem_len) {
    Approx prefix(tree.stem().begin(), tree.stem().begin() + target.level);
    bool in = target.member(prefix);
    PartitionLabeling labeling{target.level,
                               {{prefix, in ? NodeLabel::inside : NodeLabel::outside}}};
    return ForcingResult{std::move(labeling), tree, in ? Verdict::inside : Verdict::outside,
                         false};
  }

  if (std::holds_alternative<FiniteMode>(mode))
    return finite_partition(tree, target, std::get<FiniteMode>(mode));

  const ExactMode& exact = std::get<ExactMode>(mode);
  if (target.level != stem_len + 1)
    throw mode_unsupported("exact mode decides one level above the stem only");
  if (!target.stem_child_codes)
    throw mode_unsupported("exact mode needs the target described as codes over the stem");
  std::optional<PeriodicSet> branch = tree.branch(tree.stem()).as_periodic();
  if (!branch) throw mode_unsupported("exact mode needs a described branch set at the stem");

  PeriodicSet in_codes = ps_intersect(*branch, *target.stem_child_codes);
  PeriodicSet out_codes = ps_difference(*branch, *target.stem_child_codes);
  FilterOracle oracle = filters.at(tree.stem());
  Tri g = oracle.large(in_codes);
  Tri f = oracle.large(out_codes);

  auto side_tree = [&](PeriodicSet codes) {
    LazyTree source = tree;
    Approx stem = tree.stem();
    PeriodicSet cs = std::move(codes);
    return LazyTree(tree.space(), stem, [source, stem, cs](const Approx& node) {
      if (node == stem) return BranchSet::described(cs);
      return source.branch(node);
    });
  };

  if (g == Tri::yes) {
    PartitionLabeling labeling{target.level, {{tree.stem(), NodeLabel::inside}}};
    return ForcingResult{std::move(labeling), side_tree(std::move(in_codes)), Verdict::inside,
                         false};
  }
  if (f == Tri::yes) {
    PartitionLabeling labeling{target.level, {{tree.stem(), NodeLabel::outside}}};
    return ForcingResult{std::move(labeling), side_tree(std::move(out_codes)), Verdict::outside,
                         false};
  }
  if (exact.fallback) {
    ForcingResult r = finite_partition(tree, target, *exact.fallback);
    r.used_fallback = true;
    return r;
  }
  PartitionLabeling labeling{target.level, {{tree.stem(), NodeLabel::undecided}}};
  return ForcingResult{std::move(labeling), tree, Verdict::undecided, false};
}

ForcingResult homogenize_level_n(const LazyTree& tree, const FilterAssignment& filters,
                                 const LevelTarget& a, const ForcingMode& mode) {
  // The lifted family {X : r_level(X) in A} is determined at the target
  // level, so the partition engine applies verbatim.
  return gfh_partition(tree, filters, a, mode);
}

}  // namespace rf
