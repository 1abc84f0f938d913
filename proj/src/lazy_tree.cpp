#include "ramseyforge/lazy_tree.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "ramseyforge/errors.hpp"

namespace rf {

BranchSet BranchSet::explicit_codes(std::vector<Code> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  BranchSet b;
  b.kind_ = Kind::explicit_codes;
  b.codes_ = std::move(codes);
  return b;
}

BranchSet BranchSet::described(PeriodicSet codes) {
  BranchSet b;
  b.kind_ = Kind::described;
  b.set_ = std::move(codes);
  return b;
}

BranchSet BranchSet::generated(std::function<std::vector<Code>(Code)> enumerate,
                               Code bound_hint) {
  BranchSet b;
  b.kind_ = Kind::generated;
  b.enumerate_ = std::move(enumerate);
  b.bound_hint_ = bound_hint;
  return b;
}

bool BranchSet::contains(Code c) const {
  switch (kind_) {
    case Kind::explicit_codes: return std::binary_search(codes_.begin(), codes_.end(), c);
    case Kind::described: return set_->contains(c);
    case Kind::generated: {
      std::vector<Code> got = enumerate_(std::max(bound_hint_, c));
      return std::find(got.begin(), got.end(), c) != got.end();
    }
  }
  return false;
}

std::vector<Code> BranchSet::codes_within(Code bound) const {
  switch (kind_) {
    case Kind::explicit_codes: {
      std::vector<Code> out;
      for (Code c : codes_)
        if (c <= bound) out.push_back(c);
      return out;
    }
    case Kind::described: return set_->elements_upto(bound);
    case Kind::generated: {
      std::vector<Code> out = enumerate_(bound);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      out.erase(std::remove_if(out.begin(), out.end(), [&](Code c) { return c > bound; }),
                out.end());
      return out;
    }
  }
  return {};
}

std::optional<PeriodicSet> BranchSet::as_periodic() const {
  switch (kind_) {
    case Kind::explicit_codes: return PeriodicSet::finite(codes_);
    case Kind::described: return set_;
    case Kind::generated: return std::nullopt;
  }
  return std::nullopt;
}

BranchSet BranchSet::intersect(const BranchSet& other) const {
  if (kind_ == Kind::described && other.kind_ == Kind::described)
    return described(ps_intersect(*set_, *other.set_));
  if (kind_ == Kind::explicit_codes || other.kind_ == Kind::explicit_codes) {
    const BranchSet& expl = kind_ == Kind::explicit_codes ? *this : other;
    const BranchSet& rest = kind_ == Kind::explicit_codes ? other : *this;
    std::vector<Code> out;
    for (Code c : expl.codes_)
      if (rest.contains(c)) out.push_back(c);
    return explicit_codes(std::move(out));
  }
  // generated with described/generated: probe-bounded enumeration
  BranchSet a = *this, b = other;
  Code hint = std::max(bound_hint_, other.bound_hint_);
  return generated(
      [a, b](Code bound) {
        std::vector<Code> out;
        for (Code c : a.codes_within(bound))
          if (b.contains(c)) out.push_back(c);
        return out;
      },
      hint);
}

BranchSet BranchSet::erase(const std::vector<Code>& codes) const {
  switch (kind_) {
    case Kind::explicit_codes: {
      std::vector<Code> out;
      for (Code c : codes_)
        if (std::find(codes.begin(), codes.end(), c) == codes.end()) out.push_back(c);
      return explicit_codes(std::move(out));
    }
    case Kind::described:
      return described(ps_difference(*set_, PeriodicSet::finite(codes)));
    case Kind::generated: {
      BranchSet self = *this;
      std::vector<Code> drop = codes;
      return generated(
          [self, drop](Code bound) {
            std::vector<Code> out;
            for (Code c : self.codes_within(bound))
              if (std::find(drop.begin(), drop.end(), c) == drop.end()) out.push_back(c);
            return out;
          },
          bound_hint_);
    }
  }
  return *this;
}

FilterAssignment FilterAssignment::constant(FilterOracle oracle) {
  return FilterAssignment{[oracle](const Approx&) { return oracle; }};
}

struct LazyTree::Memo {
  std::mutex mu;
  std::map<Approx, BranchSet> branches;
};

LazyTree::LazyTree(const Space& space, Approx stem, std::function<BranchSet(const Approx&)> rule)
    : space_(&space),
      stem_(std::move(stem)),
      rule_(std::move(rule)),
      memo_(std::make_shared<Memo>()) {
  if (!space_->node_valid(stem_)) throw std::invalid_argument("stem is not a valid node");
}

BranchSet LazyTree::branch(const Approx& node) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->branches.find(node);
    if (it != memo_->branches.end()) return it->second;
  }
  BranchSet raw = rule_(node);
  // Clip to structurally valid extension codes so Described rules may use
  // plain ground sets.
  BranchSet clipped = [&] {
    switch (raw.kind()) {
      case BranchSet::Kind::described:
        return BranchSet::described(
            ps_intersect(*raw.as_periodic(), space_->extension_code_universe(node)));
      case BranchSet::Kind::explicit_codes: {
        std::vector<Code> keep;
        for (Code c : raw.codes_within(UINT64_MAX))
          if (space_->can_append(node, c)) keep.push_back(c);
        return BranchSet::explicit_codes(std::move(keep));
      }
      case BranchSet::Kind::generated: {
        const Space* sp = space_;
        Approx n = node;
        BranchSet inner = raw;
        return BranchSet::generated(
            [sp, n, inner](Code bound) {
              std::vector<Code> out;
              for (Code c : inner.codes_within(bound))
                if (sp->can_append(n, c)) out.push_back(c);
              return out;
            },
            UINT64_MAX);
      }
    }
    return raw;
  }();
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto [it, inserted] = memo_->branches.emplace(node, std::move(clipped));
  (void)inserted;
  return it->second;
}

bool LazyTree::contains(const Approx& node) const {
  if (!space_->node_valid(node)) return false;
  if (node.size() <= stem_.size())
    return std::equal(node.begin(), node.end(), stem_.begin());
  if (!std::equal(stem_.begin(), stem_.end(), node.begin())) return false;
  Approx prefix(node.begin(), node.begin() + stem_.size());
  for (size_t i = stem_.size(); i < node.size(); ++i) {
    if (!branch(prefix).contains(node[i])) return false;
    prefix.push_back(node[i]);
  }
  return true;
}

std::vector<Approx> LazyTree::children(const Approx& node, Code bound) const {
  std::vector<Approx> out;
  for (Code c : branch(node).codes_within(bound)) {
    Approx child = node;
    child.push_back(c);
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<Approx> LazyTree::nodes_to_depth(uint64_t levels, Code bound) const {
  std::vector<Approx> out{stem_};
  size_t level_start = 0;
  for (uint64_t d = 0; d < levels; ++d) {
    size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i)
      for (Approx& child : children(out[i], bound)) out.push_back(std::move(child));
    level_start = level_end;
  }
  return out;
}

LazyTree LazyTree::restem(Approx new_stem) const {
  if (!contains(new_stem) || new_stem.size() < stem_.size())
    throw std::invalid_argument("new stem must be a node of the tree extending its stem");
  LazyTree t = *this;
  t.stem_ = std::move(new_stem);
  return t;
}

LazyTree full_tree(const Space& space) {
  return uniform_tree(space, {}, PeriodicSet::naturals());
}

LazyTree uniform_tree(const Space& space, Approx stem, PeriodicSet codes) {
  return LazyTree(space, std::move(stem),
                  [codes](const Approx&) { return BranchSet::described(codes); });
}

ValidationReport validate_filter_tree(const LazyTree& tree, const FilterAssignment& filters,
                                      uint64_t levels, Code bound) {
  ValidationReport report;
  std::vector<Approx> frontier{tree.stem()};
  for (uint64_t d = 0; d <= levels; ++d) {
    std::vector<Approx> next;
    for (const Approx& node : frontier) {
      BranchSet bs = tree.branch(node);
      std::optional<PeriodicSet> ps = bs.as_periodic();
      Tri verdict = ps ? filters.at(node).large(*ps) : Tri::unknown;
      report.nodes_checked++;
      if (verdict == Tri::no) {
        report.verdict = Tri::no;
        report.witness = node;
        return report;
      }
      if (verdict == Tri::unknown && report.verdict == Tri::yes) {
        report.verdict = Tri::unknown;
        report.witness = node;
      }
      if (d < levels)
        for (Approx& child : tree.children(node, bound)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }
  return report;
}

IntersectionResult intersect_trees(const LazyTree& s, const LazyTree& t, uint64_t levels) {
  (void)levels;
  if (&s.space() != &t.space()) throw std::invalid_argument("trees live in different spaces");
  const Approx& st_s = s.stem();
  const Approx& st_t = t.stem();

  auto is_prefix = [](const Approx& a, const Approx& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  };

  const LazyTree* deeper = nullptr;
  if (is_prefix(st_t, st_s) && t.contains(st_s)) {
    deeper = &s;
  } else if (is_prefix(st_s, st_t) && s.contains(st_t)) {
    deeper = &t;
  } else {
    return IntersectionResult{std::nullopt};
  }

  LazyTree a = s, b = t;
  Approx stem = deeper->stem();
  LazyTree merged(s.space(), stem,
                  [a, b](const Approx& node) { return a.branch(node).intersect(b.branch(node)); });
  return IntersectionResult{std::move(merged)};
}

}  // namespace rf
