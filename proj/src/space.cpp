#include "ramseyforge/space.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

#include "ramseyforge/errors.hpp"

namespace rf {

uint64_t code_min_element(Code c) {
  assert(c != 0);
  return uint64_t(__builtin_ctzll(c));
}

uint64_t code_max_element(Code c) {
  assert(c != 0);
  return 63 - uint64_t(__builtin_clzll(c));
}

struct Real::Rep {
  std::function<Code(const std::vector<Code>&)> produce;
  std::optional<PeriodicSet> ground;
  mutable std::mutex mu;
  mutable std::vector<Code> cache;

  Code at(uint64_t i) const {
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= i) cache.push_back(produce(cache));
    return cache[i];
  }
};

Code Real::code_at(uint64_t i) const { return rep_->at(i); }

Approx Real::prefix(uint64_t n) const {
  Approx out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(code_at(i));
  return out;
}

const std::optional<PeriodicSet>& Real::ground() const { return rep_->ground; }

Real Real::from_ground(const Space& space, PeriodicSet ground) {
  if (space.kind() != Space::Kind::ellentuck)
    throw std::invalid_argument("ground-set reals are Ellentuck streams");
  if (ground.is_finite()) throw std::invalid_argument("a real needs an infinite ground set");
  auto rep = std::make_shared<Rep>();
  PeriodicSet g = ground;
  rep->produce = [g](const std::vector<Code>& cache) {
    std::optional<uint64_t> v = cache.empty() ? g.min_element() : g.next_after(cache.back());
    assert(v.has_value());
    return *v;
  };
  rep->ground = std::move(ground);
  return Real(&space, std::move(rep));
}

Real Real::from_generator(const Space& space, std::function<Code(uint64_t)> gen) {
  auto rep = std::make_shared<Rep>();
  bool milliken = space.kind() == Space::Kind::milliken;
  rep->produce = [gen, milliken](const std::vector<Code>& cache) {
    Code c = gen(cache.size());
    if (milliken) {
      if (c == 0) throw std::logic_error("milliken block must be nonempty");
      if (!cache.empty() && code_min_element(c) <= code_max_element(cache.back()))
        throw std::logic_error("milliken blocks must be increasing");
    } else if (!cache.empty() && c <= cache.back()) {
      throw std::logic_error("ellentuck stream must be strictly increasing");
    }
    return c;
  };
  return Real(&space, std::move(rep));
}

Real Real::naturals() { return from_ground(Space::ellentuck(), PeriodicSet::naturals()); }

Real Real::singleton_blocks() {
  Real r = from_generator(Space::milliken(), [](uint64_t i) {
    if (i >= 63) throw std::overflow_error("singleton block index too large");
    return Code{1} << i;
  });
  // FU of the singletons is every nonempty bitmask.
  r.rep_->ground = PeriodicSet::tail(1);
  return r;
}

namespace {

uint64_t node_max_element(const Approx& s, Space::Kind kind) {
  assert(!s.empty());
  if (kind == Space::Kind::ellentuck) return s.back();
  return code_max_element(s.back());
}

class EllentuckSpace final : public Space {
 public:
  Kind kind() const override { return Kind::ellentuck; }
  std::string_view name() const override { return "ellentuck"; }

  bool node_valid(const Approx& s) const override {
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] >= s[i + 1]) return false;
    return true;
  }

  bool can_append(const Approx& s, Code c) const override {
    return s.empty() || c > s.back();
  }

  PeriodicSet extension_code_universe(const Approx& s) const override {
    return s.empty() ? PeriodicSet::naturals() : PeriodicSet::tail(s.back() + 1);
  }

  bool lefin(const Approx& s, const Approx& t) const override {
    // subset of t's elements
    return std::includes(t.begin(), t.end(), s.begin(), s.end());
  }

  std::vector<Approx> lefin_downset(const Approx& s) const override {
    std::vector<Approx> out;
    uint64_t n = s.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      Approx t;
      for (uint64_t i = 0; i < n; ++i)
        if (mask & (uint64_t{1} << i)) t.push_back(s[i]);
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool compatible(const Approx& s, const Real& x, uint64_t probe) const override {
    if (!node_valid(s)) return false;
    if (s.empty()) return true;
    if (x.ground()) {
      for (Code c : s)
        if (!x.ground()->contains(c)) return false;
      return true;
    }
    size_t matched = 0;
    for (uint64_t i = 0; i < probe && matched < s.size(); ++i) {
      Code c = x.code_at(i);
      if (c == s[matched]) matched++;
      if (c > s.back()) break;
    }
    return matched == s.size();
  }

  std::vector<Code> extension_codes(const Approx& s, const Real& x, Code bound) const override {
    std::vector<Code> out;
    uint64_t lo = s.empty() ? 0 : s.back() + 1;
    if (x.ground()) {
      for (Code c = lo; c <= bound; ++c)
        if (x.ground()->contains(c)) out.push_back(c);
      return out;
    }
    for (uint64_t i = 0;; ++i) {
      Code c = x.code_at(i);
      if (c > bound) break;
      if (c >= lo) out.push_back(c);
    }
    return out;
  }

  Real splice(const Real& y, uint64_t depth, const Real& x) const override {
    Approx head = y.prefix(depth);
    uint64_t cut = head.empty() ? 0 : head.back() + 1;
    if (x.ground() && y.ground()) {
      PeriodicSet g = ps_union(PeriodicSet::finite(head),
                               ps_intersect(*x.ground(), PeriodicSet::tail(cut)));
      return Real::from_ground(*this, std::move(g));
    }
    return Real::from_generator(*this, [head, cut, x](uint64_t i) {
      if (i < head.size()) return head[i];
      uint64_t skip = i - head.size();
      for (uint64_t j = 0;; ++j) {
        Code c = x.code_at(j);
        if (c >= cut) {
          if (skip == 0) return c;
          skip--;
        }
      }
    });
  }
};

class MillikenSpace final : public Space {
 public:
  Kind kind() const override { return Kind::milliken; }
  std::string_view name() const override { return "milliken"; }

  bool node_valid(const Approx& s) const override {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) return false;
      if (i + 1 < s.size() && code_max_element(s[i]) >= code_min_element(s[i + 1])) return false;
    }
    return true;
  }

  bool can_append(const Approx& s, Code c) const override {
    if (c == 0) return false;
    return s.empty() || code_min_element(c) > code_max_element(s.back());
  }

  PeriodicSet extension_code_universe(const Approx& s) const override {
    if (s.empty()) return PeriodicSet::tail(1);
    uint64_t m = code_max_element(s.back());
    if (m + 1 >= 34) throw std::overflow_error("milliken ground too large to describe");
    // nonzero bitmasks whose lowest element exceeds m
    return PeriodicSet::make(uint64_t{1} << (m + 1), {0}, {}, {0});
  }

  bool lefin(const Approx& s, const Approx& t) const override {
    // every block of s is a union of blocks of t
    for (Code b : s) {
      Code covered = 0;
      for (Code tb : t) {
        if (tb & b) {
          if (tb & ~b) return false;
          covered |= tb;
        }
      }
      if (covered != b) return false;
    }
    return true;
  }

  std::vector<Approx> lefin_downset(const Approx& s) const override {
    std::vector<Approx> out;
    Approx current;
    enumerate_downset(s, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool compatible(const Approx& s, const Real& x, uint64_t probe) const override {
    if (!node_valid(s)) return false;
    if (s.empty()) return true;
    uint64_t top = node_max_element(s, Kind::milliken);
    Approx avail;
    for (uint64_t i = 0; i < probe; ++i) {
      Code b = x.code_at(i);
      avail.push_back(b);
      if (code_min_element(b) > top) break;
    }
    return lefin(s, avail);
  }

  std::vector<Code> extension_codes(const Approx& s, const Real& x, Code bound) const override {
    uint64_t lo = s.empty() ? 0 : node_max_element(s, Kind::milliken) + 1;
    std::vector<Code> blocks;
    for (uint64_t i = 0;; ++i) {
      Code b = x.code_at(i);
      if (code_max_element(b) > bound) break;
      if (code_min_element(b) >= lo) blocks.push_back(b);
      if (blocks.size() >= 16) break;  // 2^16 unions is already past desk scale
    }
    std::vector<Code> out;
    for (uint64_t mask = 1; mask < (uint64_t{1} << blocks.size()); ++mask) {
      Code u = 0;
      for (size_t j = 0; j < blocks.size(); ++j)
        if (mask & (uint64_t{1} << j)) u |= blocks[j];
      out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Real splice(const Real& y, uint64_t depth, const Real& x) const override {
    Approx head = y.prefix(depth);
    uint64_t cut = head.empty() ? 0 : node_max_element(head, Kind::milliken) + 1;
    return Real::from_generator(*this, [head, cut, x](uint64_t i) {
      if (i < head.size()) return head[i];
      uint64_t skip = i - head.size();
      for (uint64_t j = 0;; ++j) {
        Code b = x.code_at(j);
        if (code_min_element(b) >= cut) {
          if (skip == 0) return b;
          skip--;
        }
      }
    });
  }

 private:
  static void enumerate_downset(const Approx& s, size_t from, Approx& current,
                                std::vector<Approx>& out) {
    out.push_back(current);
    // Next block of a <=_fin-below node: any nonempty union of the remaining
    // source blocks; blocks skipped over are unusable afterwards because the
    // block ordering would break.
    std::vector<Code> avail(s.begin() + from, s.end());
    for (uint64_t mask = 1; mask < (uint64_t{1} << avail.size()); ++mask) {
      Code u = 0;
      size_t last = 0;
      for (size_t j = 0; j < avail.size(); ++j)
        if (mask & (uint64_t{1} << j)) {
          u |= avail[j];
          last = j;
        }
      current.push_back(u);
      enumerate_downset(s, from + last + 1, current, out);
      current.pop_back();
    }
  }
};

}  // namespace

const Space& Space::ellentuck() {
  static const EllentuckSpace instance;
  return instance;
}

const Space& Space::milliken() {
  static const MillikenSpace instance;
  return instance;
}

const Space& Space::by_name(std::string_view name) {
  if (name == "ellentuck") return ellentuck();
  if (name == "milliken") return milliken();
  throw parse_error("unknown space: " + std::string(name));
}

std::string Space::format_node(const Approx& s) const {
  std::ostringstream os;
  if (kind() == Kind::ellentuck) {
    os << '{';
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
  }
  os << '(';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << '{';
    bool first = true;
    for (uint64_t e = 0; e < 64; ++e)
      if (s[i] & (uint64_t{1} << e)) {
        os << (first ? "" : ",") << e;
        first = false;
      }
    os << '}';
  }
  os << ')';
  return os.str();
}

Approx rn(const Real& x, uint64_t n) { return x.prefix(n); }

DepthResult depth(const Real& x, const Approx& s, uint64_t horizon) {
  const Space& sp = x.space();
  for (uint64_t i = 0; i <= horizon; ++i)
    if (sp.lefin(s, x.prefix(i))) return DepthResult{i, horizon};
  return DepthResult{std::nullopt, horizon};
}

std::vector<Approx> extensions(const Space& space, const Approx& s, const Real& x, Code bound) {
  if (!space.compatible(s, x)) throw empty_cube("[s,X] is empty: " + space.format_node(s));
  std::vector<Approx> out;
  for (Code c : space.extension_codes(s, x, bound)) {
    Approx t = s;
    t.push_back(c);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace rf
