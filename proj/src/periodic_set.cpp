#include "ramseyforge/periodic_set.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "ramseyforge/errors.hpp"

namespace rf {
namespace {

// Combined moduli stay tiny at desk scale; the cap catches runaway lcm growth.
constexpr uint64_t kModulusCap = uint64_t{1} << 34;

void sort_unique(std::vector<uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<uint64_t>& v, uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

uint64_t lcm_checked(uint64_t a, uint64_t b) {
  uint64_t g = std::gcd(a, b);
  uint64_t l = a / g;
  if (l > kModulusCap / b) throw std::overflow_error("periodic set modulus overflow");
  return l * b;
}

bool apply_op(SetOp op, bool x, bool y) {
  switch (op) {
    case SetOp::union_: return x || y;
    case SetOp::intersect: return x && y;
    case SetOp::difference: return x && !y;
  }
  return false;
}

}  // namespace

PeriodicSet::PeriodicSet() = default;

PeriodicSet::PeriodicSet(uint64_t modulus, std::vector<uint64_t> residues,
                         std::vector<uint64_t> plus, std::vector<uint64_t> minus)
    : modulus_(modulus),
      residues_(std::move(residues)),
      plus_(std::move(plus)),
      minus_(std::move(minus)) {
  normalize();
}

PeriodicSet PeriodicSet::make(uint64_t modulus, std::vector<uint64_t> residues,
                              std::vector<uint64_t> plus, std::vector<uint64_t> minus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (modulus > kModulusCap) throw std::overflow_error("modulus exceeds cap");
  for (uint64_t r : residues)
    if (r >= modulus) throw std::invalid_argument("residue out of range");
  return PeriodicSet(modulus, std::move(residues), std::move(plus), std::move(minus));
}

PeriodicSet PeriodicSet::naturals() { return make(1, {0}, {}, {}); }
PeriodicSet PeriodicSet::empty() { return PeriodicSet(); }

PeriodicSet PeriodicSet::finite(std::vector<uint64_t> elements) {
  return make(1, {}, std::move(elements), {});
}

PeriodicSet PeriodicSet::multiples_of(uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiples_of(0)");
  return make(m, {0}, {}, {});
}

PeriodicSet PeriodicSet::tail(uint64_t from) {
  std::vector<uint64_t> cut(from);
  std::iota(cut.begin(), cut.end(), 0);
  return make(1, {0}, {}, std::move(cut));
}

PeriodicSet PeriodicSet::residue_classes(uint64_t modulus, std::vector<uint64_t> residues) {
  return make(modulus, std::move(residues), {}, {});
}

void PeriodicSet::normalize() {
  sort_unique(residues_);
  sort_unique(plus_);
  sort_unique(minus_);

  // Semantics of the incoming four fields, before re-normalization.
  auto raw_contains = [this](uint64_t n) {
    bool core = sorted_contains(residues_, n % modulus_);
    if (sorted_contains(plus_, n)) return true;
    if (sorted_contains(minus_, n)) return false;
    return core;
  };

  // Minimal period of the core: smallest divisor d of modulus_ with the
  // residue indicator d-periodic.
  std::vector<char> ind(modulus_, 0);
  for (uint64_t r : residues_) ind[r] = 1;
  uint64_t d = modulus_;
  for (uint64_t cand = 1; cand <= modulus_ / 2; ++cand) {
    if (modulus_ % cand != 0) continue;
    bool ok = true;
    for (uint64_t i = cand; i < modulus_ && ok; ++i) ok = (ind[i] == ind[i % cand]);
    if (ok) {
      d = cand;
      break;
    }
  }

  std::vector<uint64_t> new_res;
  for (uint64_t r = 0; r < d; ++r)
    if (ind[r]) new_res.push_back(r);

  // Re-sift exceptions against the minimal core.
  uint64_t max_exc = 0;
  bool any_exc = !plus_.empty() || !minus_.empty();
  if (!plus_.empty()) max_exc = std::max(max_exc, plus_.back());
  if (!minus_.empty()) max_exc = std::max(max_exc, minus_.back());

  std::vector<uint64_t> new_plus, new_minus;
  if (any_exc) {
    for (uint64_t x = 0; x <= max_exc; ++x) {
      bool actual = raw_contains(x);
      bool core = sorted_contains(new_res, x % d);
      if (actual && !core) new_plus.push_back(x);
      if (!actual && core) new_minus.push_back(x);
    }
  }

  modulus_ = d;
  residues_ = std::move(new_res);
  plus_ = std::move(new_plus);
  minus_ = std::move(new_minus);
}

bool PeriodicSet::contains(uint64_t n) const {
  if (sorted_contains(plus_, n)) return true;
  if (sorted_contains(minus_, n)) return false;
  return sorted_contains(residues_, n % modulus_);
}

bool PeriodicSet::is_finite() const { return residues_.empty(); }

bool PeriodicSet::is_cofinite() const { return modulus_ == 1 && residues_.size() == 1; }

bool PeriodicSet::is_empty() const { return residues_.empty() && plus_.empty(); }

bool PeriodicSet::is_subset_of(const PeriodicSet& other) const {
  return ps_difference(*this, other).is_empty();
}

std::optional<uint64_t> PeriodicSet::next_geq(uint64_t from) const {
  if (is_finite()) {
    auto it = std::lower_bound(plus_.begin(), plus_.end(), from);
    if (it == plus_.end()) return std::nullopt;
    return *it;
  }
  uint64_t max_exc = 0;
  if (!plus_.empty()) max_exc = std::max(max_exc, plus_.back());
  if (!minus_.empty()) max_exc = std::max(max_exc, minus_.back());
  // Beyond the exceptions the set is purely periodic with a nonempty residue
  // pattern, so a window of one extra modulus always contains an element.
  uint64_t top = std::max(from, max_exc + 1) + modulus_;
  for (uint64_t x = from; x <= top; ++x)
    if (contains(x)) return x;
  assert(false && "infinite periodic set must have an element in the window");
  return std::nullopt;
}

std::vector<uint64_t> PeriodicSet::elements_upto(uint64_t bound) const {
  std::vector<uint64_t> out;
  for (uint64_t x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

PeriodicSet PeriodicSet::complement() const {
  return ps_difference(naturals(), *this);
}

bool PeriodicSet::operator==(const PeriodicSet& other) const {
  return modulus_ == other.modulus_ && residues_ == other.residues_ && plus_ == other.plus_ &&
         minus_ == other.minus_;
}

bool PeriodicSet::operator<(const PeriodicSet& other) const {
  if (modulus_ != other.modulus_) return modulus_ < other.modulus_;
  if (residues_ != other.residues_) return residues_ < other.residues_;
  if (plus_ != other.plus_) return plus_ < other.plus_;
  return minus_ < other.minus_;
}

PeriodicSet ps_combine(SetOp op, const PeriodicSet& a, const PeriodicSet& b) {
  uint64_t l = lcm_checked(a.modulus(), b.modulus());
  std::vector<uint64_t> res;
  for (uint64_t r = 0; r < l; ++r) {
    bool in_a = std::binary_search(a.residues().begin(), a.residues().end(), r % a.modulus());
    bool in_b = std::binary_search(b.residues().begin(), b.residues().end(), r % b.modulus());
    if (apply_op(op, in_a, in_b)) res.push_back(r);
  }
  // The result differs from its core only where an operand differs from its
  // own core, so the operands' exception points are the only candidates.
  std::vector<uint64_t> candidates;
  for (const auto* v : {&a.plus_exceptions(), &a.minus_exceptions(), &b.plus_exceptions(),
                        &b.minus_exceptions()})
    candidates.insert(candidates.end(), v->begin(), v->end());
  sort_unique(candidates);

  std::vector<uint64_t> plus, minus;
  for (uint64_t x : candidates) {
    bool actual = apply_op(op, a.contains(x), b.contains(x));
    bool core = std::binary_search(res.begin(), res.end(), x % l);
    if (actual && !core) plus.push_back(x);
    if (!actual && core) minus.push_back(x);
  }
  return PeriodicSet::make(l, std::move(res), std::move(plus), std::move(minus));
}

PeriodicSet ps_union(const PeriodicSet& a, const PeriodicSet& b) {
  return ps_combine(SetOp::union_, a, b);
}
PeriodicSet ps_intersect(const PeriodicSet& a, const PeriodicSet& b) {
  return ps_combine(SetOp::intersect, a, b);
}
PeriodicSet ps_difference(const PeriodicSet& a, const PeriodicSet& b) {
  return ps_combine(SetOp::difference, a, b);
}

namespace {

void append_list(std::ostringstream& os, const std::vector<uint64_t>& v) {
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
}

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error(std::string("expected '") + c + "' in set literal");
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  uint64_t number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw parse_error("expected number in set literal");
    uint64_t v = 0;
    for (size_t i = start; i < pos; ++i) {
      if (v > (UINT64_MAX - 9) / 10) throw parse_error("number too large");
      v = v * 10 + uint64_t(s[i] - '0');
    }
    return v;
  }
  std::vector<uint64_t> list() {
    expect('[');
    std::vector<uint64_t> out;
    skip_ws();
    if (eat(']')) return out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    expect(']');
    return out;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

}  // namespace

std::string PeriodicSet::to_text() const {
  std::ostringstream os;
  os << "mod=" << modulus_ << "; res=";
  append_list(os, residues_);
  os << "; plus=";
  append_list(os, plus_);
  os << "; minus=";
  append_list(os, minus_);
  return os.str();
}

PeriodicSet PeriodicSet::parse(std::string_view text) {
  Cursor c{text};
  if (!c.eat_word("mod")) throw parse_error("set literal must start with 'mod='");
  c.expect('=');
  uint64_t modulus = c.number();
  c.expect(';');
  if (!c.eat_word("res")) throw parse_error("set literal needs 'res=[..]'");
  c.expect('=');
  std::vector<uint64_t> res = c.list();
  std::vector<uint64_t> plus, minus;
  while (c.eat(';')) {
    if (c.done()) break;
    if (c.eat_word("plus")) {
      c.expect('=');
      plus = c.list();
    } else if (c.eat_word("minus")) {
      c.expect('=');
      minus = c.list();
    } else {
      throw parse_error("unknown field in set literal");
    }
  }
  if (!c.done()) throw parse_error("trailing input after set literal");
  if (modulus == 0) throw parse_error("modulus must be positive");
  for (uint64_t r : res)
    if (r >= modulus) throw parse_error("residue out of range");
  return make(modulus, std::move(res), std::move(plus), std::move(minus));
}

}  // namespace rf
