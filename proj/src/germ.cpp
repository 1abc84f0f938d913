#include "ramseyforge/germ.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ramseyforge/errors.hpp"

namespace rf {
namespace {

constexpr uint64_t kPeriodCap = uint64_t{1} << 16;

int64_t checked_i64(uint64_t v, const char* what) {
  if (v > uint64_t(INT64_MAX)) throw std::overflow_error(what);
  return int64_t(v);
}

}  // namespace

struct Germ::StreamRep {
  std::function<uint64_t(uint64_t)> values;
  std::function<PeriodicSet(uint64_t)> chain;
  uint64_t probe_depth = 0;
  mutable std::mutex mu;
  mutable std::vector<uint64_t> cache;

  uint64_t at(uint64_t i) const {
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= i) {
      uint64_t v = values(cache.size());
      if (!cache.empty() && v <= cache.back())
        throw std::logic_error("stream germ generator is not strictly increasing");
      cache.push_back(v);
    }
    return cache[i];
  }
};

Germ Germ::standard(uint64_t value) {
  Germ g;
  g.kind_ = Kind::standard;
  g.value_ = value;
  g.period_ = 1;
  g.onset_ = 0;
  g.base_ = {value};
  g.drift_ = {0};
  g.anchor_ = {checked_i64(value, "standard germ value overflow")};
  return g;
}

Germ Germ::quasi_linear(uint64_t period, std::vector<uint64_t> base, std::vector<uint64_t> drift,
                        uint64_t onset) {
  if (period == 0 || period > kPeriodCap) throw std::invalid_argument("bad germ period");
  if (base.size() != period || drift.size() != period)
    throw std::invalid_argument("base/drift length must equal the period");
  std::vector<int64_t> anchor(period);
  for (uint64_t r = 0; r < period; ++r) {
    // First index >= onset congruent to r.
    uint64_t off = (r + period - onset % period) % period;
    uint64_t ir = onset + off;
    anchor[r] = checked_i64(base[r], "germ base overflow") -
                int64_t(drift[r]) * int64_t(ir / period);
  }
  Germ g;
  g.rebuild_from_tail(period, std::move(anchor), std::move(drift), onset);
  return g;
}

Germ Germ::identity() { return affine(1, 0); }

Germ Germ::affine(uint64_t a, uint64_t b) { return quasi_linear(1, {b}, {a}, 0); }

Germ Germ::stream(std::function<uint64_t(uint64_t)> values,
                  std::function<PeriodicSet(uint64_t)> witness_chain, uint64_t chain_probe_depth) {
  Germ g;
  g.kind_ = Kind::stream;
  g.stream_ = std::make_shared<StreamRep>();
  g.stream_->values = std::move(values);
  g.stream_->chain = std::move(witness_chain);
  g.stream_->probe_depth = chain_probe_depth;
  return g;
}

void Germ::rebuild_from_tail(uint64_t period, std::vector<int64_t> anchor,
                             std::vector<uint64_t> drift, uint64_t steady_from) {
  auto tail_value = [&](uint64_t i) {
    return anchor[i % period] + int64_t(drift[i % period]) * int64_t(i / period);
  };

  // Minimal period: the smallest q such that the tail is eventually
  // quasi-linear with period q. A candidate q works iff the drift array is
  // invariant under a cyclic shift by q and i -> value(i+q) - value(i) is
  // constant on every residue class mod q across one lcm window; both
  // conditions are exact for the tail form, not sampled heuristics.
  for (uint64_t q = 1; q < period; ++q) {
    bool shift_ok = true;
    for (uint64_t r = 0; r < period && shift_ok; ++r)
      shift_ok = (drift[(r + q) % period] == drift[r]);
    if (!shift_ok) continue;

    uint64_t l = std::lcm(period, q);
    std::vector<int64_t> delta(q);
    std::vector<bool> seen(q, false);
    bool constant_ok = true;
    for (uint64_t i = steady_from; i < steady_from + l && constant_ok; ++i) {
      int64_t d = tail_value(i + q) - tail_value(i);
      uint64_t cls = i % q;
      if (!seen[cls]) {
        seen[cls] = true;
        delta[cls] = d;
      } else if (delta[cls] != d) {
        constant_ok = false;
      }
    }
    if (!constant_ok) continue;
    for (uint64_t cls = 0; cls < q && constant_ok; ++cls)
      constant_ok = seen[cls] && delta[cls] >= 0;
    if (!constant_ok) continue;

    std::vector<int64_t> new_anchor(q);
    std::vector<uint64_t> new_drift(q);
    for (uint64_t cls = 0; cls < q; ++cls) {
      new_drift[cls] = uint64_t(delta[cls]);
      uint64_t off = (cls + q - steady_from % q) % q;
      uint64_t i0 = steady_from + off;
      new_anchor[cls] = tail_value(i0) - delta[cls] * int64_t(i0 / q);
    }
    period = q;
    anchor = std::move(new_anchor);
    drift = std::move(new_drift);
    break;
  }

  if (period == 1 && drift[0] == 0) {
    if (anchor[0] < 0) throw std::invalid_argument("germ tail is negative");
    *this = standard(uint64_t(anchor[0]));
    return;
  }

  // Minimal onset: first index from which every tail value is a natural.
  uint64_t onset = 0;
  for (uint64_t r = 0; r < period; ++r) {
    if (anchor[r] >= 0) continue;
    if (drift[r] == 0) throw std::invalid_argument("germ tail is negative");
    uint64_t q_min = uint64_t((-anchor[r] + int64_t(drift[r]) - 1) / int64_t(drift[r]));
    uint64_t last_bad = (q_min - 1) * period + r;
    onset = std::max(onset, last_bad + 1);
  }

  kind_ = Kind::quasi_linear;
  period_ = period;
  onset_ = onset;
  anchor_ = std::move(anchor);
  drift_ = std::move(drift);
  base_.assign(period_, 0);
  for (uint64_t r = 0; r < period_; ++r) {
    uint64_t off = (r + period_ - onset_ % period_) % period_;
    uint64_t ir = onset_ + off;
    int64_t v = anchor_[r] + int64_t(drift_[r]) * int64_t(ir / period_);
    assert(v >= 0);
    base_[r] = uint64_t(v);
  }
  stream_.reset();
}

uint64_t Germ::value_at(uint64_t i) const {
  switch (kind_) {
    case Kind::standard: return value_;
    case Kind::stream: return stream_->at(i);
    case Kind::quasi_linear: {
      if (i < onset_) return base_[i % period_];
      int64_t v = anchor_[i % period_] + int64_t(drift_[i % period_]) * int64_t(i / period_);
      assert(v >= 0);
      return uint64_t(v);
    }
  }
  return 0;
}

bool Germ::is_nonstandard() const {
  switch (kind_) {
    case Kind::standard: return false;
    case Kind::stream: return true;
    case Kind::quasi_linear:
      return std::all_of(drift_.begin(), drift_.end(), [](uint64_t d) { return d > 0; });
  }
  return false;
}

uint64_t Germ::standard_value() const {
  if (kind_ != Kind::standard) throw std::logic_error("not a standard germ");
  return value_;
}

bool Germ::operator==(const Germ& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::standard: return value_ == other.value_;
    case Kind::stream: return stream_ == other.stream_;
    case Kind::quasi_linear:
      return period_ == other.period_ && onset_ == other.onset_ && base_ == other.base_ &&
             drift_ == other.drift_;
  }
  return false;
}

Tri germ_eq(const Germ& phi, const Germ& psi) {
  if (phi.is_stream() || psi.is_stream())
    throw unsupported_capability("stream-backed germs support only membership queries");
  if (phi.is_standard() && psi.is_standard())
    return phi.standard_value() == psi.standard_value() ? Tri::yes : Tri::no;

  uint64_t p = std::lcm(phi.period_, psi.period_);
  if (p > kPeriodCap) throw std::overflow_error("germ comparison period overflow");
  uint64_t start = std::max(phi.onset_, psi.onset_);

  // On each index class mod p both germs are affine in the step count, so the
  // agreement set restricted to a class is all of the tail or finite.
  size_t classes_all = 0;
  for (uint64_t r = 0; r < p; ++r) {
    uint64_t off = (r + p - start % p) % p;
    uint64_t ir = start + off;
    int64_t a_phi = int64_t(phi.value_at(ir));
    int64_t a_psi = int64_t(psi.value_at(ir));
    uint64_t b_phi = phi.drift_[ir % phi.period_] * (p / phi.period_);
    uint64_t b_psi = psi.drift_[ir % psi.period_] * (p / psi.period_);
    if (b_phi == b_psi && a_phi == a_psi) classes_all++;
  }
  if (classes_all == p) return Tri::yes;
  if (classes_all == 0) return Tri::no;
  return Tri::unknown;
}

namespace {

enum class ClassVerdict { all, none, mixed };

ClassVerdict membership_on_progression(int64_t a, uint64_t b, const PeriodicSet& x) {
  if (b == 0) return x.contains(uint64_t(a)) ? ClassVerdict::all : ClassVerdict::none;
  uint64_t max_exc = 0;
  if (!x.plus_exceptions().empty()) max_exc = std::max(max_exc, x.plus_exceptions().back());
  if (!x.minus_exceptions().empty()) max_exc = std::max(max_exc, x.minus_exceptions().back());
  // Skip past the exceptions, then one full window of the set's modulus
  // covers the eventual membership pattern of a + b*k.
  uint64_t k0 = 0;
  if (int64_t(max_exc) >= a) k0 = uint64_t((int64_t(max_exc) - a) / int64_t(b)) + 1;
  uint64_t m = x.modulus();
  uint64_t hits = 0;
  for (uint64_t k = k0; k < k0 + m; ++k) {
    int64_t v = a + int64_t(b) * int64_t(k);
    assert(v > int64_t(max_exc));
    bool core = std::binary_search(x.residues().begin(), x.residues().end(),
                                   uint64_t(v) % x.modulus());
    if (core) hits++;
  }
  if (hits == m) return ClassVerdict::all;
  if (hits == 0) return ClassVerdict::none;
  return ClassVerdict::mixed;
}

}  // namespace

Tri germ_member(const Germ& phi, const PeriodicSet& x) {
  if (phi.is_stream()) {
    if (x.is_finite()) return Tri::no;  // stream values are strictly increasing
    if (x.is_cofinite()) return Tri::yes;
    auto& rep = *phi.stream_;
    if (rep.chain) {
      for (uint64_t i = 0; i < rep.probe_depth; ++i) {
        PeriodicSet xi = rep.chain(i);
        if (xi.is_subset_of(x)) return Tri::yes;
        if (ps_intersect(xi, x).is_finite()) return Tri::no;
      }
    }
    return Tri::unknown;
  }
  if (phi.is_standard()) return x.contains(phi.standard_value()) ? Tri::yes : Tri::no;

  size_t all = 0, none = 0;
  uint64_t p = phi.period_;
  for (uint64_t r = 0; r < p; ++r) {
    uint64_t off = (r + p - phi.onset_ % p) % p;
    uint64_t ir = phi.onset_ + off;
    switch (membership_on_progression(int64_t(phi.value_at(ir)), phi.drift_[r], x)) {
      case ClassVerdict::all: all++; break;
      case ClassVerdict::none: none++; break;
      case ClassVerdict::mixed: return Tri::unknown;
    }
  }
  if (all == p) return Tri::yes;
  if (none == p) return Tri::no;
  return Tri::unknown;
}

Germ germ_apply_affine(uint64_t u, uint64_t v, const Germ& phi) {
  if (phi.is_stream())
    throw unsupported_capability("stream-backed germs support only membership queries");
  if (phi.is_standard()) return Germ::standard(u * phi.standard_value() + v);
  std::vector<int64_t> anchor(phi.period_);
  std::vector<uint64_t> drift(phi.period_);
  for (uint64_t r = 0; r < phi.period_; ++r) {
    anchor[r] = int64_t(u) * phi.anchor_[r] + int64_t(v);
    drift[r] = u * phi.drift_[r];
  }
  Germ g;
  g.rebuild_from_tail(phi.period_, std::move(anchor), std::move(drift), phi.onset_);
  return g;
}

bool assert_infinite_if_member(const Germ& phi, const PeriodicSet& x) {
  if (!phi.is_nonstandard()) throw std::invalid_argument("germ must be nonstandard");
  if (germ_member(phi, x) != Tri::yes) return true;
  return x.is_infinite();
}

namespace {

struct TextCursor {
  std::string_view s;
  size_t pos = 0;

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error(std::string("expected '") + c + "' in germ literal");
  }
  bool eat_word(std::string_view w) {
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  uint64_t number() {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw parse_error("expected number in germ literal");
    uint64_t v = 0;
    for (size_t i = start; i < pos; ++i) v = v * 10 + uint64_t(s[i] - '0');
    return v;
  }
  std::vector<uint64_t> list() {
    expect('[');
    std::vector<uint64_t> out;
    if (eat(']')) return out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    expect(']');
    return out;
  }
};

}  // namespace

std::string Germ::to_text() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::standard: os << "std:" << value_; break;
    case Kind::stream: os << "stream:increasing"; break;
    case Kind::quasi_linear: {
      os << "ql:p=" << period_ << ";base=[";
      for (uint64_t r = 0; r < period_; ++r) os << (r ? "," : "") << base_[r];
      os << "];drift=[";
      for (uint64_t r = 0; r < period_; ++r) os << (r ? "," : "") << drift_[r];
      os << "];onset=" << onset_;
      break;
    }
  }
  return os.str();
}

Germ Germ::parse(std::string_view text) {
  TextCursor c{text};
  if (c.eat_word("std:")) {
    uint64_t v = c.number();
    if (c.pos != text.size()) throw parse_error("trailing input after germ literal");
    return standard(v);
  }
  if (!c.eat_word("ql:")) throw parse_error("germ literal must start with 'std:' or 'ql:'");
  if (!c.eat_word("p=")) throw parse_error("germ literal needs p=");
  uint64_t p = c.number();
  c.expect(';');
  if (!c.eat_word("base=")) throw parse_error("germ literal needs base=");
  std::vector<uint64_t> base = c.list();
  c.expect(';');
  if (!c.eat_word("drift=")) throw parse_error("germ literal needs drift=");
  std::vector<uint64_t> drift = c.list();
  c.expect(';');
  if (!c.eat_word("onset=")) throw parse_error("germ literal needs onset=");
  uint64_t onset = c.number();
  if (c.pos != text.size()) throw parse_error("trailing input after germ literal");
  if (p == 0 || base.size() != p || drift.size() != p)
    throw parse_error("germ base/drift length must equal the period");
  return quasi_linear(p, std::move(base), std::move(drift), onset);
}

}  // namespace rf
