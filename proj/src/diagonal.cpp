#include "ramseyforge/diagonal.hpp"

#include <algorithm>
#include <cassert>

#include "ramseyforge/errors.hpp"

namespace rf {

Chain::Chain(std::vector<PeriodicSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw std::invalid_argument("chain must be nonempty");
}

Chain::Chain(std::function<PeriodicSet(uint64_t)> generator) : gen_(std::move(generator)) {
  if (!gen_) throw std::invalid_argument("chain generator must be callable");
}

PeriodicSet Chain::at(uint64_t i) const {
  if (!sets_.empty()) return sets_[std::min<uint64_t>(i, sets_.size() - 1)];
  return gen_(i);
}

namespace {

void validate_chain_prefix(const std::function<PeriodicSet(uint64_t)>& at, uint64_t count) {
  PeriodicSet prev;
  for (uint64_t i = 0; i < count; ++i) {
    PeriodicSet xi = at(i);
    if (xi.is_finite()) throw not_cofinite(i);
    if (i > 0 && !xi.is_subset_of(prev)) throw chain_not_decreasing(i);
    prev = std::move(xi);
  }
}

uint64_t greedy_step(const PeriodicSet& x, std::optional<uint64_t> prev, uint64_t index) {
  std::optional<uint64_t> v = prev ? x.next_after(*prev) : x.min_element();
  if (!v) throw exhausted(index);
  return *v;
}

}  // namespace

Germ chain_witness(const std::vector<PeriodicSet>& chain) {
  validate_chain_prefix([&](uint64_t i) { return chain[i]; }, chain.size());
  uint64_t k = chain.size();
  const PeriodicSet& last = chain.back();
  uint64_t period = last.residues().size();
  uint64_t step = last.modulus();
  uint64_t max_exc = 0;
  if (!last.plus_exceptions().empty()) max_exc = std::max(max_exc, last.plus_exceptions().back());
  if (!last.minus_exceptions().empty())
    max_exc = std::max(max_exc, last.minus_exceptions().back());

  // Run the diagonal until it is stepping through consecutive elements of the
  // last set beyond that set's exceptions; from there it advances by exactly
  // one modulus every `period` steps.
  std::vector<uint64_t> vals;
  std::optional<uint64_t> prev;
  auto extend = [&]() {
    uint64_t i = vals.size();
    uint64_t v = greedy_step(chain[std::min<uint64_t>(i, k - 1)], prev, i);
    prev = v;
    vals.push_back(v);
  };
  while (vals.size() < k || vals.back() <= max_exc) extend();
  uint64_t start = vals.size() - 1;
  while (vals.size() < start + 2 * period + 1) extend();

  std::vector<uint64_t> base(period), drift(period, step);
  for (uint64_t j = 0; j < period; ++j) base[(start + j) % period] = vals[start + j];
  Germ g = Germ::quasi_linear(period, std::move(base), std::move(drift), start);
#ifndef NDEBUG
  for (uint64_t j = 0; j <= 2 * period; ++j) assert(g.value_at(start + j) == vals[start + j]);
#endif
  return g;
}

Germ chain_witness(std::function<PeriodicSet(uint64_t)> chain, uint64_t probe_depth) {
  validate_chain_prefix(chain, probe_depth);
  struct State {
    std::function<PeriodicSet(uint64_t)> chain;
    std::vector<uint64_t> vals;
  };
  auto st = std::make_shared<State>();
  st->chain = chain;
  // Only ever called with increasing indices, serialized by the stream rep.
  auto values = [st](uint64_t i) {
    while (st->vals.size() <= i) {
      uint64_t n = st->vals.size();
      std::optional<uint64_t> prev;
      if (n > 0) prev = st->vals.back();
      st->vals.push_back(greedy_step(st->chain(n), prev, n));
    }
    return st->vals[i];
  };
  return Germ::stream(values, std::move(chain), probe_depth);
}

std::vector<uint64_t> scip_diagonalize(const Chain& chain, const FilterOracle& largeness,
                                       uint64_t count) {
  std::vector<uint64_t> out;
  out.reserve(count);
  std::optional<uint64_t> prev;
  PeriodicSet prev_set;
  for (uint64_t n = 0; n < count; ++n) {
    PeriodicSet xn = chain.at(n);
    if (n > 0 && !xn.is_subset_of(prev_set)) throw chain_not_decreasing(n);
    if (largeness.large(xn) != Tri::yes) throw not_large(n);
    uint64_t v = greedy_step(xn, prev, n);
    out.push_back(v);
    prev = v;
    prev_set = std::move(xn);
  }
  return out;
}

Germ scip_witness(const Germ& phi) {
  if (phi.is_stream()) return phi;  // already strictly increasing
  if (phi.is_standard() || !phi.is_nonstandard()) throw not_eventually_increasing();

  uint64_t p = phi.period();
  const std::vector<uint64_t>& d = phi.drift();

  // Quotient beyond which "is a running record" is decided per residue class:
  // each pairwise comparison is affine in the quotient, so it settles once
  // the quotient clears every crossover.
  auto val = [&](uint64_t i) { return int64_t(phi.value_at(i)); };
  uint64_t q_start = phi.onset() / p + 2;
  uint64_t q_settle = q_start;
  for (uint64_t r = 0; r < p; ++r) {
    for (uint64_t r2 = 0; r2 < p; ++r2) {
      if (d[r] == d[r2]) continue;
      int64_t i_r = int64_t((q_start + 1) * p + r);
      int64_t i_r2 = int64_t((q_start + 1) * p + r2);
      int64_t gap = (val(uint64_t(i_r)) - int64_t(d[r]) * int64_t(q_start + 1)) -
                    (val(uint64_t(i_r2)) - int64_t(d[r2]) * int64_t(q_start + 1));
      uint64_t dd = d[r] > d[r2] ? d[r] - d[r2] : d[r2] - d[r];
      uint64_t cross = uint64_t((std::abs(gap) + int64_t(d[r2]) + int64_t(dd)) / int64_t(dd)) + 2;
      q_settle = std::max(q_settle, q_start + cross);
    }
  }
  uint64_t horizon = (q_settle + 4) * p;
  if (horizon > (uint64_t{1} << 24)) throw std::overflow_error("plateau horizon too large");

  // Plateau sequence: repeat the value of the last running record.
  std::vector<uint64_t> plateau(horizon);
  uint64_t running_max = 0;
  bool any = false;
  uint64_t last_record_value = 0;
  for (uint64_t i = 0; i < horizon; ++i) {
    uint64_t v = phi.value_at(i);
    if (!any || v > running_max) {
      any = true;
      running_max = v;
      last_record_value = v;
    }
    plateau[i] = last_record_value;
  }

  uint64_t onset = (q_settle + 1) * p;
  std::vector<uint64_t> base(p), drift(p);
  for (uint64_t j = 0; j < p; ++j) {
    uint64_t i = onset + j;
    base[i % p] = plateau[i];
    assert(plateau[i + p] >= plateau[i]);
    drift[i % p] = plateau[i + p] - plateau[i];
    assert(plateau[i + 2 * p] - plateau[i + p] == drift[i % p]);
  }
  return Germ::quasi_linear(p, std::move(base), std::move(drift), onset);
}

}  // namespace rf
