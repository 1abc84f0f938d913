#include "ramseyforge/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace rf {
namespace {

constexpr uint64_t kGroundCap = 24;
constexpr uint64_t kColoringSweepCap = uint64_t{1} << 34;

// All size-k subsets of {0..m-1} as masks, in lexicographic order of their
// sorted element lists.
void for_each_subset(uint64_t m, uint32_t k,
                     const std::function<bool(const std::vector<uint64_t>&)>& visit) {
  std::vector<uint64_t> s(k);
  for (uint32_t i = 0; i < k; ++i) s[i] = i;
  if (k > m) return;
  while (true) {
    if (!visit(s)) return;
    uint32_t i = k;
    while (i > 0 && s[i - 1] == m - k + (i - 1)) i--;
    if (i == 0) return;
    s[i - 1]++;
    for (uint32_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

uint64_t mask_of(const std::vector<uint64_t>& elems) {
  uint64_t m = 0;
  for (uint64_t e : elems) m |= uint64_t{1} << e;
  return m;
}

uint64_t pow_checked(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > kColoringSweepCap / base) throw std::overflow_error("coloring sweep too large");
    r *= base;
  }
  return r;
}

}  // namespace

ColoringTable::ColoringTable(uint32_t arity, uint64_t ground_count, uint32_t colors)
    : arity_(arity), ground_count_(ground_count), colors_(colors) {
  if (ground_count == 0 || ground_count > kGroundCap)
    throw std::invalid_argument("coloring ground out of range");
  if (colors < 1) throw std::invalid_argument("need at least one color");
  table_.assign(uint64_t{1} << ground_count, -1);
  for (uint64_t mask = 1; mask < (uint64_t{1} << ground_count); ++mask)
    if (arity == 0 || uint64_t(__builtin_popcountll(mask)) == arity) domain_.push_back(mask);
}

void ColoringTable::set(uint64_t mask, uint16_t color) {
  if (mask >= table_.size() || (arity_ != 0 && uint64_t(__builtin_popcountll(mask)) != arity_))
    throw std::invalid_argument("mask outside the coloring domain");
  if (color >= colors_) throw std::invalid_argument("color out of range");
  table_[mask] = color;
}

uint16_t ColoringTable::color(uint64_t mask) const {
  if (mask >= table_.size() || table_[mask] < 0)
    throw std::invalid_argument("mask not colored");
  return uint16_t(table_[mask]);
}

bool ColoringTable::is_colored(uint64_t mask) const {
  return mask < table_.size() && table_[mask] >= 0;
}

bool ColoringTable::total() const {
  for (uint64_t mask : domain_)
    if (table_[mask] < 0) return false;
  return true;
}

ColoringTable ColoringTable::from_function(uint32_t arity, uint64_t ground_count, uint32_t colors,
                                           const std::function<uint16_t(uint64_t)>& f) {
  ColoringTable t(arity, ground_count, colors);
  for (uint64_t mask : t.domain()) t.set(mask, f(mask));
  return t;
}

std::optional<RamseyWitness> finite_ramsey_search(uint64_t n_max_element, uint32_t n, uint32_t r,
                                                  const ColoringTable& coloring, uint32_t k,
                                                  SearchStats* stats) {
  uint64_t m = n_max_element + 1;
  if (k > m + 1) throw std::invalid_argument("witness size exceeds the ground and then some");
  if (coloring.arity() != n) throw std::invalid_argument("coloring arity mismatch");
  (void)r;
  std::optional<RamseyWitness> found;
  for_each_subset(m, k, [&](const std::vector<uint64_t>& cand) {
    if (stats) stats->candidates++;
    bool homogeneous = true;
    std::optional<uint16_t> c0;
    std::vector<uint64_t> idx(n);
    for_each_subset(k, n, [&](const std::vector<uint64_t>& pick) {
      std::vector<uint64_t> sub(n);
      for (uint32_t i = 0; i < n; ++i) sub[i] = cand[pick[i]];
      uint16_t c = coloring.color(mask_of(sub));
      if (!c0) {
        c0 = c;
      } else if (*c0 != c) {
        homogeneous = false;
      }
      return homogeneous;
    });
    if (homogeneous) {
      found = RamseyWitness{cand, c0.value_or(0)};
      return false;
    }
    return true;
  });
  return found;
}

bool recheck_ramsey_witness(const ColoringTable& coloring, const RamseyWitness& witness,
                            uint32_t n) {
  if (!std::is_sorted(witness.elements.begin(), witness.elements.end())) return false;
  bool ok = true;
  for_each_subset(witness.elements.size(), n, [&](const std::vector<uint64_t>& pick) {
    std::vector<uint64_t> sub(n);
    for (uint32_t i = 0; i < n; ++i) sub[i] = witness.elements[pick[i]];
    ok = coloring.color(mask_of(sub)) == witness.color;
    return ok;
  });
  return ok;
}

namespace {

bool unions_monochromatic(const ColoringTable& coloring, const std::vector<uint64_t>& blocks,
                          uint16_t* color_out) {
  std::optional<uint16_t> c0;
  for (uint64_t pick = 1; pick < (uint64_t{1} << blocks.size()); ++pick) {
    uint64_t u = 0;
    for (size_t j = 0; j < blocks.size(); ++j)
      if (pick & (uint64_t{1} << j)) u |= blocks[j];
    uint16_t c = coloring.color(u);
    if (!c0)
      c0 = c;
    else if (*c0 != c)
      return false;
  }
  if (color_out) *color_out = c0.value_or(0);
  return true;
}

bool unions_search_rec(uint64_t full, const ColoringTable& coloring, uint32_t b,
                       std::vector<uint64_t>& blocks, uint64_t lo_mask, SearchStats* stats,
                       UnionsWitness* out) {
  if (blocks.size() == b) {
    if (stats) stats->candidates++;
    uint16_t c;
    if (unions_monochromatic(coloring, blocks, &c)) {
      *out = UnionsWitness{blocks, c};
      return true;
    }
    return false;
  }
  for (uint64_t m = lo_mask; m <= full; ++m) {
    if ((m & full) != m || m == 0) continue;
    if (!blocks.empty()) {
      uint64_t prev_max = 63 - uint64_t(__builtin_clzll(blocks.back()));
      uint64_t cur_min = uint64_t(__builtin_ctzll(m));
      if (cur_min <= prev_max) continue;
    }
    blocks.push_back(m);
    if (unions_search_rec(full, coloring, b, blocks, m + 1, stats, out)) return true;
    blocks.pop_back();
  }
  return false;
}

}  // namespace

std::optional<UnionsWitness> finite_unions_search(uint64_t n_count, uint32_t r,
                                                  const ColoringTable& coloring, uint32_t b,
                                                  SearchStats* stats) {
  if (coloring.arity() != 0) throw std::invalid_argument("unions search needs a subsets coloring");
  (void)r;
  uint64_t full = (uint64_t{1} << n_count) - 1;
  std::vector<uint64_t> blocks;
  UnionsWitness w;
  if (unions_search_rec(full, coloring, b, blocks, 1, stats, &w)) return w;
  return std::nullopt;
}

bool recheck_unions_witness(const ColoringTable& coloring, const UnionsWitness& witness) {
  const auto& bs = witness.block_masks;
  for (size_t i = 0; i < bs.size(); ++i) {
    if (bs[i] == 0) return false;
    if (i + 1 < bs.size()) {
      uint64_t prev_max = 63 - uint64_t(__builtin_clzll(bs[i]));
      uint64_t next_min = uint64_t(__builtin_ctzll(bs[i + 1]));
      if (next_min <= prev_max) return false;
    }
  }
  uint16_t c;
  return unions_monochromatic(coloring, bs, &c) && c == witness.color;
}

namespace {

// Shared driver for the minimal-number sweeps: for each candidate coloring
// index, decode, test, and report the least failing index. Statistics follow
// the sequential order even when split across threads.
struct SweepOutcome {
  bool all_pass = true;
  uint64_t least_fail = UINT64_MAX;
};

SweepOutcome parallel_coloring_sweep(uint64_t total, uint32_t jobs,
                                     const std::function<bool(uint64_t)>& passes) {
  SweepOutcome out;
  if (jobs <= 1) {
    for (uint64_t i = 0; i < total; ++i)
      if (!passes(i)) {
        out.all_pass = false;
        out.least_fail = i;
        break;
      }
    return out;
  }
  std::atomic<uint64_t> least{UINT64_MAX};
  std::vector<std::thread> threads;
  uint64_t chunk = (total + jobs - 1) / jobs;
  for (uint32_t t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      uint64_t lo = chunk * t, hi = std::min(total, chunk * (t + 1));
      for (uint64_t i = lo; i < hi; ++i) {
        if (least.load(std::memory_order_relaxed) < lo) return;
        if (!passes(i)) {
          uint64_t cur = least.load();
          while (i < cur && !least.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (least.load() != UINT64_MAX) {
    out.all_pass = false;
    out.least_fail = least.load();
  }
  return out;
}

std::vector<uint16_t> decode_coloring(uint64_t index, size_t positions, uint32_t r,
                                      bool fixed_first) {
  std::vector<uint16_t> colors(positions);
  size_t start = 0;
  if (fixed_first) {
    colors[0] = 0;
    start = 1;
  }
  for (size_t i = start; i < positions; ++i) {
    colors[i] = uint16_t(index % r);
    index /= r;
  }
  return colors;
}

}  // namespace

OracleOutcome ramsey_number_oracle(uint32_t n, uint32_t k, uint32_t r, uint64_t max_n,
                                   bool audit_mode, uint32_t jobs) {
  OracleOutcome out;
  out.limit = max_n;
  for (uint64_t cnt = 1; cnt <= max_n; ++cnt) {
    if (cnt > kGroundCap) throw std::overflow_error("ground too large");
    ColoringTable proto(n, cnt, r);
    const std::vector<uint64_t>& domain = proto.domain();
    if (k > cnt) {
      // No size-k subset exists at all; with a nonempty domain any coloring
      // defeats N, and with an empty domain too (no homogeneous witness).
      out.colorings_checked += 1;
      out.counterexample = decode_coloring(0, domain.size(), r, false);
      continue;
    }
    bool prune = !audit_mode && r >= 2 && !domain.empty();
    uint64_t total = pow_checked(r, prune ? domain.size() - 1 : domain.size());

    auto passes = [&](uint64_t idx) {
      ColoringTable table(n, cnt, r);
      std::vector<uint16_t> colors = decode_coloring(idx, domain.size(), r, prune);
      for (size_t i = 0; i < domain.size(); ++i) table.set(domain[i], colors[i]);
      return finite_ramsey_search(cnt - 1, n, r, table, k).has_value();
    };

    SweepOutcome sweep = parallel_coloring_sweep(total, jobs, passes);
    if (sweep.all_pass) {
      out.colorings_checked += total;
      out.value = cnt;
      return out;
    }
    out.colorings_checked += sweep.least_fail + 1;
    out.counterexample = decode_coloring(sweep.least_fail, domain.size(), r, prune);
  }
  return out;
}

OracleOutcome unions_number_oracle(uint32_t b, uint32_t r, uint64_t max_n, bool audit_mode,
                                   uint32_t jobs) {
  OracleOutcome out;
  out.limit = max_n;
  for (uint64_t cnt = 1; cnt <= max_n; ++cnt) {
    uint64_t nmask = (uint64_t{1} << cnt) - 1;
    bool prune = !audit_mode && r >= 2;
    uint64_t total = pow_checked(r, prune ? nmask - 1 : nmask);

    // Specialized two-color path: a coloring is one bit per nonempty mask.
    std::function<bool(uint64_t)> passes;
    struct Triple {
      uint64_t a, bm, u;
    };
    std::vector<Triple> triples;
    if (r == 2 && b == 2) {
      for (uint64_t a = 1; a <= nmask; ++a) {
        uint64_t a_max = 63 - uint64_t(__builtin_clzll(a));
        for (uint64_t m = 1; m <= nmask; ++m)
          if (uint64_t(__builtin_ctzll(m)) > a_max) triples.push_back({a, m, a | m});
      }
      passes = [&triples, prune](uint64_t idx) {
        uint64_t word = prune ? (idx << 1) : idx;
        for (const Triple& t : triples) {
          uint64_t ca = (word >> (t.a - 1)) & 1, cb = (word >> (t.bm - 1)) & 1,
                   cu = (word >> (t.u - 1)) & 1;
          if (ca == cb && cb == cu) return true;
        }
        return false;
      };
    } else {
      passes = [&, prune, cnt, nmask](uint64_t idx) {
        ColoringTable table(0, cnt, r);
        std::vector<uint16_t> colors = decode_coloring(idx, nmask, r, prune);
        for (uint64_t m = 1; m <= nmask; ++m) table.set(m, colors[m - 1]);
        return finite_unions_search(cnt, r, table, b).has_value();
      };
    }

    SweepOutcome sweep = parallel_coloring_sweep(total, jobs, passes);
    if (sweep.all_pass) {
      out.colorings_checked += total;
      out.value = cnt;
      return out;
    }
    out.colorings_checked += sweep.least_fail + 1;
    out.counterexample = decode_coloring(sweep.least_fail, nmask, r, prune);
  }
  return out;
}

SweepResult exhaustive_sweep(uint64_t count,
                             const std::function<std::optional<std::string>(uint64_t)>& property) {
  SweepResult out;
  for (uint64_t i = 0; i < count; ++i) {
    std::optional<std::string> fail = property(i);
    if (fail) {
      out.counterexample = i;
      out.note = *fail;
      return out;
    }
    out.verified++;
  }
  return out;
}

namespace {

bool forcing_exists(uint64_t ground, uint32_t n, uint64_t mask, uint64_t last, uint32_t size,
                    const std::function<bool(uint64_t)>& in_target, bool want,
                    std::optional<uint32_t> threshold) {
  if (size == n) return in_target(mask) == want;
  uint64_t first = (size == 0) ? 0 : last + 1;
  uint64_t children = (first < ground) ? ground - first : 0;
  uint64_t need = threshold ? *threshold : (children + 1) / 2;
  uint64_t good = 0;
  for (uint64_t c = first; c < ground; ++c)
    if (forcing_exists(ground, n, mask | (uint64_t{1} << c), c, size + 1, in_target, want,
                       threshold))
      good++;
  return good >= need;
}

}  // namespace

ForcingSide forcing_brute_force(uint64_t ground_count, uint32_t n,
                                const std::function<bool(uint64_t)>& in_target,
                                std::optional<uint32_t> threshold) {
  if (forcing_exists(ground_count, n, 0, 0, 0, in_target, true, threshold))
    return ForcingSide::inside;
  if (forcing_exists(ground_count, n, 0, 0, 0, in_target, false, threshold))
    return ForcingSide::outside;
  return ForcingSide::undecided;
}

}  // namespace rf
