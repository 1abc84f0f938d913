#include "ramseyforge/axiom_check.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ramseyforge/kernels.hpp"

namespace rf {

bool CheckReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const AxiomCheckEntry& e) { return e.pass; });
}

const AxiomCheckEntry* CheckReport::entry(std::string_view axiom) const {
  for (const AxiomCheckEntry& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

namespace {

uint64_t lcg_next(uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return state >> 33;
}

Code code_bound_for(const Space& space, uint64_t ground) {
  if (space.kind() == Space::Kind::ellentuck) return ground - 1;
  return (Code{1} << ground) - 1;
}

uint64_t node_max(const Space& space, const Approx& s) {
  if (s.empty()) return 0;
  return space.kind() == Space::Kind::ellentuck ? s.back() : code_max_element(s.back());
}

void collect_nodes(const Space& space, Code bound, uint64_t depth, Approx& current,
                   std::vector<Approx>& out) {
  out.push_back(current);
  if (current.size() >= depth) return;
  for (Code c = current.empty() ? 0 : current.back() + 1; c <= bound; ++c) {
    if (!space.can_append(current, c)) continue;
    current.push_back(c);
    collect_nodes(space, bound, depth, current, out);
    current.pop_back();
  }
}

std::vector<Approx> all_nodes(const Space& space, uint64_t ground, uint64_t depth) {
  std::vector<Approx> out;
  Approx current;
  collect_nodes(space, code_bound_for(space, ground), depth, current, out);
  return out;
}

struct NamedReal {
  std::string name;
  Real real;
};

std::vector<NamedReal> sample_reals(const Space& space) {
  std::vector<NamedReal> out;
  if (space.kind() == Space::Kind::ellentuck) {
    auto add = [&](std::string name, PeriodicSet g) {
      out.push_back({std::move(name), Real::from_ground(space, std::move(g))});
    };
    add("naturals", PeriodicSet::naturals());
    add("evens", PeriodicSet::multiples_of(2));
    add("odds", PeriodicSet::make(2, {1}, {}, {}));
    add("multiples3", PeriodicSet::multiples_of(3));
    add("tail3", PeriodicSet::tail(3));
    add("mod4_12", PeriodicSet::residue_classes(4, {1, 2}));
    add("punctured", PeriodicSet::make(1, {0}, {}, {0, 2, 5}));
    return out;
  }
  auto add = [&](std::string name, std::function<Code(uint64_t)> gen) {
    out.push_back({std::move(name), Real::from_generator(space, std::move(gen))});
  };
  out.push_back({"singletons", Real::singleton_blocks()});
  auto shift_guard = [](uint64_t bit) {
    if (bit >= 62) throw std::overflow_error("milliken sample stream out of code range");
    return bit;
  };
  add("pairs", [shift_guard](uint64_t i) { return Code{3} << shift_guard(2 * i); });
  add("spaced", [shift_guard](uint64_t i) { return Code{1} << shift_guard(2 * i); });
  add("intervals", [](uint64_t i) {
    // blocks of alternating width 1,2,1,2,...
    uint64_t lo = i + i / 2, len = 1 + (i % 2);
    if (lo + len >= 62) throw std::overflow_error("milliken sample stream out of code range");
    return ((Code{1} << (lo + len)) - 1) ^ ((Code{1} << lo) - 1);
  });
  add("shifted", [shift_guard](uint64_t i) { return Code{1} << shift_guard(i + 3); });
  return out;
}

// X <= Y refinements built from Y's own material.
std::vector<NamedReal> sample_refinements(const Space& space, const NamedReal& y) {
  std::vector<NamedReal> out;
  Real base = y.real;
  out.push_back({y.name + "/every-other",
                 Real::from_generator(space, [base](uint64_t i) { return base.code_at(2 * i); })});
  out.push_back({y.name + "/shift2",
                 Real::from_generator(space, [base](uint64_t i) { return base.code_at(i + 2); })});
  if (space.kind() == Space::Kind::milliken) {
    out.push_back({y.name + "/pair-unions", Real::from_generator(space, [base](uint64_t i) {
                     return base.code_at(2 * i) | base.code_at(2 * i + 1);
                   })});
  } else if (y.real.ground()) {
    // keep a ground description when the slice stays infinite
    PeriodicSet sliced = ps_intersect(*y.real.ground(), PeriodicSet::multiples_of(2));
    if (sliced.is_infinite())
      out.push_back({y.name + "/even-slots", Real::from_ground(space, std::move(sliced))});
  }
  return out;
}

std::string describe_node(const Space& space, const Approx& s) { return space.format_node(s); }

}  // namespace

CheckReport check_axioms(const Space& space, uint64_t ground, uint64_t depth, uint64_t trials) {
  CheckReport report;
  report.space = std::string(space.name());
  report.ground = ground;
  report.depth = depth;
  report.trials = trials;

  if (ground == 0 || (space.kind() == Space::Kind::milliken && ground > 14))
    throw std::invalid_argument("ground out of desk-scale range");

  std::vector<Approx> nodes = all_nodes(space, ground, depth);
  std::vector<NamedReal> reals = sample_reals(space);
  uint64_t horizon = 2 * ground + 8;

  auto add_entry = [&](std::string axiom, std::string name) -> AxiomCheckEntry& {
    report.entries.push_back(AxiomCheckEntry{std::move(axiom), std::move(name), true, 0, {}});
    return report.entries.back();
  };

  {
    AxiomCheckEntry& e = add_entry("A1a", "sequencing: length-0 approximation is empty");
    for (const NamedReal& x : reals) {
      e.cases++;
      if (!rn(x.real, 0).empty()) {
        e.pass = false;
        e.witness = x.name;
        break;
      }
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A1b", "sequencing: distinct streams differ at a finite stage");
    for (size_t i = 0; i < reals.size() && e.pass; ++i)
      for (size_t j = i + 1; j < reals.size() && e.pass; ++j) {
        e.cases++;
        bool differ = false;
        for (uint64_t d = 1; d <= horizon; ++d)
          if (rn(reals[i].real, d) != rn(reals[j].real, d)) {
            differ = true;
            break;
          }
        if (!differ) {
          e.pass = false;
          e.witness = reals[i].name + " vs " + reals[j].name;
        }
      }
  }
  {
    AxiomCheckEntry& e = add_entry("A1c", "sequencing: equal approximations force equal stages");
    for (const NamedReal& x : reals)
      for (const NamedReal& y : reals)
        for (uint64_t i = 0; i <= depth + 1 && e.pass; ++i)
          for (uint64_t j = 0; j <= depth + 1; ++j) {
            e.cases++;
            if (rn(x.real, i) != rn(y.real, j)) continue;
            bool ok = (i == j);
            for (uint64_t k = 0; ok && k < i; ++k) ok = rn(x.real, k) == rn(y.real, k);
            if (!ok) {
              e.pass = false;
              e.witness = x.name + "@" + std::to_string(i) + " = " + y.name + "@" +
                          std::to_string(j);
              break;
            }
          }
  }
  {
    AxiomCheckEntry& e = add_entry("A2a", "finitization: down-sets finite, quasi-order");
    for (const Approx& s : nodes) {
      e.cases++;
      std::vector<Approx> down = space.lefin_downset(s);
      std::set<Approx> down_set(down.begin(), down.end());
      if (!space.lefin(s, s)) {
        e.pass = false;
        e.witness = "irreflexive at " + describe_node(space, s);
        break;
      }
      // enumerator agrees with the predicate over the node universe
      for (const Approx& t : nodes) {
        bool pred = space.lefin(t, s);
        bool listed = down_set.count(t) > 0;
        if (pred != listed) {
          e.pass = false;
          e.witness = describe_node(space, t) + (pred ? " missing from" : " wrongly in") +
                      " down-set of " + describe_node(space, s);
          break;
        }
      }
      if (!e.pass) break;
      // transitivity on the down-set family
      for (const Approx& t : down) {
        for (const Approx& u : space.lefin_downset(t)) {
          if (!space.lefin(u, s)) {
            e.pass = false;
            e.witness = "transitivity fails through " + describe_node(space, t);
            break;
          }
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A2b", "finitization: refinements approximate through the coarser stream");
    for (const NamedReal& y : reals) {
      for (const NamedReal& x : sample_refinements(space, y)) {
        for (uint64_t i = 0; i <= depth && e.pass; ++i) {
          e.cases++;
          Approx s = rn(x.real, i);
          bool found = false;
          for (uint64_t j = 0; j <= horizon; ++j)
            if (space.lefin(s, rn(y.real, j))) {
              found = true;
              break;
            }
          if (!found) {
            e.pass = false;
            e.witness = x.name + "@" + std::to_string(i) + " vs " + y.name;
          }
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A2c", "finitization: prefixes embed below coarser nodes");
    for (const Approx& t : nodes) {
      for (const Approx& u : nodes) {
        if (!space.lefin(t, u)) continue;
        for (size_t plen = 0; plen <= t.size(); ++plen) {
          Approx s(t.begin(), t.begin() + plen);
          e.cases++;
          bool found = false;
          for (size_t vlen = 0; vlen <= u.size(); ++vlen) {
            Approx v(u.begin(), u.begin() + vlen);
            if (space.lefin(s, v)) {
              found = true;
              break;
            }
          }
          if (!found) {
            e.pass = false;
            e.witness = describe_node(space, s) + " under " + describe_node(space, u);
            break;
          }
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A3a", "amalgamation: finite depth keeps cubes nonempty");
    for (const NamedReal& y : reals) {
      for (const Approx& s : nodes) {
        DepthResult d = rf::depth(y.real, s, horizon);
        if (!d.depth) continue;
        for (const NamedReal& thin : sample_refinements(space, y)) {
          e.cases++;
          Real spliced = space.splice(y.real, *d.depth, thin.real);
          if (!space.compatible(s, spliced)) {
            e.pass = false;
            e.witness = describe_node(space, s) + " in " + y.name + "+" + thin.name;
            break;
          }
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A3b", "amalgamation: spliced refinements trap extensions");
    Code elem_bound = ground - 1;
    for (const NamedReal& y : reals) {
      for (const NamedReal& x : sample_refinements(space, y)) {
        for (const Approx& s : nodes) {
          if (!space.compatible(s, x.real)) continue;
          DepthResult d = rf::depth(y.real, s, horizon);
          if (!d.depth) continue;
          e.cases++;
          Real spliced = space.splice(y.real, *d.depth, x.real);
          std::vector<Approx> ext_spliced = extensions(space, s, spliced, elem_bound);
          std::vector<Approx> ext_x = extensions(space, s, x.real, elem_bound);
          std::set<Approx> in_x(ext_x.begin(), ext_x.end());
          if (ext_spliced.empty() && !ext_x.empty()) {
            e.pass = false;
            e.witness = "no extensions for " + describe_node(space, s) + " in spliced " + y.name;
            break;
          }
          for (const Approx& t : ext_spliced)
            if (!in_x.count(t)) {
              e.pass = false;
              e.witness = describe_node(space, t) + " escapes [s,X] for s=" +
                          describe_node(space, s) + ", X=" + x.name;
              break;
            }
          if (!e.pass) break;
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
  }
  {
    AxiomCheckEntry& e = add_entry("A4", "pigeonhole: one-step extension sets homogenize");
    // Eligible stems leave enough room for the kernel searches: two ground
    // elements for the element pigeonhole, five for the block-unions search.
    uint64_t margin = space.kind() == Space::Kind::ellentuck ? 2 : 5;
    std::vector<Approx> eligible;
    for (const Approx& s : nodes)
      if (s.empty() || node_max(space, s) + margin < ground) eligible.push_back(s);
    uint64_t seed = 0x5eed;
    for (uint64_t t = 0; t < trials && !eligible.empty(); ++t) {
      const Approx& s = eligible[t % eligible.size()];
      uint64_t lo = s.empty() ? 0 : node_max(space, s) + 1;
      uint64_t width = ground - lo;
      e.cases++;
      if (space.kind() == Space::Kind::ellentuck) {
        ColoringTable coloring = ColoringTable::from_function(
            1, width, 2, [&](uint64_t) { return uint16_t(lcg_next(seed) & 1); });
        uint32_t half = uint32_t((width + 1) / 2);
        std::optional<RamseyWitness> w = finite_ramsey_search(width - 1, 1, 2, coloring, half);
        if (!w || !recheck_ramsey_witness(coloring, *w, 1)) {
          e.pass = false;
          e.witness = "no monochromatic half above " + describe_node(space, s);
          break;
        }
      } else {
        ColoringTable coloring = ColoringTable::from_function(
            0, width, 2, [&](uint64_t) { return uint16_t(lcg_next(seed) & 1); });
        std::optional<UnionsWitness> w = finite_unions_search(width, 2, coloring, 2);
        if (!w || !recheck_unions_witness(coloring, *w)) {
          e.pass = false;
          e.witness = "no monochromatic block pair above " + describe_node(space, s);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace rf
