#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramseyforge/space.hpp"

namespace rf {

struct AxiomCheckEntry {
  std::string axiom;  // "A1a", "A1b", "A1c", "A2a", "A2b", "A2c", "A3a", "A3b", "A4"
  std::string name;
  bool pass = true;
  uint64_t cases = 0;
  std::string witness;  // first counterexample, empty when passing
};

struct CheckReport {
  std::string space;
  uint64_t ground = 0;
  uint64_t depth = 0;
  uint64_t trials = 0;
  std::vector<AxiomCheckEntry> entries;

  bool all_pass() const;
  const AxiomCheckEntry* entry(std::string_view axiom) const;
};

/// Desk-scale verification of the sequencing, finitization, amalgamation and
/// pigeonhole axioms: exhaustive over the nodes with ground elements
/// < ground up to `depth` levels, sampled streams, and `trials` seeded
/// colorings for the pigeonhole delegation to the search kernels. Failures
/// are data, not errors.
CheckReport check_axioms(const Space& space, uint64_t ground, uint64_t depth, uint64_t trials);

}  // namespace rf
