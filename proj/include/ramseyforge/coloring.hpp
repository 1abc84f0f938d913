#pragma once

#include <istream>
#include <string>

#include "ramseyforge/kernels.hpp"

namespace rf {

/// CSV coloring: one entry per line, "e1 e2 ... ,color" with the node's
/// ground elements space-separated. '#' starts a comment. The arity, ground
/// size and color count are inferred; the table must come out total.
/// Lines with arity 0 are rejected; subsets colorings declare "subsets" in a
/// leading "# kind=subsets" comment or use arity-uniform lines.
ColoringTable coloring_from_csv(std::istream& in);
ColoringTable coloring_from_csv_text(const std::string& text);

/// JSON coloring: {"arity": n, "ground": N, "colors": r,
/// "entries": [[[e1,e2,...], c], ...]}; arity 0 means subsets.
ColoringTable coloring_from_json_text(const std::string& text);

/// Reads a coloring file, dispatching on a ".json" suffix.
ColoringTable coloring_from_file(const std::string& path);

std::string coloring_to_json_text(const ColoringTable& table);

}  // namespace rf
