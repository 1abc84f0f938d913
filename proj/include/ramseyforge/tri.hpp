#pragma once

#include <string_view>

namespace rf {

/// Three-valued largeness/membership verdict. `unknown` records exactly the
/// cases a genuine ultrafilter would decide but the computable model cannot:
/// both the witness index set and its complement are infinite.
enum class Tri { no = 0, unknown = 1, yes = 2 };

constexpr Tri tri_and(Tri a, Tri b) { return a < b ? a : b; }
constexpr Tri tri_or(Tri a, Tri b) { return a > b ? a : b; }

constexpr Tri tri_not(Tri a) {
  switch (a) {
    case Tri::no: return Tri::yes;
    case Tri::yes: return Tri::no;
    default: return Tri::unknown;
  }
}

constexpr std::string_view to_string(Tri a) {
  switch (a) {
    case Tri::no: return "False";
    case Tri::yes: return "True";
    default: return "Unknown";
  }
}

}  // namespace rf
