#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseyforge/periodic_set.hpp"

namespace rf {

/// One step of an approximation, encoded as a natural number:
///   - Ellentuck: the element itself;
///   - Milliken: the block as a bitmask (bit i set <=> i in the block).
/// Codes extend a node in increasing encoding order, which doubles as the
/// deterministic enumeration order everywhere.
using Code = uint64_t;

/// Finite approximation: the sequence of codes r_1, r_2, ... (length = |s|;
/// the empty vector is the unique length-0 node).
using Approx = std::vector<Code>;

uint64_t code_min_element(Code c);
uint64_t code_max_element(Code c);

class Space;

/// Replayable stream of codes r_0 < r_1 < ... describing one infinite member
/// of a space. Generators are memoized, so every consumer sees one consistent
/// stream; equality of streams is never decided, only truncations are.
class Real {
 public:
  static Real from_ground(const Space& space, PeriodicSet ground);
  static Real from_generator(const Space& space, std::function<Code(uint64_t)> gen);
  /// Ellentuck stream over all of N.
  static Real naturals();
  /// Milliken stream ({0},{1},{2},...).
  static Real singleton_blocks();

  const Space& space() const { return *space_; }
  Code code_at(uint64_t i) const;
  Approx prefix(uint64_t n) const;

  /// When the one-step extension sets of this stream are expressible as
  /// periodic sets of codes, the describing ground set:
  ///   - Ellentuck: the member set itself;
  ///   - Milliken: the bitmask encoding of all finite unions of blocks.
  const std::optional<PeriodicSet>& ground() const;

 private:
  struct Rep;
  Real(const Space* space, std::shared_ptr<Rep> rep) : space_(space), rep_(std::move(rep)) {}
  const Space* space_;
  std::shared_ptr<Rep> rep_;
};

struct DepthResult {
  std::optional<uint64_t> depth;  // empty: not found within the horizon
  uint64_t horizon = 0;
  bool is_infinite_at_horizon() const { return !depth.has_value(); }
};

/// Interface realized per space: structural node validity, the finitization
/// quasi-order, and extension enumeration against a stream.
class Space {
 public:
  enum class Kind { ellentuck, milliken };

  virtual ~Space() = default;
  virtual Kind kind() const = 0;
  virtual std::string_view name() const = 0;

  virtual bool node_valid(const Approx& s) const = 0;
  virtual bool can_append(const Approx& s, Code c) const = 0;

  /// All structurally valid one-step extension codes of s, as a periodic set.
  virtual PeriodicSet extension_code_universe(const Approx& s) const = 0;

  virtual bool lefin(const Approx& s, const Approx& t) const = 0;
  /// {t : t <=_fin s}; finite by the finitization axiom.
  virtual std::vector<Approx> lefin_downset(const Approx& s) const = 0;

  /// Whether [s,X] is nonempty (s embeds as an initial segment of a member
  /// refining X). `probe` bounds the stream scan for generator-backed reals.
  virtual bool compatible(const Approx& s, const Real& x, uint64_t probe = 4096) const = 0;

  /// Codes of the one-step extensions of s inside X with ground elements
  /// <= bound, in increasing code order.
  virtual std::vector<Code> extension_codes(const Approx& s, const Real& x, Code bound) const = 0;

  /// Member agreeing with Y through its first `depth` codes and continuing
  /// inside X past the prefix (the amalgamation witness shape).
  virtual Real splice(const Real& y, uint64_t depth, const Real& x) const = 0;

  std::string format_node(const Approx& s) const;

  static const Space& ellentuck();
  static const Space& milliken();
  static const Space& by_name(std::string_view name);  // throws parse_error
};

/// The n-th approximation of X.
Approx rn(const Real& x, uint64_t n);

/// Least i <= horizon with s <=_fin r_i(X); the result carries the horizon
/// because "no such i at all" is not decidable.
DepthResult depth(const Real& x, const Approx& s, uint64_t horizon);

/// Length-(|s|+1) nodes t with s < t and t <=_fin X, ground-restricted to
/// codes whose elements are <= bound. Throws empty_cube when [s,X] is empty.
std::vector<Approx> extensions(const Space& space, const Approx& s, const Real& x, Code bound);

}  // namespace rf
