#include "ramseyforge/filter_oracle.hpp"

#include "ramseyforge/errors.hpp"

namespace rf {

FilterOracle FilterOracle::frechet() { return FilterOracle(); }

FilterOracle FilterOracle::principal(uint64_t n) {
  FilterOracle f;
  f.kind_ = Kind::principal;
  f.point_ = n;
  return f;
}

FilterOracle FilterOracle::germ_filter(Germ beta) {
  FilterOracle f;
  f.kind_ = Kind::germ;
  f.beta_ = std::move(beta);
  return f;
}

Tri FilterOracle::large(const PeriodicSet& x) const {
  switch (kind_) {
    case Kind::frechet:
      if (x.is_cofinite()) return Tri::yes;
      if (x.is_finite()) return Tri::no;
      return Tri::unknown;
    case Kind::principal:
      return x.contains(point_) ? Tri::yes : Tri::no;
    case Kind::germ:
      return germ_member(*beta_, x);
  }
  return Tri::unknown;
}

const Germ& FilterOracle::beta() const {
  if (kind_ != Kind::germ) throw std::logic_error("not a germ filter");
  return *beta_;
}

uint64_t FilterOracle::principal_point() const {
  if (kind_ != Kind::principal) throw std::logic_error("not a principal filter");
  return point_;
}

std::string FilterOracle::describe() const {
  switch (kind_) {
    case Kind::frechet: return "frechet";
    case Kind::principal: return "principal:" + std::to_string(point_);
    case Kind::germ: return "germ:" + beta_->to_text();
  }
  return "";
}

FilterOracle FilterOracle::parse(std::string_view text) {
  if (text == "frechet") return frechet();
  constexpr std::string_view kPrincipal = "principal:";
  constexpr std::string_view kGerm = "germ:";
  if (text.substr(0, kPrincipal.size()) == kPrincipal) {
    std::string_view num = text.substr(kPrincipal.size());
    if (num.empty()) throw parse_error("principal filter needs a point");
    uint64_t v = 0;
    for (char ch : num) {
      if (ch < '0' || ch > '9') throw parse_error("principal filter point must be a number");
      v = v * 10 + uint64_t(ch - '0');
    }
    return principal(v);
  }
  if (text.substr(0, kGerm.size()) == kGerm) return germ_filter(Germ::parse(text.substr(kGerm.size())));
  throw parse_error("unknown filter spec: " + std::string(text));
}

}  // namespace rf
