#include "ramsey_forge.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "ramseyforge/axiom_check.hpp"
#include "ramseyforge/certificates.hpp"
#include "ramseyforge/coloring.hpp"
#include "ramseyforge/diagonal.hpp"
#include "ramseyforge/errors.hpp"
#include "ramseyforge/fusion.hpp"
#include "ramseyforge/kernels.hpp"
#include "ramseyforge/pipeline.hpp"

struct rf_pset {
  rf::PeriodicSet v;
};

struct rf_germ {
  rf::Germ v;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rf_tri to_c(rf::Tri t) {
  switch (t) {
    case rf::Tri::no: return RF_TRI_FALSE;
    case rf::Tri::yes: return RF_TRI_TRUE;
    default: return RF_TRI_UNKNOWN;
  }
}

template <typename F>
rf_status guarded(F&& f) {
  try {
    return f();
  } catch (const rf::parse_error&) {
    return RF_ERR_PARSE;
  } catch (const rf::unsupported_capability&) {
    return RF_ERR_UNSUPPORTED;
  } catch (const rf::mode_unsupported&) {
    return RF_ERR_UNSUPPORTED;
  } catch (const std::invalid_argument&) {
    return RF_ERR_INVALID;
  } catch (const std::exception&) {
    return RF_ERR_INTERNAL;
  }
}

rf::Approx parse_stem(const rf::Space& space, const char* stem_json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(stem_json);
  } catch (const nlohmann::json::exception&) {
    throw rf::parse_error("stem must be a JSON array");
  }
  if (!doc.is_array()) throw rf::parse_error("stem must be a JSON array");
  rf::Approx stem;
  if (space.kind() == rf::Space::Kind::ellentuck) {
    for (const auto& e : doc) {
      if (!e.is_number_unsigned()) throw rf::parse_error("stem elements must be naturals");
      stem.push_back(e.get<uint64_t>());
    }
  } else {
    for (const auto& block : doc) {
      if (!block.is_array() || block.empty())
        throw rf::parse_error("milliken stem blocks must be nonempty arrays");
      rf::Code mask = 0;
      for (const auto& e : block) {
        if (!e.is_number_unsigned() || e.get<uint64_t>() >= 34)
          throw rf::parse_error("stem block elements must be small naturals");
        mask |= rf::Code{1} << e.get<uint64_t>();
      }
      stem.push_back(mask);
    }
  }
  if (!space.node_valid(stem)) throw rf::parse_error("stem is not a valid node");
  return stem;
}

rf::ColoringTable parse_coloring(const char* text, int is_json) {
  if (!text) throw rf::parse_error("missing coloring");
  return is_json ? rf::coloring_from_json_text(text) : rf::coloring_from_csv_text(text);
}

rf::Json oracle_outcome_json(const rf::OracleOutcome& outcome) {
  rf::Json out;
  out["found"] = outcome.value.has_value();
  if (outcome.value) out["value"] = *outcome.value;
  out["limit"] = outcome.limit;
  out["colorings_checked"] = outcome.colorings_checked;
  if (outcome.counterexample) out["counterexample_colors"] = *outcome.counterexample;
  return out;
}

}  // namespace

extern "C" {

const char* rf_status_name(rf_status status) {
  switch (status) {
    case RF_OK: return "ok";
    case RF_FAIL_MATH: return "math-failure";
    case RF_ERR_PARSE: return "parse-error";
    case RF_ERR_INVALID: return "invalid-argument";
    case RF_ERR_UNSUPPORTED: return "unsupported";
    default: return "internal-error";
  }
}

uint32_t rf_version(void) { return 100; }

void rf_string_free(char* s) { std::free(s); }

rf_status rf_pset_parse(const char* text, rf_pset** out) {
  if (!text || !out) return RF_ERR_INVALID;
  return guarded([&] {
    *out = new rf_pset{rf::PeriodicSet::parse(text)};
    return RF_OK;
  });
}

rf_status rf_pset_format(const rf_pset* set, char** out) {
  if (!set || !out) return RF_ERR_INVALID;
  *out = dup_string(set->v.to_text());
  return *out ? RF_OK : RF_ERR_INTERNAL;
}

rf_status rf_pset_combine(const char* op, const rf_pset* a, const rf_pset* b, rf_pset** out) {
  if (!op || !a || !b || !out) return RF_ERR_INVALID;
  return guarded([&] {
    std::string name(op);
    rf::SetOp which;
    if (name == "union")
      which = rf::SetOp::union_;
    else if (name == "intersect")
      which = rf::SetOp::intersect;
    else if (name == "difference")
      which = rf::SetOp::difference;
    else
      return RF_ERR_INVALID;
    *out = new rf_pset{rf::ps_combine(which, a->v, b->v)};
    return RF_OK;
  });
}

int rf_pset_contains(const rf_pset* set, uint64_t n) { return set && set->v.contains(n) ? 1 : 0; }
int rf_pset_is_cofinite(const rf_pset* set) { return set && set->v.is_cofinite() ? 1 : 0; }
int rf_pset_is_finite(const rf_pset* set) { return set && set->v.is_finite() ? 1 : 0; }
void rf_pset_free(rf_pset* set) { delete set; }

rf_status rf_germ_parse(const char* text, rf_germ** out) {
  if (!text || !out) return RF_ERR_INVALID;
  return guarded([&] {
    *out = new rf_germ{rf::Germ::parse(text)};
    return RF_OK;
  });
}

rf_status rf_germ_format(const rf_germ* germ, char** out) {
  if (!germ || !out) return RF_ERR_INVALID;
  *out = dup_string(germ->v.to_text());
  return *out ? RF_OK : RF_ERR_INTERNAL;
}

rf_status rf_germ_eq(const rf_germ* a, const rf_germ* b, rf_tri* out) {
  if (!a || !b || !out) return RF_ERR_INVALID;
  return guarded([&] {
    *out = to_c(rf::germ_eq(a->v, b->v));
    return RF_OK;
  });
}

rf_status rf_germ_member(const rf_germ* germ, const rf_pset* set, rf_tri* out) {
  if (!germ || !set || !out) return RF_ERR_INVALID;
  return guarded([&] {
    *out = to_c(rf::germ_member(germ->v, set->v));
    return RF_OK;
  });
}

rf_status rf_germ_apply_affine(uint64_t u, uint64_t v, const rf_germ* germ, rf_germ** out) {
  if (!germ || !out) return RF_ERR_INVALID;
  return guarded([&] {
    *out = new rf_germ{rf::germ_apply_affine(u, v, germ->v)};
    return RF_OK;
  });
}

int rf_germ_is_nonstandard(const rf_germ* germ) {
  return germ && germ->v.is_nonstandard() ? 1 : 0;
}

uint64_t rf_germ_value_at(const rf_germ* germ, uint64_t index) {
  return germ ? germ->v.value_at(index) : 0;
}

void rf_germ_free(rf_germ* germ) { delete germ; }

rf_status rf_run_axioms(const char* space_name, uint64_t ground, uint64_t depth, uint64_t trials,
                        char** json_out) {
  if (!space_name || !json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    const rf::Space& space = rf::Space::by_name(space_name);
    rf::CheckReport report = rf::check_axioms(space, ground, depth, trials);
    rf::Json params;
    params["space"] = space_name;
    params["ground"] = ground;
    params["depth"] = depth;
    params["trials"] = trials;
    rf::Json doc = rf::certificate("axioms", std::move(params), rf::check_report_to_json(report));
    *json_out = dup_string(rf::dump_certificate(doc));
    return report.all_pass() ? RF_OK : RF_FAIL_MATH;
  });
}

rf_status rf_run_ramsey(const char* coloring_text, int coloring_is_json, uint32_t k,
                        int64_t threshold, char** json_out) {
  if (!json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    rf::ColoringTable coloring = parse_coloring(coloring_text, coloring_is_json);
    if (coloring.arity() == 0)
      throw rf::parse_error("the homogenization chain needs a fixed-arity coloring");
    uint32_t n = coloring.arity();
    uint64_t ground = coloring.ground_count();
    std::optional<uint32_t> thr;
    if (threshold >= 0) thr = uint32_t(threshold);

    rf::Real x = rf::Real::naturals();
    rf::ColoringTable table = coloring;
    auto target = [table](const rf::Approx& node) {
      uint64_t mask = 0;
      for (rf::Code c : node) mask |= uint64_t{1} << c;
      return table.color(mask) == 1;
    };
    rf::PipelineOutcome engine = rf::ramsey_pipeline(n, target, x, ground, k, thr);

    rf::SearchStats stats;
    std::optional<rf::RamseyWitness> search =
        rf::finite_ramsey_search(ground - 1, n, coloring.colors(), coloring, k, &stats);
    bool search_ok = !search || rf::recheck_ramsey_witness(coloring, *search, n);

    // The chain certifies witnesses it finds; the search is exhaustive. So a
    // chain witness without a search witness (or failing its recheck) is a
    // bug signal. The chain coming up empty while the search succeeds is the
    // expected gap between threshold certification and bare existence.
    bool engine_sound =
        !engine.witness || (engine.witness_rechecked && search.has_value());
    bool agree = engine_sound && search_ok;
    bool match = engine.witness.has_value() == search.has_value();

    rf::Json params;
    params["arity"] = n;
    params["ground"] = ground;
    params["colors"] = coloring.colors();
    params["k"] = k;
    params["threshold"] = threshold < 0 ? rf::Json("majority") : rf::Json(threshold);
    rf::Json engine_json;
    engine_json["verdict"] = std::string(to_string(engine.verdict));
    engine_json["diagonal"] = engine.diagonal;
    if (engine.witness) {
      engine_json["witness"] = *engine.witness;
      engine_json["recheck"] = engine.witness_rechecked;
    }
    rf::Json search_json;
    search_json["found"] = search.has_value();
    if (search) {
      search_json["witness"] = search->elements;
      search_json["color"] = search->color;
      search_json["recheck"] = search_ok;
    }
    search_json["candidates"] = stats.candidates;
    rf::Json result;
    result["engine"] = std::move(engine_json);
    result["search"] = std::move(search_json);
    result["agreement"] = agree;
    result["match"] = match;
    rf::Json doc = rf::certificate("ramsey", std::move(params), std::move(result));
    *json_out = dup_string(rf::dump_certificate(doc));
    return agree ? RF_OK : RF_FAIL_MATH;
  });
}

rf_status rf_run_unions_search(const char* coloring_text, int coloring_is_json, uint32_t blocks,
                               char** json_out) {
  if (!json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    rf::ColoringTable coloring = parse_coloring(coloring_text, coloring_is_json);
    if (coloring.arity() != 0)
      throw rf::parse_error("the unions search needs a subsets coloring");
    rf::SearchStats stats;
    std::optional<rf::UnionsWitness> witness =
        rf::finite_unions_search(coloring.ground_count(), coloring.colors(), coloring, blocks,
                                 &stats);
    bool recheck = !witness || rf::recheck_unions_witness(coloring, *witness);

    rf::Json params;
    params["ground"] = coloring.ground_count();
    params["colors"] = coloring.colors();
    params["blocks"] = blocks;
    rf::Json result;
    result["found"] = witness.has_value();
    if (witness) {
      rf::Json blocks_json = rf::Json::array();
      for (uint64_t mask : witness->block_masks) {
        std::vector<uint64_t> elems;
        for (uint64_t e = 0; e < coloring.ground_count(); ++e)
          if (mask & (uint64_t{1} << e)) elems.push_back(e);
        blocks_json.push_back(elems);
      }
      result["witness"] = std::move(blocks_json);
      result["color"] = witness->color;
    }
    result["recheck"] = recheck;
    result["candidates"] = stats.candidates;
    rf::Json doc = rf::certificate("unions", std::move(params), std::move(result));
    *json_out = dup_string(rf::dump_certificate(doc));
    return recheck ? RF_OK : RF_FAIL_MATH;
  });
}

rf_status rf_run_unions_number(uint32_t blocks, uint32_t colors, uint64_t max_n, int audit,
                               uint32_t jobs, char** json_out) {
  if (!json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    rf::OracleOutcome outcome =
        rf::unions_number_oracle(blocks, colors, max_n, audit != 0, jobs ? jobs : 1);
    rf::Json params;
    params["blocks"] = blocks;
    params["colors"] = colors;
    params["max_n"] = max_n;
    params["audit"] = audit != 0;
    rf::Json doc =
        rf::certificate("unions-number", std::move(params), oracle_outcome_json(outcome));
    *json_out = dup_string(rf::dump_certificate(doc));
    return RF_OK;
  });
}

rf_status rf_run_ramsey_number(uint32_t n, uint32_t k, uint32_t colors, uint64_t max_n, int audit,
                               uint32_t jobs, char** json_out) {
  if (!json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    rf::OracleOutcome outcome =
        rf::ramsey_number_oracle(n, k, colors, max_n, audit != 0, jobs ? jobs : 1);
    rf::Json params;
    params["arity"] = n;
    params["k"] = k;
    params["colors"] = colors;
    params["max_n"] = max_n;
    params["audit"] = audit != 0;
    rf::Json doc =
        rf::certificate("ramsey-number", std::move(params), oracle_outcome_json(outcome));
    *json_out = dup_string(rf::dump_certificate(doc));
    return RF_OK;
  });
}

rf_status rf_run_fuse(const char* space_name, const char* stem_json, const char* branch_set,
                      const char* filter_spec, const char* h_set, uint64_t depth, uint64_t bound,
                      char** json_out) {
  if (!space_name || !stem_json || !branch_set || !filter_spec || !h_set || !json_out)
    return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    const rf::Space& space = rf::Space::by_name(space_name);
    rf::Approx stem = parse_stem(space, stem_json);
    rf::PeriodicSet branch = rf::PeriodicSet::parse(branch_set);
    rf::PeriodicSet h = rf::PeriodicSet::parse(h_set);
    rf::FilterAssignment filters =
        rf::FilterAssignment::constant(rf::FilterOracle::parse(filter_spec));
    rf::LazyTree tree = rf::uniform_tree(space, stem, branch);
    rf::NodePredicate predicate = rf::NodePredicate::elements_in(space, h);

    rf::Json params;
    params["space"] = space_name;
    params["stem"] = rf::node_to_json(space, stem);
    params["branch"] = branch.to_text();
    params["filter"] = filter_spec;
    params["h"] = h.to_text();
    params["depth"] = depth;
    params["bound"] = bound;

    rf::Json result;
    try {
      rf::LazyTree fused = rf::fuse_into(tree, filters, predicate, depth, bound);
      rf::Json nodes = rf::Json::array();
      for (const rf::Approx& node : fused.nodes_to_depth(depth, bound))
        nodes.push_back(rf::node_to_json(space, node));
      result["status"] = "fused";
      result["nodes"] = std::move(nodes);
      rf::ValidationReport validation = rf::validate_filter_tree(fused, filters, depth, bound);
      result["filterReport"] = rf::validation_to_json(space, validation);
      rf::Json doc = rf::certificate("fuse", std::move(params), std::move(result));
      *json_out = dup_string(rf::dump_certificate(doc));
      return RF_OK;
    } catch (const rf::promise_violated& violation) {
      result["status"] = "promise-violated";
      result["violation"] = rf::node_to_json(space, violation.node);
      result["message"] = violation.what();
      rf::Json doc = rf::certificate("fuse", std::move(params), std::move(result));
      *json_out = dup_string(rf::dump_certificate(doc));
      return RF_FAIL_MATH;
    }
  });
}

rf_status rf_run_diag(const char* space_name, const char* stem_json, const char* branch_set,
                      const char* filter_spec, uint64_t depth, uint64_t bound, char** json_out) {
  if (!space_name || !stem_json || !branch_set || !filter_spec || !json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    const rf::Space& space = rf::Space::by_name(space_name);
    rf::Approx stem = parse_stem(space, stem_json);
    rf::PeriodicSet branch = rf::PeriodicSet::parse(branch_set);
    rf::FilterOracle oracle = rf::FilterOracle::parse(filter_spec);
    rf::LazyTree tree = rf::uniform_tree(space, stem, branch);

    rf::Json params;
    params["space"] = space_name;
    params["stem"] = rf::node_to_json(space, stem);
    params["branch"] = branch.to_text();
    params["filter"] = filter_spec;
    params["depth"] = depth;
    params["bound"] = bound;

    rf::Json result;
    try {
      rf::Real x = rf::diagonalize_to_real(tree, oracle, stem, depth, bound);
      result["status"] = "diagonalized";
      result["stream_prefix"] = rf::node_to_json(space, x.prefix(stem.size() + depth));
      rf::ValidationReport validation =
          rf::validate_filter_tree(tree, rf::FilterAssignment::constant(oracle), depth, bound);
      result["filterReport"] = rf::validation_to_json(space, validation);
      rf::Json doc = rf::certificate("diag", std::move(params), std::move(result));
      *json_out = dup_string(rf::dump_certificate(doc));
      return RF_OK;
    } catch (const rf::validation_failed& err) {
      result["status"] = "validation-failed";
      result["message"] = err.what();
      rf::Json doc = rf::certificate("diag", std::move(params), std::move(result));
      *json_out = dup_string(rf::dump_certificate(doc));
      return RF_FAIL_MATH;
    } catch (const rf::exhausted& err) {
      result["status"] = "exhausted";
      result["message"] = err.what();
      rf::Json doc = rf::certificate("diag", std::move(params), std::move(result));
      *json_out = dup_string(rf::dump_certificate(doc));
      return RF_FAIL_MATH;
    }
  });
}

rf_status rf_eval_germ(const char* expr, char** json_out) {
  if (!expr || !json_out) return RF_ERR_INVALID;
  return guarded([&]() -> rf_status {
    std::istringstream in(expr);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw rf::parse_error("empty germ expression");

    rf::Json params;
    params["expr"] = expr;
    rf::Json result;

    auto sample_membership = [](const rf::Germ& g, const rf::PeriodicSet& s) {
      std::vector<uint64_t> in_idx, out_idx;
      for (uint64_t i = 0; i < 48; ++i)
        (s.contains(g.value_at(i)) ? in_idx : out_idx).push_back(i);
      rf::Json j;
      j["hits"] = in_idx;
      j["misses"] = out_idx;
      return j;
    };

    if (tokens[0] == "eq" && tokens.size() == 3) {
      rf::Germ a = rf::Germ::parse(tokens[1]);
      rf::Germ b = rf::Germ::parse(tokens[2]);
      rf::Tri verdict = rf::germ_eq(a, b);
      result["op"] = "eq";
      result["verdict"] = std::string(to_string(verdict));
      std::vector<uint64_t> agree, disagree;
      for (uint64_t i = 0; i < 48; ++i)
        (a.value_at(i) == b.value_at(i) ? agree : disagree).push_back(i);
      result["witness"] = rf::Json{{"agreements", agree}, {"disagreements", disagree}};
    } else if (tokens[0] == "member" && tokens.size() == 4 && tokens[2] == "in") {
      rf::Germ g = rf::Germ::parse(tokens[1]);
      rf::PeriodicSet s = rf::PeriodicSet::parse(tokens[3]);
      rf::Tri verdict = rf::germ_member(g, s);
      result["op"] = "member";
      result["verdict"] = std::string(to_string(verdict));
      result["witness"] = sample_membership(g, s);
    } else if (tokens[0] == "apply" && tokens.size() == 4) {
      auto number = [](const std::string& tok) {
        if (tok.empty()) throw rf::parse_error("apply needs numeric coefficients");
        uint64_t v = 0;
        for (char ch : tok) {
          if (ch < '0' || ch > '9') throw rf::parse_error("apply needs numeric coefficients");
          v = v * 10 + uint64_t(ch - '0');
        }
        return v;
      };
      uint64_t u = number(tokens[1]);
      uint64_t v = number(tokens[2]);
      rf::Germ g = rf::Germ::parse(tokens[3]);
      rf::Germ mapped = rf::germ_apply_affine(u, v, g);
      result["op"] = "apply";
      result["germ"] = mapped.to_text();
    } else {
      throw rf::parse_error("bad germ expression: " + std::string(expr));
    }
    rf::Json doc = rf::certificate("germ", std::move(params), std::move(result));
    *json_out = dup_string(rf::dump_certificate(doc));
    return RF_OK;
  });
}

}  // extern "C"
