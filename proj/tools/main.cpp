// Batch front door: every subcommand runs one library call and writes the
// JSON certificate it returns. Exit codes: 0 success, 1 mathematical
// failure or disagreement, 2 usage or parse errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey_forge.h"

namespace {

int status_to_exit(rf_status status) {
  if (status == RF_OK) return 0;
  if (status == RF_FAIL_MATH) return 1;
  return 2;
}

int emit(const std::string& output_path, char* json, rf_status status) {
  if (json) {
    if (output_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open output file: " << output_path << "\n";
        rf_string_free(json);
        return 2;
      }
      out << json;
    }
    rf_string_free(json);
  } else if (status != RF_OK) {
    std::cerr << "error: " << rf_status_name(status) << "\n";
  }
  return status_to_exit(status);
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

uint32_t resolve_jobs(uint32_t flag_value) {
  if (const char* env = std::getenv("RAMSEY_FORGE_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 512) return uint32_t(v);
  }
  return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramsey-forge: finite-scale Ramsey space toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  app.add_option("-o,--output", output, "write the certificate here instead of stdout");
  uint32_t jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for the sweep kernels")->default_val(1);

  // axioms
  auto* axioms = app.add_subcommand("axioms", "desk-scale axiom suite for a space");
  axioms->fallthrough();
  std::string space = "ellentuck";
  uint64_t ground = 10, depth_arg = 3, trials = 32;
  axioms->add_option("--space", space, "ellentuck | milliken")->required();
  axioms->add_option("--ground", ground, "ground size (elements 0..ground-1)");
  axioms->add_option("--depth", depth_arg, "node depth to enumerate");
  axioms->add_option("--trials", trials, "pigeonhole colorings to sample");

  // ramsey
  auto* ramsey = app.add_subcommand("ramsey", "homogenization chain vs brute-force search");
  ramsey->fallthrough();
  std::string input;
  uint32_t k = 3;
  int64_t threshold = -1;
  ramsey->add_option("--input", input, "coloring file (CSV, or JSON with .json suffix)")
      ->required();
  ramsey->add_option("--k", k, "homogeneous set size to hunt");
  ramsey->add_option("--threshold", threshold, "fixed branching threshold (-1 = majority)");

  // unions
  auto* unions = app.add_subcommand("unions", "finite-unions search / minimal number");
  unions->fallthrough();
  std::string unions_input;
  uint32_t blocks = 2, colors = 2;
  uint64_t max_n = 0;
  bool audit = false;
  unions->add_option("--input", unions_input, "subsets coloring file; omit for the oracle");
  unions->add_option("--blocks", blocks, "block count");
  unions->add_option("--colors", colors, "colors (oracle mode)");
  unions->add_option("--max", max_n, "oracle search limit");
  unions->add_flag("--audit", audit, "disable symmetry pruning");

  // rnumber
  auto* rnumber = app.add_subcommand("rnumber", "minimal ground forcing homogeneity");
  rnumber->fallthrough();
  uint32_t rn_n = 2, rn_k = 3, rn_r = 2;
  uint64_t rn_max = 8;
  bool rn_audit = false;
  rnumber->add_option("--n", rn_n, "subset arity");
  rnumber->add_option("--k", rn_k, "homogeneous size");
  rnumber->add_option("--r", rn_r, "colors");
  rnumber->add_option("--max", rn_max, "search limit");
  rnumber->add_flag("--audit", rn_audit, "disable symmetry pruning");

  // fuse
  auto* fuse = app.add_subcommand("fuse", "shrink a uniform tree into a node family");
  fuse->fallthrough();
  std::string fuse_space = "ellentuck", stem = "[]", branch, filter = "frechet", h_set;
  uint64_t fuse_depth = 3, fuse_bound = 16;
  fuse->add_option("--space", fuse_space, "ellentuck | milliken");
  fuse->add_option("--stem", stem, "stem as JSON ([0,2] or [[0],[1,2]])");
  fuse->add_option("--branch", branch, "branch code set, e.g. mod=2;res=[0]")->required();
  fuse->add_option("--filter", filter, "frechet | principal:N | germ:<germ>");
  fuse->add_option("--into", h_set, "allowed ground elements as a set literal")->required();
  fuse->add_option("--depth", fuse_depth, "levels above the stem to certify");
  fuse->add_option("--bound", fuse_bound, "ground bound for node enumeration");

  // diag
  auto* diag = app.add_subcommand("diag", "diagonalize a validated tree to a stream");
  diag->fallthrough();
  std::string diag_space = "ellentuck", diag_stem = "[]", diag_branch, diag_filter = "frechet";
  uint64_t diag_depth = 5, diag_bound = 24;
  diag->add_option("--space", diag_space, "ellentuck | milliken");
  diag->add_option("--stem", diag_stem, "stem as JSON");
  diag->add_option("--branch", diag_branch, "branch code set")->required();
  diag->add_option("--filter", diag_filter, "constant filter for validation");
  diag->add_option("--depth", diag_depth, "stream codes to extract");
  diag->add_option("--bound", diag_bound, "search bound for diagonal codes");

  // germ
  auto* germ = app.add_subcommand("germ", "evaluate a germ-calculus expression");
  germ->fallthrough();
  std::vector<std::string> germ_tokens;
  germ->add_option("expr", germ_tokens, "eq g1 g2 | member g in s | apply u v g")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  jobs = resolve_jobs(jobs);
  char* json = nullptr;

  if (*axioms) {
    rf_status s = rf_run_axioms(space.c_str(), ground, depth_arg, trials, &json);
    return emit(output, json, s);
  }

  if (*ramsey) {
    std::string text;
    if (!read_file(input, text)) {
      std::cerr << "cannot read coloring file: " << input << "\n";
      return 2;
    }
    rf_status s = rf_run_ramsey(text.c_str(), is_json_path(input) ? 1 : 0, k, threshold, &json);
    return emit(output, json, s);
  }

  if (*unions) {
    if (!unions_input.empty()) {
      std::string text;
      if (!read_file(unions_input, text)) {
        std::cerr << "cannot read coloring file: " << unions_input << "\n";
        return 2;
      }
      rf_status s =
          rf_run_unions_search(text.c_str(), is_json_path(unions_input) ? 1 : 0, blocks, &json);
      return emit(output, json, s);
    }
    if (max_n == 0) {
      std::cerr << "unions needs --input for a search or --max for the oracle\n";
      return 2;
    }
    rf_status s = rf_run_unions_number(blocks, colors, max_n, audit ? 1 : 0, jobs, &json);
    return emit(output, json, s);
  }

  if (*rnumber) {
    rf_status s = rf_run_ramsey_number(rn_n, rn_k, rn_r, rn_max, rn_audit ? 1 : 0, jobs, &json);
    return emit(output, json, s);
  }

  if (*fuse) {
    rf_status s = rf_run_fuse(fuse_space.c_str(), stem.c_str(), branch.c_str(), filter.c_str(),
                              h_set.c_str(), fuse_depth, fuse_bound, &json);
    return emit(output, json, s);
  }

  if (*diag) {
    rf_status s = rf_run_diag(diag_space.c_str(), diag_stem.c_str(), diag_branch.c_str(),
                              diag_filter.c_str(), diag_depth, diag_bound, &json);
    return emit(output, json, s);
  }

  if (*germ) {
    std::string expr;
    for (size_t i = 0; i < germ_tokens.size(); ++i) {
      if (i) expr += ' ';
      expr += germ_tokens[i];
    }
    rf_status s = rf_eval_germ(expr.c_str(), &json);
    return emit(output, json, s);
  }

  return 2;
}
