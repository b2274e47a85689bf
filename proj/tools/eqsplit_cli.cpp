// eqsplit: split, fixed, verify, table and sweep on top of the C API.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 input error,
// 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eqsplit/eqsplit.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int status_exit(eqsplit_status s) {
  if (s == EQSPLIT_OK) return 0;
  std::cerr << "eqsplit: " << eqsplit_last_error() << "\n";
  return s == EQSPLIT_INTERNAL_ERROR ? kExitInternal : kExitInput;
}

int emit(eqsplit_status s, char* out) {
  if (s != EQSPLIT_OK) return status_exit(s);
  std::cout << out;
  eqsplit_string_free(out);
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--table", "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

eqsplit_format parse_format(const std::string& f) {
  if (f == "text") return EQSPLIT_FORMAT_TEXT;
  if (f == "latex") return EQSPLIT_FORMAT_LATEX;
  if (f == "junit") return EQSPLIT_FORMAT_JUNIT;
  return EQSPLIT_FORMAT_JSON;
}

struct Common {
  std::string group;
  std::string table_path;
  std::string format = "json";
};

struct RepArgs {
  std::string rep;
  std::string target = "cp";
  int n = 1;
  std::string mode = "auto";
  std::string subgroup;
  std::string sort;
  bool wrong_twist = false;
  int step_at = -1;
};

void add_group(CLI::App* app, Common& c) {
  app->add_option("--group,-g", c.group,
                  "builtin:NAME, a JSON group spec path, or - for stdin")
      ->required();
  app->add_option("--table", c.table_path, "user-supplied character table JSON");
}

void add_rep(CLI::App* app, RepArgs& r, bool with_twist) {
  app->add_option("--rep,-r", r.rep, "ordered irreducibles, e.g. triv,triv,sign or 2*triv,sign")
      ->required();
  app->add_option("--target,-t", r.target, "cp or gr")
      ->check(CLI::IsMember({"cp", "gr"}));
  app->add_option("--n", r.n, "plane dimension for --target gr")->check(CLI::NonNegativeNumber);
  app->add_option("--mode", r.mode, "auto, abelian, general (or step with --step-at)")
      ->check(CLI::IsMember({"auto", "abelian", "general", "step"}));
  app->add_option("--sort", r.sort, "canonical: reorder blocks by table order")
      ->check(CLI::IsMember({"canonical"}));
  app->add_option("--subgroup", r.subgroup, "restrict to one subgroup class by label");
  if (with_twist) {
    app->add_flag("--wrong-twist", r.wrong_twist,
                  "diagnostic: read Hom(xi, U) as xi (x) U on fixed points");
  } else {
    app->add_option("--step-at", r.step_at,
                    "with --mode step: V0 is the first K blocks, V' the rest");
  }
}

eqsplit_request to_request(const RepArgs& r) {
  eqsplit_request q = eqsplit_default_request();
  q.target = r.target == "gr" ? EQSPLIT_TARGET_GR : EQSPLIT_TARGET_CP;
  q.n = r.target == "gr" ? r.n : 1;
  if (r.mode == "abelian") q.mode = EQSPLIT_MODE_ABELIAN;
  if (r.mode == "general") q.mode = EQSPLIT_MODE_GENERAL;
  if (r.mode == "step") q.mode = EQSPLIT_MODE_STEP;
  q.wrong_twist = r.wrong_twist ? 1 : 0;
  q.subgroup = r.subgroup.empty() ? nullptr : r.subgroup.c_str();
  q.sort_canonical = r.sort == "canonical" ? 1 : 0;
  q.step_at = r.step_at;
  return q;
}

class Context {
 public:
  explicit Context(const Common& c) {
    std::string table;
    if (!c.table_path.empty()) table = read_file(c.table_path);
    status_ = eqsplit_context_create(c.group.c_str(), table.empty() ? nullptr : table.c_str(),
                                     &ctx_);
  }
  ~Context() { eqsplit_context_free(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  eqsplit_status status() const { return status_; }
  const eqsplit_context* get() const { return ctx_; }

 private:
  eqsplit_context* ctx_ = nullptr;
  eqsplit_status status_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable wedge decompositions of CP(V) and Gr_n(V) with fixed-point checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eqsplit_version()));

  Common split_c, fixed_c, verify_c, table_c, sub_c, render_c;
  RepArgs split_r, fixed_r, verify_r;

  auto* split = app.add_subcommand("split", "stable wedge decomposition");
  add_group(split, split_c);
  add_rep(split, split_r, false);
  split->add_option("--format,-f", split_c.format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));

  auto* fixed = app.add_subcommand("fixed", "fixed-point report with components and summand terms");
  add_group(fixed, fixed_c);
  add_rep(fixed, fixed_r, true);
  fixed_c.format = "text";
  fixed->add_option("--format,-f", fixed_c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "compare both fixed-point computations");
  add_group(verify, verify_c);
  add_rep(verify, verify_r, true);
  verify->add_option("--format,-f", verify_c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "character table");
  add_group(table, table_c);
  table->add_option("--format,-f", table_c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* subgroups = app.add_subcommand("subgroups", "subgroup classes");
  add_group(subgroups, sub_c);

  std::string render_input = "-";
  auto* render = app.add_subcommand("render", "re-emit a decomposition JSON document");
  add_group(render, render_c);
  render->add_option("--input,-i", render_input, "decomposition JSON path or - for stdin");
  render->add_option("--format,-f", render_c.format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));

  std::vector<std::string> sweep_groups{"builtin:C2", "builtin:C3", "builtin:C4",
                                        "builtin:C2xC2", "builtin:C6"};
  std::string sweep_target = "cp";
  std::string sweep_mode = "auto";
  std::string sweep_format = "text";
  std::string junit_path;
  int max_dim = 5, max_blocks = 0, min_n = 0, max_n = 3, threads = 0;
  long sample = -1;
  std::uint64_t seed = 0;
  double budget = 0;
  bool keep_all = false, timing = false, sweep_twist = false;
  auto* sw = app.add_subcommand("sweep", "verify every ordered sequence up to a bound");
  sw->add_option("--groups", sweep_groups, "group references")->delimiter(',');
  sw->add_option("--target,-t", sweep_target, "cp or gr")->check(CLI::IsMember({"cp", "gr"}));
  sw->add_option("--max-dim", max_dim, "bound on dim V")->check(CLI::Range(0, 12));
  sw->add_option("--max-blocks", max_blocks, "bound on the number of blocks (0: none)");
  sw->add_option("--min-n", min_n, "smallest plane dimension for gr");
  sw->add_option("--max-n", max_n, "largest plane dimension for gr");
  sw->add_option("--mode", sweep_mode, "auto, abelian or general")
      ->check(CLI::IsMember({"auto", "abelian", "general"}));
  sw->add_option("--sample", sample, "verify a seeded random sample of sequences per group");
  sw->add_option("--seed", seed, "sampling seed");
  sw->add_option("--budget", budget, "time budget in seconds (0: none)");
  sw->add_option("--threads", threads, "worker threads (0: all cores)");
  sw->add_flag("--all", keep_all, "list passing reports too");
  sw->add_flag("--timing", timing, "include timings in JSON");
  sw->add_flag("--wrong-twist", sweep_twist, "diagnostic twist");
  sw->add_option("--format,-f", sweep_format, "json, text or junit")
      ->check(CLI::IsMember({"json", "text", "junit"}));
  sw->add_option("--junit", junit_path, "also write JUnit XML to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const auto run_rep = [](const Common& c, const RepArgs& r, bool details,
                            bool is_verify) -> int {
      Context ctx(c);
      if (ctx.status() != EQSPLIT_OK) return status_exit(ctx.status());
      eqsplit_request q = to_request(r);
      q.details = details ? 1 : 0;
      char* out = nullptr;
      int pass = 0;
      const eqsplit_status s =
          is_verify ? eqsplit_verify(ctx.get(), r.rep.c_str(), &q, parse_format(c.format), &out,
                                     &pass)
                    : eqsplit_split(ctx.get(), r.rep.c_str(), &q, parse_format(c.format), &out);
      if (const int code = emit(s, out); code != 0) return code;
      return is_verify && !pass ? kExitFail : 0;
    };

    if (*split) return run_rep(split_c, split_r, false, false);
    if (*fixed) return run_rep(fixed_c, fixed_r, true, true);
    if (*verify) return run_rep(verify_c, verify_r, false, true);

    if (*table || *subgroups) {
      const Common& c = *table ? table_c : sub_c;
      Context ctx(c);
      if (ctx.status() != EQSPLIT_OK) return status_exit(ctx.status());
      char* out = nullptr;
      const eqsplit_status s = *table ? eqsplit_table(ctx.get(), parse_format(c.format), &out)
                                      : eqsplit_subgroups(ctx.get(), &out);
      return emit(s, out);
    }

    if (*render) {
      Context ctx(render_c);
      if (ctx.status() != EQSPLIT_OK) return status_exit(ctx.status());
      std::string doc = render_input == "-"
                            ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                            : read_file(render_input);
      char* out = nullptr;
      const eqsplit_status s =
          eqsplit_render(ctx.get(), doc.c_str(), parse_format(render_c.format), &out);
      return emit(s, out);
    }

    nlohmann::json cfg{{"groups", sweep_groups}, {"target", sweep_target},
                       {"max_dim", max_dim},     {"max_blocks", max_blocks},
                       {"min_n", min_n},         {"max_n", max_n},
                       {"mode", sweep_mode},     {"seed", seed},
                       {"time_budget_seconds", budget}, {"threads", threads},
                       {"keep_all", keep_all},   {"timing", timing},
                       {"wrong_twist", sweep_twist}};
    if (sample >= 0) cfg["sample"] = sample;
    const std::string cfg_text = cfg.dump();
    char* out = nullptr;
    int pass = 0;
    eqsplit_status s = eqsplit_sweep(cfg_text.c_str(), parse_format(sweep_format), &out, &pass);
    if (const int code = emit(s, out); code != 0) return code;
    if (!junit_path.empty()) {
      char* xml = nullptr;
      s = eqsplit_sweep(cfg_text.c_str(), EQSPLIT_FORMAT_JUNIT, &xml, &pass);
      if (s != EQSPLIT_OK) return status_exit(s);
      std::ofstream(junit_path) << xml;
      eqsplit_string_free(xml);
    }
    return pass ? 0 : kExitFail;
  } catch (const CLI::Error& e) {
    std::cerr << "eqsplit: " << e.what() << "\n";
    return kExitInput;
  }
}
