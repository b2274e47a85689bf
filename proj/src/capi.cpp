#include "eqsplit/eqsplit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"
#include "eqsplit/serialize.hpp"

using nlohmann::json;
using namespace eqsplit;

struct eqsplit_context {
  ContextPtr ctx;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
eqsplit_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return EQSPLIT_OK;
  } catch (const InputError& e) {
    last_error = e.what();
    return EQSPLIT_INPUT_ERROR;
  } catch (const NotGenuineError& e) {
    last_error = e.what();
    return EQSPLIT_NOT_GENUINE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return EQSPLIT_DOMAIN_ERROR;
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return EQSPLIT_INPUT_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return EQSPLIT_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return EQSPLIT_INTERNAL_ERROR;
  } catch (...) {
    last_error = "internal error: unknown exception";
    return EQSPLIT_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

ContextPtr make_context(FiniteGroup g, const char* table_json) {
  auto group = std::make_shared<const FiniteGroup>(std::move(g));
  TablePtr table;
  if (table_json && *table_json) {
    json tj;
    try {
      tj = json::parse(table_json);
    } catch (const json::exception& e) {
      throw InputError(std::string("character table is not valid JSON: ") + e.what());
    }
    table = std::make_shared<const CharacterTable>(CharacterTable::from_json(group, tj));
  }
  return RepContext::build(group, table);
}

RepSequence parse_rep(const RepContext& ctx, const char* rep, const eqsplit_request& req) {
  require(rep, "rep");
  RepSequence v = RepSequence::parse(ctx.table(), rep);
  if (req.sort_canonical) {
    std::vector<int> blocks = v.blocks();
    std::sort(blocks.begin(), blocks.end());
    v = RepSequence(ctx.table(), std::move(blocks));
  }
  return v;
}

Mode resolve_mode(const RepContext& ctx, const RepSequence& v, eqsplit_mode m) {
  switch (m) {
    case EQSPLIT_MODE_AUTO: return natural_mode(ctx, v);
    case EQSPLIT_MODE_ABELIAN: return Mode::Abelian;
    case EQSPLIT_MODE_GENERAL: return Mode::General;
    case EQSPLIT_MODE_STEP: break;
  }
  throw InputError("the step mode applies to splitting a Grassmannian only");
}

std::string table_text(const json& t) {
  std::ostringstream out;
  out << t.at("group").get<std::string>() << " (order " << t.at("order").get<int>() << ")\n";
  std::size_t w = 6;
  for (const auto& r : t.at("irreducibles")) w = std::max(w, r.at("label").get<std::string>().size());
  std::vector<std::string> header;
  for (std::size_t c = 0; c < t.at("classes").size(); ++c) {
    header.push_back(t.at("class_representatives")[c].get<std::string>() + " [" +
                     std::to_string(t.at("classes")[c].get<int>()) + "]");
  }
  std::size_t cw = 8;
  for (const auto& h : header) cw = std::max(cw, h.size());
  for (const auto& r : t.at("irreducibles")) {
    for (const auto& v : r.at("values")) cw = std::max(cw, v.get<std::string>().size());
  }
  out << std::left << std::setw(static_cast<int>(w + 2)) << "class";
  for (const auto& h : header) out << std::setw(static_cast<int>(cw + 2)) << h;
  out << "\n";
  for (const auto& r : t.at("irreducibles")) {
    out << std::setw(static_cast<int>(w + 2)) << r.at("label").get<std::string>();
    for (const auto& v : r.at("values")) {
      out << std::setw(static_cast<int>(cw + 2)) << v.get<std::string>();
    }
    out << "\n";
  }
  std::string s = out.str();
  // Trailing padding is noise in diffs.
  std::string cleaned;
  std::istringstream lines(s);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    cleaned += line + "\n";
  }
  return cleaned;
}

}  // namespace

extern "C" {

const char* eqsplit_version(void) { return "1.0.0"; }

const char* eqsplit_last_error(void) { return last_error.c_str(); }

void eqsplit_string_free(char* s) { std::free(s); }

eqsplit_request eqsplit_default_request(void) {
  eqsplit_request r{};
  r.target = EQSPLIT_TARGET_CP;
  r.n = 1;
  r.mode = EQSPLIT_MODE_AUTO;
  return r;
}

eqsplit_status eqsplit_context_create(const char* group_ref, const char* table_json,
                                      eqsplit_context** out) {
  return guarded([&] {
    require(group_ref, "group_ref");
    require(out, "out");
    *out = nullptr;
    ContextPtr ctx = make_context(load_group(group_ref), table_json);
    *out = new eqsplit_context{std::move(ctx)};
  });
}

eqsplit_status eqsplit_context_create_from_json(const char* group_json, const char* table_json,
                                                eqsplit_context** out) {
  return guarded([&] {
    require(group_json, "group_json");
    require(out, "out");
    *out = nullptr;
    json spec;
    try {
      spec = json::parse(group_json);
    } catch (const json::exception& e) {
      throw InputError(std::string("group spec is not valid JSON: ") + e.what());
    }
    ContextPtr ctx = make_context(FiniteGroup::from_json(spec), table_json);
    *out = new eqsplit_context{std::move(ctx)};
  });
}

void eqsplit_context_free(eqsplit_context* ctx) { delete ctx; }

eqsplit_status eqsplit_group_order(const eqsplit_context* ctx, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ctx->ctx->group().order();
  });
}

eqsplit_status eqsplit_table(const eqsplit_context* ctx, eqsplit_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const json t = ctx->ctx->table()->to_json();
    if (format == EQSPLIT_FORMAT_JSON) {
      *out = dup(t.dump(2) + "\n");
    } else if (format == EQSPLIT_FORMAT_TEXT) {
      *out = dup(table_text(t));
    } else {
      throw InputError("character tables are emitted as json or text");
    }
  });
}

eqsplit_status eqsplit_subgroups(const eqsplit_context* ctx, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    json arr = json::array();
    for (const auto& sd : ctx->ctx->subgroups()) {
      arr.push_back({{"label", sd.subgroup.label},
                     {"order", sd.subgroup.order()},
                     {"structure", structure_name(*sd.subgroup.group)},
                     {"irreducibles", sd.table->labels()}});
    }
    *out = dup(arr.dump(2) + "\n");
  });
}

eqsplit_status eqsplit_split(const eqsplit_context* ctx, const char* rep,
                             const eqsplit_request* req, eqsplit_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(req, "req");
    require(out, "out");
    const RepContext& c = *ctx->ctx;
    const RepSequence v = parse_rep(c, rep, *req);
    WedgeDecomposition d;
    if (req->target == EQSPLIT_TARGET_CP) {
      d = resolve_mode(c, v, req->mode) == Mode::Abelian ? split_cp_abelian(c, v)
                                                         : split_cp_general(c, v);
    } else if (req->mode == EQSPLIT_MODE_STEP) {
      if (req->step_at < 0 || req->step_at > static_cast<int>(v.size())) {
        throw InputError("step position " + std::to_string(req->step_at) + " outside 0.." +
                         std::to_string(v.size()));
      }
      const auto at = static_cast<std::size_t>(req->step_at);
      d = split_gr_step(c, req->n, v.prefix(at), v.slice(at, v.size()));
    } else {
      d = resolve_mode(c, v, req->mode) == Mode::Abelian ? split_gr_abelian(c, req->n, v)
                                                         : split_gr_recursive(c, req->n, v);
    }
    const json j = decomposition_to_json(c, d);
    switch (format) {
      case EQSPLIT_FORMAT_JSON: *out = dup(j.dump(2) + "\n"); break;
      case EQSPLIT_FORMAT_TEXT: *out = dup(decomposition_text(j)); break;
      case EQSPLIT_FORMAT_LATEX: *out = dup(decomposition_latex(j) + "\n"); break;
      default: throw InputError("decompositions are emitted as json, text or latex");
    }
  });
}

eqsplit_status eqsplit_verify(const eqsplit_context* ctx, const char* rep,
                              const eqsplit_request* req, eqsplit_format format, char** out,
                              int* pass) {
  return guarded([&] {
    require(ctx, "ctx");
    require(req, "req");
    require(out, "out");
    const RepContext& c = *ctx->ctx;
    const RepSequence v = parse_rep(c, rep, *req);
    const Mode mode = req->wrong_twist && req->mode == EQSPLIT_MODE_AUTO
                          ? Mode::General
                          : resolve_mode(c, v, req->mode);
    VerifyOptions opts;
    opts.twist = req->wrong_twist ? Twist::Tensor : Twist::Hom;
    if (req->subgroup) opts.subgroup = req->subgroup;
    const VerificationReport r = req->target == EQSPLIT_TARGET_CP
                                     ? verify_cp(c, v, mode, opts)
                                     : verify_gr(c, req->n, v, mode, opts);
    const json j = report_to_json(r);
    switch (format) {
      case EQSPLIT_FORMAT_JSON: *out = dup(j.dump(2) + "\n"); break;
      case EQSPLIT_FORMAT_TEXT: *out = dup(report_text(j, req->details != 0)); break;
      default: throw InputError("reports are emitted as json or text");
    }
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

eqsplit_status eqsplit_render(const eqsplit_context* ctx, const char* decomposition,
                              eqsplit_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(decomposition, "decomposition");
    require(out, "out");
    json in;
    try {
      in = json::parse(decomposition);
    } catch (const json::exception& e) {
      throw InputError(std::string("decomposition is not valid JSON: ") + e.what());
    }
    const WedgeDecomposition d = decomposition_from_json(*ctx->ctx, in);
    const json j = decomposition_to_json(*ctx->ctx, d);
    switch (format) {
      case EQSPLIT_FORMAT_JSON: *out = dup(j.dump(2) + "\n"); break;
      case EQSPLIT_FORMAT_TEXT: *out = dup(decomposition_text(j)); break;
      case EQSPLIT_FORMAT_LATEX: *out = dup(decomposition_latex(j) + "\n"); break;
      default: throw InputError("decompositions are emitted as json, text or latex");
    }
  });
}

eqsplit_status eqsplit_sweep(const char* config_json, eqsplit_format format, char** out,
                             int* pass) {
  return guarded([&] {
    require(config_json, "config_json");
    require(out, "out");
    json cj;
    try {
      cj = json::parse(config_json);
    } catch (const json::exception& e) {
      throw InputError(std::string("sweep config is not valid JSON: ") + e.what());
    }
    SweepConfig cfg;
    cfg.groups = cj.at("groups").get<std::vector<std::string>>();
    const std::string target = cj.value("target", std::string("cp"));
    if (target != "cp" && target != "gr") throw InputError("sweep target must be cp or gr");
    cfg.target = target == "cp" ? Target::CP : Target::Gr;
    cfg.min_dim = cj.value("min_dim", cfg.min_dim);
    cfg.max_dim = cj.value("max_dim", cfg.max_dim);
    cfg.max_blocks = cj.value("max_blocks", cfg.max_blocks);
    cfg.min_n = cj.value("min_n", cfg.min_n);
    cfg.max_n = cj.value("max_n", cfg.max_n);
    if (cfg.max_dim < 0 || cfg.max_dim > 12) throw InputError("max_dim must be in 0..12");
    const std::string mode = cj.value("mode", std::string("auto"));
    if (mode == "abelian") {
      cfg.mode = Mode::Abelian;
    } else if (mode == "general") {
      cfg.mode = Mode::General;
    } else if (mode != "auto") {
      throw InputError("sweep mode must be auto, abelian or general");
    }
    cfg.twist = cj.value("wrong_twist", false) ? Twist::Tensor : Twist::Hom;
    if (cj.contains("sample") && !cj.at("sample").is_null()) {
      cfg.sample = cj.at("sample").get<std::size_t>();
    }
    cfg.seed = cj.value("seed", std::uint64_t{0});
    cfg.time_budget_seconds = cj.value("time_budget_seconds", 0.0);
    cfg.threads = cj.value("threads", 0u);
    cfg.keep_all = cj.value("keep_all", false);
    const bool timing = cj.value("timing", false);

    const SweepResult r = sweep(cfg);
    switch (format) {
      case EQSPLIT_FORMAT_JSON: *out = dup(sweep_to_json(r, timing).dump(2) + "\n"); break;
      case EQSPLIT_FORMAT_JUNIT: *out = dup(junit_xml(r)); break;
      case EQSPLIT_FORMAT_TEXT: {
        std::ostringstream s;
        s << "reports " << r.total << ", passed " << r.passed << ", failed " << r.failed
          << ", skipped " << r.skipped << (r.complete ? "" : " (incomplete)")
          << (r.even ? "" : ", odd-degree homology found") << "\n";
        for (const auto& rep : r.reports) s << report_text(report_to_json(rep));
        *out = dup(s.str());
        break;
      }
      default: throw InputError("sweeps are emitted as json, text or junit");
    }
    if (pass) *pass = r.failed == 0 && r.complete ? 1 : 0;
  });
}

}  // extern "C"
