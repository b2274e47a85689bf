#include "eqsplit/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "eqsplit/error.hpp"

namespace eqsplit {

using nlohmann::json;

namespace {

const char* target_name(Target t) { return t == Target::CP ? "cp" : "gr"; }
const char* mode_name(Mode m) { return m == Mode::Abelian ? "abelian" : "general"; }

SummandKind parse_kind(const std::string& s) {
  if (s == "sphere") return SummandKind::Sphere;
  if (s == "thom") return SummandKind::Thom;
  if (s == "smash") return SummandKind::Smash;
  if (s == "grplus") return SummandKind::GrPlus;
  throw InputError("unknown summand kind '" + s + "'");
}

json poly_json(const PoincarePolynomial& p) {
  return {{"text", p.to_string()}, {"coefficients", p.coeffs()}};
}

RepSequence parse_labels(const RepContext& ctx, const json& labels) {
  std::vector<int> blocks;
  for (const auto& l : labels) {
    const std::string s = l.get<std::string>();
    const int idx = ctx.table()->index_of(s);
    if (idx < 0) throw InputError("unknown irreducible '" + s + "' in decomposition");
    blocks.push_back(idx);
  }
  return RepSequence(ctx.table(), std::move(blocks));
}

}  // namespace

json decomposition_to_json(const RepContext& ctx, const WedgeDecomposition& d) {
  json out;
  out["group"] = ctx.group().name();
  out["target"] = target_name(d.target);
  out["n"] = d.n;
  out["method"] = d.method;
  out["rep"] = d.rep.labels();
  out["irreducibles"] = ctx.table()->labels();
  out["dimensions"] = json::object();
  for (int i = 0; i < ctx.table()->size(); ++i) {
    out["dimensions"][ctx.table()->label(i)] = ctx.table()->dimension(i);
  }
  out["summands"] = json::array();
  for (const auto& s : d.summands) {
    json js;
    js["kind"] = to_string(s.kind);
    js["rep"] = json::object();
    for (std::size_t i = 0; i < s.sphere.size(); ++i) {
      if (s.sphere[i] != 0) js["rep"][ctx.table()->label(static_cast<int>(i))] = s.sphere[i];
    }
    js["chain"] = json::array();
    js["base"] = json::array();
    for (std::size_t f = 0; f < s.chain.size(); ++f) {
      js["chain"].push_back({{"k", s.chain[f].k}, {"ambient", s.chain[f].ambient.labels()}});
      if (!s.chain[f].is_point()) js["base"].push_back(f);
    }
    js["bundle"] = json::array();
    for (const auto& t : bundle_terms(s.chain)) {
      js["bundle"].push_back(
          {{"source", t.source}, {"target", t.target}, {"complement", t.complement}});
    }
    js["trace"] = s.trace;
    out["summands"].push_back(std::move(js));
  }
  return out;
}

WedgeDecomposition decomposition_from_json(const RepContext& ctx, const json& j) {
  try {
    if (j.contains("group") && j.at("group").get<std::string>() != ctx.group().name()) {
      throw InputError("decomposition is for group " + j.at("group").get<std::string>() +
                       ", not " + ctx.group().name());
    }
    WedgeDecomposition d;
    const std::string target = j.at("target").get<std::string>();
    if (target != "cp" && target != "gr") throw InputError("target must be cp or gr");
    d.target = target == "cp" ? Target::CP : Target::Gr;
    d.n = j.at("n").get<int>();
    d.method = j.at("method").get<std::string>();
    d.rep = parse_labels(ctx, j.at("rep"));
    for (const auto& js : j.at("summands")) {
      WedgeSummand s;
      s.kind = parse_kind(js.at("kind").get<std::string>());
      for (const auto& f : js.at("chain")) {
        s.chain.push_back({f.at("k").get<int>(), parse_labels(ctx, f.at("ambient"))});
      }
      if (s.kind == SummandKind::Sphere) {
        s.sphere.assign(ctx.table()->size(), 0);
        for (const auto& [label, mult] : js.at("rep").get<std::map<std::string, long>>()) {
          const int idx = ctx.table()->index_of(label);
          if (idx < 0) throw InputError("unknown irreducible '" + label + "' in sphere");
          s.sphere[idx] += mult;
        }
      }
      s.trace = js.value("trace", std::vector<std::string>{});
      if (!s.chain.empty()) {
        const WedgeSummand rebuilt = make_chain_summand(ctx, s.chain, s.trace);
        if (rebuilt.chain != s.chain || rebuilt.kind != s.kind || rebuilt.sphere != s.sphere) {
          throw InputError("summand kind or sphere does not match its chain");
        }
      } else if (s.kind != SummandKind::Sphere) {
        throw InputError("non-sphere summand needs a chain");
      }
      d.summands.push_back(std::move(s));
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Emitters

std::string latex_label(const std::string& label) {
  if (label == "triv") return "\\mathbb{C}";
  if (label == "sign") return "\\sigma";
  const auto numbered = [&](const std::string& stem, const char* symbol) -> std::string {
    if (label.size() > stem.size() && label.compare(0, stem.size(), stem) == 0 &&
        std::all_of(label.begin() + static_cast<long>(stem.size()), label.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      return std::string(symbol) + "_{" + label.substr(stem.size()) + "}";
    }
    return {};
  };
  if (auto s = numbered("chi", "\\chi"); !s.empty()) return s;
  if (auto s = numbered("rho", "\\rho"); !s.empty()) return s;
  return "\\mathrm{" + label + "}";
}

namespace {

struct Style {
  bool latex;

  std::string label(const std::string& l) const { return latex ? latex_label(l) : l; }

  std::string sum(const std::vector<std::string>& labels) const {
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : latex ? "\\oplus " : "+") + label(l);
    return s;
  }

  std::string grouped(const std::vector<std::string>& labels) const {
    return labels.size() > 1 ? "(" + sum(labels) + ")" : sum(labels);
  }

  std::string space(int k, const std::vector<std::string>& a) const {
    if (k == 1) return (latex ? "\\mathbb{C}P(" : "CP(") + sum(a) + ")";
    return (latex ? "\\mathrm{Gr}_{" : "Gr_{") + std::to_string(k) + "}(" + sum(a) + ")";
  }

  std::string taut(int k, const std::vector<std::string>& a) const {
    if (k == 1) return (latex ? "\\gamma_{" : "gamma_{") + sum(a) + "}";
    return (latex ? "\\xi_{" : "xi_{") + std::to_string(k) + "}";
  }

  std::string plus() const { return latex ? "_{+}" : "_+"; }
  std::string wedge() const { return latex ? " \\wedge " : " ^ "; }
  std::string times() const { return latex ? " \\times " : " x "; }
  std::string oplus() const { return latex ? " \\oplus " : " + "; }

  /// Terms follow the table order in `order`, then any other labels.
  std::string sphere(const json& rep, const json& order) const {
    if (rep.empty()) return latex ? "S^{0}" : "S^0";
    std::vector<std::string> labels;
    for (const auto& l : order) {
      if (rep.contains(l.get<std::string>())) labels.push_back(l.get<std::string>());
    }
    for (const auto& [l, m] : rep.items()) {
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    }
    std::string s;
    for (const auto& l : labels) {
      const long m = rep.at(l).get<long>();
      std::string term = m == 1 ? "" : std::to_string(m) + (latex ? "" : "*");
      s += (s.empty() ? "" : latex ? "\\oplus " : "+") + term + label(l);
    }
    return "S^{" + s + "}";
  }
};

struct Factor {
  int k;
  std::vector<std::string> ambient;
  bool point() const { return k == 0 || k == static_cast<int>(dim); }
  long dim;
};

std::string summand_string(const json& js, const Style& st, const json& top) {
  const json table_dims = top.value("dimensions", json::object());
  const std::string kind = js.at("kind").get<std::string>();
  if (kind == "sphere") return st.sphere(js.at("rep"), top.value("irreducibles", json::array()));

  std::vector<Factor> chain;
  for (const auto& f : js.at("chain")) {
    Factor fa{f.at("k").get<int>(), f.at("ambient").get<std::vector<std::string>>(), 0};
    for (const auto& l : fa.ambient) fa.dim += table_dims.value(l, 1L);
    chain.push_back(std::move(fa));
  }
  std::vector<int> base = js.at("base").get<std::vector<int>>();
  const json& bundle = js.at("bundle");

  if (kind == "grplus") {
    const Factor& f = chain.at(static_cast<std::size_t>(base.at(0)));
    return st.space(f.k, f.ambient) + st.plus();
  }

  std::set<int> sources;
  for (const auto& t : bundle) sources.insert(t.at("source").get<int>());

  // One projective factor over which every term is Hom(gamma, constant).
  if (st.latex && kind == "thom") {
    const Factor& f = chain.at(static_cast<std::size_t>(base.at(0)));
    bool simple = f.k == 1;
    std::vector<std::string> targets;
    for (const auto& t : bundle) {
      const Factor& tgt = chain.at(t.at("target").get<std::size_t>());
      simple = simple && t.at("source").get<int>() == base.at(0) && tgt.k == 0;
      targets.insert(targets.end(), tgt.ambient.begin(), tgt.ambient.end());
    }
    if (simple) {
      return "\\mathrm{Th}(" + st.grouped(targets) + "\\otimes " + st.taut(1, f.ambient) + ")";
    }
  }

  std::vector<int> over;
  std::vector<int> smashed;
  for (int b : base) (sources.count(b) ? over : smashed).push_back(b);
  if (over.empty()) std::swap(over, smashed);

  std::string b;
  for (int i : over) {
    const Factor& f = chain[static_cast<std::size_t>(i)];
    b += (b.empty() ? "" : st.times()) + st.space(f.k, f.ambient);
  }
  std::string e;
  for (const auto& t : bundle) {
    const Factor& src = chain.at(t.at("source").get<std::size_t>());
    const Factor& tgt = chain.at(t.at("target").get<std::size_t>());
    std::string target = st.grouped(tgt.ambient);
    if (tgt.k > 0) {
      target = "(" + st.sum(tgt.ambient) + (st.latex ? " \\ominus " : " - ") +
               st.taut(tgt.k, tgt.ambient) + ")";
    }
    std::string term;
    if (src.point()) {
      term = (st.latex ? "\\mathrm{Hom}(" : "Hom(") + st.sum(src.ambient) + ", " + target + ")";
    } else if (st.latex) {
      term = target + "\\otimes " + st.taut(src.k, src.ambient);
    } else {
      term = "Hom(" + st.taut(src.k, src.ambient) + ", " + target + ")";
    }
    e += (e.empty() ? "" : st.oplus()) + term;
  }
  std::string out = (st.latex ? "\\mathrm{Th}(" : "Th(") + b + (st.latex ? ", " : "; ") + e + ")";
  for (int i : smashed) {
    const Factor& f = chain[static_cast<std::size_t>(i)];
    out += st.wedge() + st.space(f.k, f.ambient) + st.plus();
  }
  return out;
}

std::string wedge_string(const json& j, const Style& st) {
  std::string s;
  for (const auto& js : j.at("summands")) {
    s += (s.empty() ? "" : st.latex ? " \\vee " : " v ") + summand_string(js, st, j);
  }
  if (s.empty()) return st.latex ? "\\ast" : "*";
  return s;
}

std::string rep_display(const json& j) {
  std::string r;
  for (const auto& l : j.at("rep")) r += (r.empty() ? "" : ",") + l.get<std::string>();
  return "(" + r + ")";
}

}  // namespace

std::string decomposition_text(const json& j) {
  const Style st{false};
  std::ostringstream out;
  const bool cp = j.at("target").get<std::string>() == "cp";
  out << (cp ? "CP" : "Gr_" + std::to_string(j.at("n").get<int>())) << rep_display(j)
      << "_+ over " << j.value("group", std::string("?")) << " (" << j.at("method").get<std::string>()
      << ")\n";
  out << "  = " << wedge_string(j, st) << "\n";
  int i = 1;
  for (const auto& js : j.at("summands")) {
    out << "  [" << i++ << "] " << js.at("kind").get<std::string>() << "  "
        << summand_string(js, st, j) << "\n";
    for (const auto& t : js.at("trace")) out << "        " << t.get<std::string>() << "\n";
  }
  return out.str();
}

std::string decomposition_latex(const json& j) { return wedge_string(j, Style{true}); }

// ---------------------------------------------------------------------------
// Reports

json report_to_json(const VerificationReport& r, bool timing) {
  json out;
  out["group"] = r.group;
  out["rep"] = r.rep;
  out["target"] = target_name(r.target);
  out["n"] = r.n;
  out["mode"] = mode_name(r.mode);
  out["wrong_twist"] = r.wrong_twist;
  out["subgroups"] = "one representative per conjugacy class";
  out["pass"] = r.pass;
  out["even"] = r.even;
  if (timing) out["seconds"] = r.seconds;
  out["records"] = json::array();
  for (const auto& rec : r.records) {
    json jr;
    jr["subgroup"] = rec.subgroup;
    jr["order"] = rec.order;
    jr["components"] = json::array();
    for (const auto& c : rec.components) {
      jr["components"].push_back({{"space", c.description}, {"poincare", poly_json(c.poincare)}});
    }
    jr["per_summand"] = json::array();
    for (const auto& p : rec.per_summand) jr["per_summand"].push_back(poly_json(p));
    jr["splitting"] = poly_json(rec.splitting);
    jr["direct"] = poly_json(rec.direct);
    jr["equal"] = rec.equal;
    jr["even"] = rec.even;
    out["records"].push_back(std::move(jr));
  }
  return out;
}

std::string report_text(const json& report, bool details) {
  std::ostringstream out;
  const bool cp = report.at("target").get<std::string>() == "cp";
  out << report.at("group").get<std::string>() << "  "
      << (cp ? "CP" : "Gr_" + std::to_string(report.at("n").get<int>())) << "("
      << report.at("rep").get<std::string>() << ")  " << report.at("mode").get<std::string>()
      << (report.at("wrong_twist").get<bool>() ? " wrong-twist" : "") << ": "
      << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& rec : report.at("records")) {
    out << "  " << rec.at("subgroup").get<std::string>() << " (order "
        << rec.at("order").get<int>() << "): splitting "
        << rec.at("splitting").at("text").get<std::string>() << " | direct "
        << rec.at("direct").at("text").get<std::string>() << "  "
        << (rec.at("equal").get<bool>() ? "ok" : "MISMATCH") << "\n";
    if (!details) continue;
    for (const auto& c : rec.at("components")) {
      out << "      component " << c.at("space").get<std::string>() << ": "
          << c.at("poincare").at("text").get<std::string>() << "\n";
    }
    int i = 1;
    for (const auto& p : rec.at("per_summand")) {
      out << "      summand [" << i++ << "]: " << p.at("text").get<std::string>() << "\n";
    }
  }
  return out.str();
}

json sweep_to_json(const SweepResult& r, bool timing) {
  json out;
  out["total"] = r.total;
  out["passed"] = r.passed;
  out["failed"] = r.failed;
  out["skipped"] = r.skipped;
  out["complete"] = r.complete;
  out["even"] = r.even;
  if (timing) out["seconds"] = r.seconds;
  out["reports"] = json::array();
  for (const auto& rep : r.reports) out["reports"].push_back(report_to_json(rep, timing));
  return out;
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string junit_xml(const SweepResult& r) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"eqsplit-sweep\" tests=\"" << r.total << "\" failures=\"" << r.failed
      << "\" skipped=\"" << r.skipped << "\">\n";
  for (const auto& rep : r.reports) {
    const std::string name = rep.group + " " + (rep.target == Target::CP ? "cp" : "gr") +
                             (rep.target == Target::Gr ? std::to_string(rep.n) : "") + " (" +
                             rep.rep + ")";
    out << "  <testcase classname=\"" << xml_escape(rep.group) << "\" name=\""
        << xml_escape(name) << "\"";
    if (rep.pass) {
      out << "/>\n";
      continue;
    }
    out << ">\n    <failure message=\"fixed-point polynomials differ\">";
    for (const auto& rec : rep.records) {
      if (rec.equal) continue;
      out << xml_escape(rec.subgroup + ": " + rec.splitting.to_string() + " vs " +
                        rec.direct.to_string())
          << "\n";
    }
    out << "</failure>\n  </testcase>\n";
  }
  if (r.passed > 0 && r.reports.size() < r.total) {
    out << "  <!-- " << r.passed << " passing reports not listed -->\n";
  }
  out << "</testsuite>\n";
  return out.str();
}

}  // namespace eqsplit
