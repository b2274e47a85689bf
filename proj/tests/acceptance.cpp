// Acceptance suite: one PASS/FAIL line per criterion.
//
//   eqsplit_acceptance                 run every criterion
//   eqsplit_acceptance --criterion N   run criterion N only (repeatable)
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqsplit/fixedpoints.hpp"
#include "eqsplit/verify.hpp"
#include "oracle.hpp"

using namespace eqsplit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    if (notes.size() < 8) notes.push_back(why);
    pass = false;
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

ContextPtr context(const std::string& name) {
  return RepContext::build(std::make_shared<const FiniteGroup>(FiniteGroup::builtin(name)));
}

const std::vector<std::string> kAbelian{"C2", "C3", "C4", "C2xC2", "C6"};
const std::vector<std::string> kNonabelian{"S3", "D4", "Q8", "A4"};

/// Checks every record of every report against the independent oracle
/// (where it applies) and re-checks evenness of every stored polynomial.
class ReportAuditor {
 public:
  explicit ReportAuditor(const std::vector<std::string>& groups) {
    for (const auto& g : groups) contexts_[g] = context(g);
  }

  void operator()(const VerificationReport& r) {
    ++reports_;
    const auto& ctx = *contexts_.at(r.group);
    const auto v = RepSequence::parse(ctx.table(), r.rep);
    for (const auto& rec : r.records) {
      ++records_;
      bool even = rec.splitting.even_supported() && rec.direct.even_supported();
      for (const auto& p : rec.per_summand) even = even && p.even_supported();
      for (const auto& c : rec.components) even = even && c.poincare.even_supported();
      if (!even) odd_.push_back(r.group + " " + r.rep + " at " + rec.subgroup);
      const int h = ctx.subgroup_index(rec.subgroup);
      const auto key = std::make_tuple(r.group, v.multiplicities(), h);
      auto it = iso_.find(key);
      if (it == iso_.end()) it = iso_.emplace(key, oracle::isotypic(ctx, v, h)).first;
      if (!it->second) continue;
      ++oracle_checked_;
      const auto expect = r.target == Target::CP ? oracle::cp_fixed(*it->second)
                                                 : oracle::gr_fixed(*it->second, r.n);
      if (expect != rec.direct) {
        mismatch_.push_back(r.group + " " + r.rep + " n=" + std::to_string(r.n) + " at " +
                            rec.subgroup + ": direct " + rec.direct.to_string() + ", oracle " +
                            expect.to_string());
      }
    }
  }

  void report(Outcome& out, bool check_even) const {
    out.note(std::to_string(reports_) + " reports, " + std::to_string(records_) +
             " subgroup records, " + std::to_string(oracle_checked_) + " checked by the oracle");
    for (const auto& m : mismatch_) out.fail("oracle disagrees: " + m);
    if (check_even) {
      for (const auto& m : odd_) out.fail("odd-degree class: " + m);
    }
  }

  std::size_t odd_count() const { return odd_.size(); }

 private:
  std::map<std::string, ContextPtr> contexts_;
  std::map<std::tuple<std::string, Multiplicities, int>, std::optional<oracle::Isotypic>> iso_;
  std::size_t reports_ = 0, records_ = 0, oracle_checked_ = 0;
  std::vector<std::string> mismatch_, odd_;
};

/// Runs a sweep with auditing and reports failures, completeness and time.
SweepResult audited_sweep(SweepConfig cfg, Outcome& out, bool check_even, double limit_seconds) {
  ReportAuditor audit(cfg.groups);
  cfg.on_report = std::ref(audit);
  const auto t = Clock::now();
  const auto r = sweep(cfg);
  const double s = since(t);
  audit.report(out, check_even);
  out.note(std::to_string(r.passed) + "/" + std::to_string(r.total) + " passed in " +
           fmt_seconds(s));
  if (!r.complete) out.fail("sweep incomplete");
  for (const auto& f : r.reports) {
    if (!f.pass) out.fail("report failed: " + f.group + " (" + f.rep + ") n=" + std::to_string(f.n));
  }
  if (r.failed > 0) out.fail(std::to_string(r.failed) + " failing reports");
  if (check_even && !r.even) out.fail("a report flagged odd-degree classes");
  if (limit_seconds > 0 && s > limit_seconds) {
    out.fail("took " + fmt_seconds(s) + ", limit " + fmt_seconds(limit_seconds));
  }
  return r;
}

// 1. Trivial group: classical Poincare polynomials.
Outcome classical(bool check_even) {
  Outcome out;
  const auto t = Clock::now();
  const auto e = context("e");
  const int h = 0;
  int checked = 0;
  for (unsigned m = 1; m <= 8; ++m) {
    const auto v = RepSequence(e->table(), std::vector<int>(m, 0));
    const auto series = oracle::cp_series(m);
    for (const auto& d : {split_cp_abelian(*e, v), split_cp_general(*e, v)}) {
      const auto p = fixed_poincare_decomposition(*e, d, h);
      ++checked;
      if (p != series) out.fail("CP^" + std::to_string(m - 1) + ": " + p.to_string());
      if (check_even && !p.even_supported()) out.fail("odd degrees for CP, m=" + std::to_string(m));
    }
    for (unsigned n = 0; n <= std::min(4u, m); ++n) {
      const auto p = fixed_poincare_decomposition(*e, split_gr_recursive(*e, static_cast<int>(n), v), h);
      ++checked;
      if (p != oracle::box_partitions(m, n)) {
        out.fail("Gr_" + std::to_string(n) + "(C^" + std::to_string(m) + "): " + p.to_string());
      }
      if (check_even && !p.even_supported()) out.fail("odd degrees for Gr, m=" + std::to_string(m));
    }
  }
  const double s = since(t);
  out.note(std::to_string(checked) + " decompositions in " + fmt_seconds(s));
  if (s >= 1.0) out.fail("took " + fmt_seconds(s) + ", limit 1s");
  return out;
}

// 2. Abelian CP sweep.
Outcome abelian_cp(bool check_even) {
  Outcome out;
  SweepConfig cfg;
  cfg.groups = kAbelian;
  cfg.target = Target::CP;
  cfg.max_dim = 5;
  cfg.mode = Mode::Abelian;
  audited_sweep(cfg, out, check_even, 30.0);
  return out;
}

// 3. Abelian Grassmannian sweep. In abelian mode the splitting side is
// literally sum_sigma t^{2 dim W_sigma^H} and the direct side is
// sum_m prod q_binomial(n_i, m_i), so a pass is the identity itself.
Outcome abelian_gr(bool check_even) {
  Outcome out;
  SweepConfig cfg;
  cfg.groups = kAbelian;
  cfg.target = Target::Gr;
  cfg.max_dim = 6;
  cfg.min_n = 0;
  cfg.max_n = 3;
  cfg.mode = Mode::Abelian;
  audited_sweep(cfg, out, check_even, 300.0);

  // The identity again, evaluated from the Schubert spheres directly.
  std::mt19937 rng(3);
  int checked = 0;
  for (const auto& g : kAbelian) {
    const auto ctx = context(g);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 1 + trial % 6;
      std::vector<int> blocks;
      for (int i = 0; i < m; ++i) blocks.push_back(static_cast<int>(rng() % ctx->table()->size()));
      const RepSequence v(ctx->table(), blocks);
      for (int n = 0; n <= std::min(3, m); ++n) {
        const auto d = split_gr_abelian(*ctx, n, v);
        for (int h = 0; h < static_cast<int>(ctx->subgroups().size()); ++h) {
          PoincarePolynomial lhs;
          for (const auto& s : d.summands) {
            lhs += PoincarePolynomial::monomial(
                2 * static_cast<unsigned>(fixed_dim(ctx->table()->compose(s.sphere),
                                                    ctx->subgroups()[h].subgroup)));
          }
          const auto rhs = oracle::gr_fixed(*oracle::isotypic(*ctx, v, h), n);
          ++checked;
          if (lhs != rhs) out.fail("Schubert identity: " + g + " (" + v.to_string() + ")");
        }
      }
    }
  }
  out.note(std::to_string(checked) + " Schubert identities evaluated from characters");
  return out;
}

// 4. Nonabelian CP sweep and the S3 (triv, std) instance.
Outcome nonabelian_cp(bool check_even) {
  Outcome out;
  SweepConfig cfg;
  cfg.groups = kNonabelian;
  cfg.target = Target::CP;
  cfg.max_dim = 9;
  cfg.max_blocks = 3;
  cfg.mode = Mode::General;
  audited_sweep(cfg, out, check_even, 0.0);

  const auto s3 = context("S3");
  const auto r = verify_cp(*s3, RepSequence::parse(s3->table(), "triv,std"), Mode::General);
  const std::map<std::string, PoincarePolynomial> expected{
      {"e", oracle::poly({1, 0, 1, 0, 1})},
      {"C2", oracle::poly({2, 0, 1})},
      {"C3", oracle::poly({3})},
      {"S3", oracle::poly({2})},
  };
  std::set<std::string> seen;
  for (const auto& rec : r.records) {
    seen.insert(rec.subgroup);
    const auto it = expected.find(rec.subgroup);
    if (it == expected.end()) {
      out.fail("S3 (triv,std): unexpected subgroup " + rec.subgroup);
      continue;
    }
    if (rec.splitting != it->second || rec.direct != it->second) {
      out.fail("S3 (triv,std) at " + rec.subgroup + ": splitting " + rec.splitting.to_string() +
               ", direct " + rec.direct.to_string() + ", expected " + it->second.to_string());
    }
  }
  if (seen.size() != expected.size()) out.fail("S3 (triv,std): wrong subgroup classes");
  return out;
}

// 5. Nonabelian Grassmannian sweep with the recursive splitting.
Outcome nonabelian_gr(bool check_even) {
  Outcome out;
  SweepConfig cfg;
  cfg.groups = kNonabelian;
  cfg.target = Target::Gr;
  cfg.max_dim = 5;
  cfg.min_n = 0;
  cfg.max_n = 2;
  cfg.mode = Mode::General;
  audited_sweep(cfg, out, check_even, 600.0);
  return out;
}

// 6. Evenness over everything criteria 1-5 produce.
Outcome evenness(bool) {
  Outcome out;
  const std::pair<const char*, std::function<Outcome(bool)>> parts[] = {
      {"1", classical}, {"2", abelian_cp}, {"3", abelian_gr}, {"4", nonabelian_cp},
      {"5", nonabelian_gr}};
  for (const auto& [id, run] : parts) {
    const auto o = run(true);
    for (const auto& n : o.notes) {
      if (n.find("odd") != std::string::npos) out.fail(std::string("criterion ") + id + ": " + n);
    }
  }
  if (out.pass) out.note("no odd-degree class in criteria 1-5");
  return out;
}

// 7. The wrong twist must be caught on some nonabelian input.
Outcome negative_control(bool) {
  Outcome out;
  SweepConfig cfg;
  cfg.groups = kNonabelian;
  cfg.target = Target::CP;
  cfg.max_dim = 9;
  cfg.max_blocks = 3;
  cfg.mode = Mode::General;
  cfg.twist = Twist::Tensor;
  const auto r = sweep(cfg);
  out.note(std::to_string(r.failed) + "/" + std::to_string(r.total) +
           " reports fail with the wrong twist");
  if (r.failed == 0) out.fail("the wrong twist went undetected");
  if (!r.reports.empty()) {
    const auto& f = r.reports.front();
    for (const auto& rec : f.records) {
      if (!rec.equal) {
        out.note("e.g. " + f.group + " (" + f.rep + ") at " + rec.subgroup + ": splitting " +
                 rec.splitting.to_string() + ", direct " + rec.direct.to_string());
        break;
      }
    }
  }
  return out;
}

// 8. Character tables: orthogonality evaluated here, degrees, round trips.
bool columns_orthogonal(const CharacterTable& t) {
  const auto& g = t.group();
  for (int a = 0; a < g.class_count(); ++a) {
    for (int b = 0; b < g.class_count(); ++b) {
      Cyclotomic s;
      for (const auto& chi : t.irreducibles()) s += chi.value(a) * chi.value(b).conj();
      const long expect = a == b ? g.order() / g.class_size(a) : 0;
      if (!(s == Cyclotomic(expect))) return false;
    }
  }
  return true;
}

bool rows_orthogonal(const CharacterTable& t) {
  const auto& g = t.group();
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      Cyclotomic s;
      for (int c = 0; c < g.class_count(); ++c) {
        s += Cyclotomic(g.class_size(c)) * t.irreducible(i).value(c) *
             t.irreducible(j).value(c).conj();
      }
      if (!(s == Cyclotomic(i == j ? g.order() : 0))) return false;
    }
  }
  return true;
}

Outcome characters(bool) {
  Outcome out;
  const std::vector<std::string> groups{"e",    "C2",  "C3",    "C4",      "C5",    "C6",  "C7",
                                        "C8",   "C12", "C2xC2", "C2xC4",   "C3xC3", "S3",  "D4",
                                        "D5",   "D6",  "D7",    "D8",      "D12",   "Q8",  "A4",
                                        "S4",   "C2xC2xC2"};
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> coeff(0, 5);
  int tables = 0;
  for (const auto& name : groups) {
    const auto ctx = context(name);
    std::vector<TablePtr> all{ctx->table()};
    for (const auto& sd : ctx->subgroups()) all.push_back(sd.table);
    for (const auto& t : all) {
      ++tables;
      long squares = 0;
      for (int i = 0; i < t->size(); ++i) squares += t->dimension(i) * t->dimension(i);
      if (squares != t->group().order()) out.fail(name + ": sum of squared degrees");
      if (t->size() != t->group().class_count()) out.fail(name + ": table is not square");
      if (!rows_orthogonal(*t)) out.fail(name + " / " + t->group().name() + ": row orthogonality");
      if (!columns_orthogonal(*t)) {
        out.fail(name + " / " + t->group().name() + ": column orthogonality");
      }
    }
    const auto& t = *ctx->table();
    for (int trial = 0; trial < 100; ++trial) {
      Multiplicities m(static_cast<std::size_t>(t.size()));
      for (auto& x : m) x = coeff(rng);
      if (t.decompose(t.compose(m)) != m) out.fail(name + ": decompose(compose(m)) != m");
    }
  }
  out.note(std::to_string(groups.size()) + " groups, " + std::to_string(tables) +
           " tables including subgroup tables, 100 round trips each");
  return out;
}

// 9. Degeneration of the general splittings on abelian inputs.
Outcome degeneration(bool) {
  Outcome out;
  std::mt19937 rng(9);
  std::vector<std::string> groups = kAbelian;
  groups.push_back("C2xC4");
  std::map<std::string, ContextPtr> ctxs;
  for (const auto& g : groups) ctxs[g] = context(g);
  int comparisons = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const auto& ctx = ctxs[g];
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<int> blocks;
    for (int i = 0; i < m; ++i) blocks.push_back(static_cast<int>(rng() % ctx->table()->size()));
    const RepSequence v(ctx->table(), blocks);
    ++comparisons;
    if (sphere_multiset(split_cp_general(*ctx, v)) != sphere_multiset(split_cp_abelian(*ctx, v))) {
      out.fail("CP: " + g + " (" + v.to_string() + ")");
    }
    for (int n = 0; n <= m; ++n) {
      ++comparisons;
      const auto rec = split_gr_recursive(*ctx, n, v);
      const auto ab = split_gr_abelian(*ctx, n, v);
      if (rec.summands.size() != ab.summands.size() || sphere_multiset(rec) != sphere_multiset(ab)) {
        out.fail("Gr_" + std::to_string(n) + ": " + g + " (" + v.to_string() + ")");
      }
    }
  }
  out.note("50 random inputs, " + std::to_string(comparisons) + " multiset comparisons");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(bool)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "classical recovery for the trivial group", classical},
      {2, "abelian CP cross-check", abelian_cp},
      {3, "abelian Grassmannian cross-check", abelian_gr},
      {4, "nonabelian CP cross-check", nonabelian_cp},
      {5, "nonabelian Grassmannian cross-check", nonabelian_gr},
      {6, "evenness of every fixed-point polynomial", evenness},
      {7, "wrong-twist negative control", negative_control},
      {8, "character table infrastructure", characters},
      {9, "degeneration coherence", degeneration},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      selected.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  bool ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run(false);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    ok = ok && o.pass;
    std::printf("criterion %d %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
