#include "eqsplit/splitting.hpp"

#include <algorithm>
#include <functional>

#include "eqsplit/error.hpp"

namespace eqsplit {

const char* to_string(SummandKind k) {
  switch (k) {
    case SummandKind::Sphere: return "sphere";
    case SummandKind::Thom: return "thom";
    case SummandKind::Smash: return "smash";
    case SummandKind::GrPlus: return "grplus";
  }
  return "?";
}

std::vector<SchubertSymbol> enumerate_schubert(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("Schubert symbols need n, m >= 0");
  if (n > m) {
    throw DomainError("no " + std::to_string(n) + "-planes in a " + std::to_string(m) +
                      "-dimensional space");
  }
  std::vector<SchubertSymbol> out;
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  while (true) {
    SchubertSymbol sym;
    sym.entries = s;
    for (int i = 0; i < n; ++i) sym.dimension += s[i] - (i + 1);
    out.push_back(std::move(sym));
    int i = n - 1;
    while (i >= 0 && s[i] == m - (n - 1 - i)) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < n; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<BundleTerm> bundle_terms(const std::vector<GrassmannianRef>& chain) {
  std::vector<BundleTerm> out;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (chain[j].k == 0) continue;
    for (std::size_t l = 0; l < j; ++l) {
      const long rest = chain[l].dimension() - chain[l].k;
      if (rest <= 0) continue;
      out.push_back({static_cast<int>(j), static_cast<int>(l), chain[l].k > 0});
    }
  }
  return out;
}

namespace {

void add_hom(const RepContext& ctx, const RepSequence& from, const RepSequence& to,
             Multiplicities& acc) {
  for (int a : from.blocks()) {
    for (int b : to.blocks()) {
      const Multiplicities& h = ctx.hom(a, b);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += h[i];
    }
  }
}

void require_linear(const RepContext& ctx, const RepSequence& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ctx.table()->dimension(v.block(i)) != 1) {
      throw InputError("summand " + std::to_string(i + 1) + " ('" +
                       ctx.table()->label(v.block(i)) +
                       "') is not one-dimensional; use the general splitting");
    }
  }
}

std::string seq_text(const RepSequence& v) {
  return v.empty() ? "0" : "(" + v.to_string() + ")";
}

std::string schubert_text(const SchubertSymbol& s) {
  std::string t = "(";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    t += (i ? "," : "") + std::to_string(s.entries[i]);
  }
  return t + ")";
}

}  // namespace

WedgeSummand make_chain_summand(const RepContext& ctx, std::vector<GrassmannianRef> chain,
                                std::vector<std::string> trace) {
  std::vector<GrassmannianRef> kept;
  for (auto& f : chain) {
    if (f.k < 0 || f.k > f.dimension()) {
      throw DomainError("Gr_" + std::to_string(f.k) + " of a " +
                        std::to_string(f.dimension()) + "-dimensional space");
    }
    if (f.ambient.empty()) continue;
    kept.push_back(std::move(f));
  }
  while (!kept.empty() && kept.back().k == 0) kept.pop_back();

  WedgeSummand s;
  s.chain = std::move(kept);
  s.trace = std::move(trace);
  const auto terms = bundle_terms(s.chain);
  const auto non_points =
      std::count_if(s.chain.begin(), s.chain.end(), [](const auto& f) { return !f.is_point(); });
  if (non_points == 0) {
    s.kind = SummandKind::Sphere;
    s.sphere.assign(ctx.table()->size(), 0);
    for (const auto& t : terms) {
      add_hom(ctx, s.chain[t.source].ambient, s.chain[t.target].ambient, s.sphere);
    }
  } else if (non_points == 1) {
    s.kind = terms.empty() ? SummandKind::GrPlus : SummandKind::Thom;
  } else {
    s.kind = SummandKind::Smash;
  }
  return s;
}

WedgeDecomposition split_cp_abelian(const RepContext& ctx, const RepSequence& v) {
  require_linear(ctx, v);
  WedgeDecomposition d;
  d.target = Target::CP;
  d.n = 1;
  d.method = "abelian";
  d.rep = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    WedgeSummand s;
    s.kind = SummandKind::Sphere;
    s.sphere.assign(ctx.table()->size(), 0);
    add_hom(ctx, v.slice(i, i + 1), v.prefix(i), s.sphere);
    s.trace.push_back("cofiber of CP(V_" + std::to_string(i) + ") -> CP(V_" +
                      std::to_string(i + 1) + ")");
    s.trace.push_back("omega_" + std::to_string(i) + " = V_" + std::to_string(i) +
                      " (x) " + ctx.table()->label(v.block(i)) + "^-1");
    d.summands.push_back(std::move(s));
  }
  return d;
}

Multiplicities schubert_rep(const RepContext& ctx, const SchubertSymbol& sigma,
                            const RepSequence& v) {
  const int m = static_cast<int>(v.size());
  for (std::size_t i = 0; i < sigma.entries.size(); ++i) {
    const int s = sigma.entries[i];
    if (s < 1 || s > m || (i > 0 && s <= sigma.entries[i - 1])) {
      throw DomainError("Schubert symbol " + schubert_text(sigma) +
                        " is not strictly increasing in 1.." + std::to_string(m));
    }
  }
  Multiplicities w(ctx.table()->size(), 0);
  for (std::size_t i = 0; i < sigma.entries.size(); ++i) {
    const int s = sigma.entries[i];
    Multiplicities avail = v.prefix(static_cast<std::size_t>(s - 1)).multiplicities();
    avail.resize(ctx.table()->size(), 0);
    for (std::size_t j = 0; j < i; ++j) {
      long& slot = avail[v.block(static_cast<std::size_t>(sigma.entries[j] - 1))];
      if (--slot < 0) throw InternalError("Schubert multiset difference underflowed");
    }
    const int top = v.block(static_cast<std::size_t>(s - 1));
    for (int b = 0; b < ctx.table()->size(); ++b) {
      if (avail[b] == 0) continue;
      const Multiplicities& h = ctx.hom(top, b);
      for (std::size_t c = 0; c < w.size(); ++c) w[c] += avail[b] * h[c];
    }
  }
  return w;
}

WedgeDecomposition split_gr_abelian(const RepContext& ctx, int n, const RepSequence& v) {
  require_linear(ctx, v);
  WedgeDecomposition d;
  d.target = Target::Gr;
  d.n = n;
  d.method = "abelian";
  d.rep = v;
  for (const auto& sigma : enumerate_schubert(n, static_cast<int>(v.size()))) {
    WedgeSummand s;
    s.kind = SummandKind::Sphere;
    s.sphere = schubert_rep(ctx, sigma, v);
    s.trace.push_back("Schubert cell " + schubert_text(sigma) + ", complex dimension " +
                      std::to_string(sigma.dimension));
    d.summands.push_back(std::move(s));
  }
  return d;
}

WedgeDecomposition split_cp_general(const RepContext& ctx, const RepSequence& v) {
  WedgeDecomposition d;
  d.target = Target::CP;
  d.n = 1;
  d.method = "general";
  d.rep = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<GrassmannianRef> chain{{0, v.prefix(i)}, {1, v.slice(i, i + 1)}};
    std::vector<std::string> trace{
        "cofiber of CP(V_" + std::to_string(i) + ") -> CP(V_" + std::to_string(i + 1) + ")",
        "normal bundle of CP(" + ctx.table()->label(v.block(i)) + ") is V_" +
            std::to_string(i) + " (x) gamma"};
    d.summands.push_back(make_chain_summand(ctx, std::move(chain), std::move(trace)));
  }
  return d;
}

namespace {

void check_planes(int n, long dim) {
  if (n < 0 || n > dim) {
    throw DomainError("no " + std::to_string(n) + "-planes in a " + std::to_string(dim) +
                      "-dimensional space");
  }
}

}  // namespace

WedgeDecomposition split_gr_step(const RepContext& ctx, int n, const RepSequence& v0,
                                 const RepSequence& v_prime) {
  const long d0 = v0.dimension();
  const long d1 = v_prime.dimension();
  check_planes(n, d0 + d1);
  std::vector<int> blocks = v0.blocks();
  blocks.insert(blocks.end(), v_prime.blocks().begin(), v_prime.blocks().end());

  WedgeDecomposition d;
  d.target = Target::Gr;
  d.n = n;
  d.method = "step";
  d.rep = RepSequence(ctx.table(), std::move(blocks));
  for (long k = 0; k <= std::min<long>(n, d1); ++k) {
    if (n - k > d0) continue;
    std::vector<GrassmannianRef> chain{{static_cast<int>(n - k), v0},
                                       {static_cast<int>(k), v_prime}};
    std::vector<std::string> trace{"stratum dim(W cap " + seq_text(v0) + ") = " +
                                   std::to_string(n - k)};
    d.summands.push_back(make_chain_summand(ctx, std::move(chain), std::move(trace)));
  }
  return d;
}

WedgeDecomposition split_gr_recursive(const RepContext& ctx, int n, const RepSequence& v) {
  check_planes(n, v.dimension());
  struct Partial {
    std::vector<GrassmannianRef> chain;
    std::vector<std::string> trace;
  };
  // Factor Gr_n(first m blocks) completely into single-block factors.
  std::function<std::vector<Partial>(int, std::size_t)> expand = [&](int planes,
                                                                      std::size_t m) {
    std::vector<Partial> out;
    if (m == 0) {
      if (planes == 0) out.push_back({});
      return out;
    }
    const RepSequence last = v.slice(m - 1, m);
    if (m == 1) {
      if (planes <= last.dimension()) out.push_back({{{planes, last}}, {}});
      return out;
    }
    const RepSequence v0 = v.prefix(m - 1);
    const long d0 = v0.dimension();
    for (long k = 0; k <= std::min<long>(planes, last.dimension()); ++k) {
      if (planes - k > d0) continue;
      for (auto& inner : expand(static_cast<int>(planes - k), m - 1)) {
        inner.chain.push_back({static_cast<int>(k), last});
        inner.trace.push_back("Gr_" + std::to_string(planes) + seq_text(v.prefix(m)) +
                              ": dim(W cap V_" + std::to_string(m - 1) +
                              ") = " + std::to_string(planes - k));
        out.push_back(std::move(inner));
      }
    }
    return out;
  };

  WedgeDecomposition d;
  d.target = Target::Gr;
  d.n = n;
  d.method = "general";
  d.rep = v;
  for (auto& p : expand(n, v.size())) {
    std::reverse(p.trace.begin(), p.trace.end());
    d.summands.push_back(make_chain_summand(ctx, std::move(p.chain), std::move(p.trace)));
  }
  return d;
}

std::vector<Multiplicities> sphere_multiset(const WedgeDecomposition& d) {
  std::vector<Multiplicities> out;
  for (const auto& s : d.summands) {
    if (s.kind == SummandKind::Sphere) out.push_back(s.sphere);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqsplit
