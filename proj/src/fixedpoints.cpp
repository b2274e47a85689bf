#include "eqsplit/fixedpoints.hpp"

#include <functional>
#include <map>

#include "eqsplit/error.hpp"

namespace eqsplit {

PoincarePolynomial FixedComponentCP::poincare() const {
  return q_binomial(static_cast<unsigned>(multiplicity), 1);
}

PoincarePolynomial FixedComponentGr::poincare() const {
  PoincarePolynomial p = PoincarePolynomial::one();
  for (std::size_t a = 0; a < n.size(); ++a) {
    if (m[a] == 0 || m[a] == n[a]) continue;
    p = p * q_binomial(static_cast<unsigned>(n[a]), static_cast<unsigned>(m[a]));
  }
  return p;
}

namespace {

const SubgroupData& subgroup_data(const RepContext& ctx, int subgroup) {
  if (subgroup < 0 || subgroup >= static_cast<int>(ctx.subgroups().size())) {
    throw InputError("subgroup index " + std::to_string(subgroup) + " out of range");
  }
  return ctx.subgroups()[static_cast<std::size_t>(subgroup)];
}

// Every m with 0 <= m_a <= n_a and sum m_a dims_a = planes.
void for_each_plane_type(const std::vector<long>& n, const std::vector<long>& dims, long planes,
                         const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> m(n.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t a, long left) {
    if (a == n.size()) {
      if (left == 0) visit(m);
      return;
    }
    for (long k = 0; k <= n[a] && k * dims[a] <= left; ++k) {
      m[a] = k;
      rec(a + 1, left - k * dims[a]);
    }
    m[a] = 0;
  };
  rec(0, planes);
}

}  // namespace

std::vector<FixedComponentCP> cp_fixed(const RepContext& ctx, const RepSequence& v,
                                       int subgroup) {
  const SubgroupData& sd = subgroup_data(ctx, subgroup);
  const Multiplicities n = sd.restrict_mult(v.multiplicities());
  std::vector<FixedComponentCP> out;
  for (int a = 0; a < sd.irr_count(); ++a) {
    if (sd.dims[a] == 1 && n[a] > 0) out.push_back({sd.table->label(a), n[a]});
  }
  return out;
}

std::vector<FixedComponentGr> gr_fixed(const RepContext& ctx, int n, const RepSequence& v,
                                       int subgroup) {
  if (n < 0 || n > v.dimension()) {
    throw DomainError("no " + std::to_string(n) + "-planes in a " +
                      std::to_string(v.dimension()) + "-dimensional space");
  }
  const SubgroupData& sd = subgroup_data(ctx, subgroup);
  const Multiplicities counts = sd.restrict_mult(v.multiplicities());
  std::vector<FixedComponentGr> out;
  for_each_plane_type(counts, sd.dims, n, [&](const std::vector<long>& m) {
    out.push_back({sd.table->labels(), counts, m});
  });
  return out;
}

PoincarePolynomial direct_poincare(const std::vector<FixedComponentCP>& comps) {
  PoincarePolynomial p;
  for (const auto& c : comps) p += c.poincare();
  return p;
}

PoincarePolynomial direct_poincare(const std::vector<FixedComponentGr>& comps) {
  PoincarePolynomial p;
  for (const auto& c : comps) p += c.poincare();
  return p;
}

PoincarePolynomial fixed_poincare_sphere(const RepContext& ctx, const Multiplicities& w,
                                         int subgroup) {
  const SubgroupData& sd = subgroup_data(ctx, subgroup);
  const int triv = sd.table->trivial_index();
  long fixed = 0;
  for (std::size_t i = 0; i < w.size(); ++i) fixed += w[i] * sd.branching[i][triv];
  return PoincarePolynomial::monomial(static_cast<unsigned>(2 * fixed));
}

PoincarePolynomial fixed_poincare_chain(const RepContext& ctx,
                                        const std::vector<GrassmannianRef>& chain,
                                        int subgroup, Twist twist) {
  const SubgroupData& sd = subgroup_data(ctx, subgroup);
  const std::size_t h = sd.dims.size();
  std::map<std::vector<long>, PoincarePolynomial> states;
  states.emplace(std::vector<long>(h, 0), PoincarePolynomial::one());

  for (const auto& factor : chain) {
    const Multiplicities counts = sd.restrict_mult(factor.ambient.multiplicities());
    std::vector<std::pair<std::vector<long>, PoincarePolynomial>> types;
    for_each_plane_type(counts, sd.dims, factor.k, [&](const std::vector<long>& m) {
      types.emplace_back(m, FixedComponentGr{{}, counts, m}.poincare());
    });

    std::map<std::vector<long>, PoincarePolynomial> next;
    for (const auto& [c, poly] : states) {
      for (const auto& [m, base] : types) {
        long rank = 0;
        std::vector<long> c2 = c;
        for (std::size_t a = 0; a < h; ++a) {
          const std::size_t partner =
              twist == Twist::Hom ? a : static_cast<std::size_t>(sd.dual[a]);
          rank += m[a] * c[partner];
          c2[a] += counts[a] - m[a];
        }
        next[c2] += (poly * base).shifted(static_cast<unsigned>(2 * rank));
      }
    }
    states = std::move(next);
  }

  PoincarePolynomial total;
  for (const auto& [c, poly] : states) total += poly;
  return total;
}

PoincarePolynomial fixed_poincare_summand(const RepContext& ctx, const WedgeSummand& s,
                                          int subgroup, Twist twist) {
  if (s.chain.empty()) {
    if (s.kind != SummandKind::Sphere) {
      throw InternalError("non-sphere summand without a Grassmannian chain");
    }
    return fixed_poincare_sphere(ctx, s.sphere, subgroup);
  }
  return fixed_poincare_chain(ctx, s.chain, subgroup, twist);
}

PoincarePolynomial fixed_poincare_decomposition(const RepContext& ctx,
                                                const WedgeDecomposition& d, int subgroup,
                                                Twist twist) {
  PoincarePolynomial total;
  for (const auto& s : d.summands) total += fixed_poincare_summand(ctx, s, subgroup, twist);
  return total;
}

}  // namespace eqsplit
