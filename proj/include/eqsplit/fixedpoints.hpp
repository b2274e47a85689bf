#pragma once

#include <string>
#include <vector>

#include "eqsplit/splitting.hpp"

namespace eqsplit {

/// A component CP^{N-1} of CP(V)^H, indexed by a linear H-character alpha
/// occurring N times in V|H.
struct FixedComponentCP {
  std::string alpha;
  long multiplicity = 0;

  PoincarePolynomial poincare() const;
};

/// A component prod_alpha Gr_{m_alpha}(C^{n_alpha}) of Gr_n(V)^H, one for
/// every choice of m with sum m_alpha dim(alpha) = n and 0 <= m_alpha <= n_alpha.
/// Vectors are indexed by H-irreducibles.
struct FixedComponentGr {
  std::vector<std::string> labels;
  std::vector<long> n;
  std::vector<long> m;

  PoincarePolynomial poincare() const;
};

std::vector<FixedComponentCP> cp_fixed(const RepContext& ctx, const RepSequence& v,
                                       int subgroup);
std::vector<FixedComponentGr> gr_fixed(const RepContext& ctx, int n, const RepSequence& v,
                                       int subgroup);

/// Unreduced Poincare polynomial of the fixed set: sum over components.
PoincarePolynomial direct_poincare(const std::vector<FixedComponentCP>& comps);
PoincarePolynomial direct_poincare(const std::vector<FixedComponentGr>& comps);

/// Reading of a twisted fiber Hom(xi, U) on H-fixed points. `Tensor` reads it
/// as xi (x) U instead; it differs exactly when H has non-self-dual characters
/// and exists to show that the check can tell the two apart.
enum class Twist { Hom, Tensor };

/// t^{2 dim W^H}.
PoincarePolynomial fixed_poincare_sphere(const RepContext& ctx, const Multiplicities& w,
                                         int subgroup);

/// Reduced homology of the H-fixed points of a chain summand.
///
/// Over a fixed component of the base, every factor's tautological plane
/// splits as sum_alpha alpha^{m_alpha}; the fiber Hom(xi_j, C_j) with
/// C_j = sum_{l<j} (A_l - xi_l) then has H-fixed rank sum_alpha m_alpha c_alpha.
/// The chain is folded left to right carrying the multiplicity vector c.
PoincarePolynomial fixed_poincare_chain(const RepContext& ctx,
                                        const std::vector<GrassmannianRef>& chain,
                                        int subgroup, Twist twist = Twist::Hom);

PoincarePolynomial fixed_poincare_summand(const RepContext& ctx, const WedgeSummand& s,
                                          int subgroup, Twist twist = Twist::Hom);

/// Sum of fixed_poincare_summand over all summands.
PoincarePolynomial fixed_poincare_decomposition(const RepContext& ctx,
                                                const WedgeDecomposition& d, int subgroup,
                                                Twist twist = Twist::Hom);

}  // namespace eqsplit
