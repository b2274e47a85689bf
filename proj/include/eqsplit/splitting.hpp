#pragma once

#include <string>
#include <vector>

#include "eqsplit/reps.hpp"

namespace eqsplit {

/// 1 <= s_1 < ... < s_n <= m, carrying its cell dimension sum(s_i - i).
struct SchubertSymbol {
  std::vector<int> entries;
  int dimension = 0;
};

/// Lexicographic list of all binomial(m, n) symbols. DomainError if n > m.
std::vector<SchubertSymbol> enumerate_schubert(int n, int m);

/// Gr_k(ambient). Gr_0 and Gr_dim are points.
struct GrassmannianRef {
  int k = 0;
  RepSequence ambient;

  long dimension() const { return ambient.dimension(); }
  bool is_point() const { return k == 0 || k == dimension(); }
  friend bool operator==(const GrassmannianRef& a, const GrassmannianRef& b) {
    return a.k == b.k && a.ambient == b.ambient;
  }
};

enum class SummandKind { Sphere, Thom, Smash, GrPlus };
const char* to_string(SummandKind k);

/// One wedge summand.
///
/// Summands produced from a filtration by sub-Grassmannians carry a `chain`
/// of factors Gr_{k_1}(A_1), ..., Gr_{k_r}(A_r) in flag order. The summand is
/// the Thom space over the product of the factors of the bundle
///
///     sum_{l < j} Hom(xi_{k_j}, A_l - xi_{k_l}),
///
/// where xi is the tautological bundle of each factor. For a chain
/// [Gr_0(V_i), Gr_1(psi)] this is Th(V_i (x) gamma_psi); for
/// [Gr_{n-k}(V_0), Gr_k(V')] it is the twisted smash
/// Th(Gr_k(V'), Hom(xi_k, V_0 - xi_{n-k})) ^ Gr_{n-k}(V_0)_+.
///
/// Representation-sphere summands S^W from a cell structure have an empty
/// chain and carry W directly. Chains consisting only of points also
/// degenerate to a sphere; `sphere` then holds the constant fiber.
struct WedgeSummand {
  SummandKind kind = SummandKind::Sphere;
  std::vector<GrassmannianRef> chain;
  Multiplicities sphere;  // W over G-irreducibles, Sphere kind only
  std::vector<std::string> trace;

  friend bool operator==(const WedgeSummand& a, const WedgeSummand& b) {
    return a.kind == b.kind && a.chain == b.chain && a.sphere == b.sphere &&
           a.trace == b.trace;
  }
};

/// One Hom(xi_source, A_target - xi_target) term of a chain's bundle.
struct BundleTerm {
  int source = 0;
  int target = 0;
  bool complement = false;  // target plane is a proper nonzero subspace
};

/// Nonzero bundle terms of a chain.
std::vector<BundleTerm> bundle_terms(const std::vector<GrassmannianRef>& chain);

enum class Target { CP, Gr };

struct WedgeDecomposition {
  Target target = Target::CP;
  int n = 1;
  std::string method;  // which splitting produced it
  RepSequence rep;
  std::vector<WedgeSummand> summands;

  friend bool operator==(const WedgeDecomposition& a, const WedgeDecomposition& b) {
    return a.target == b.target && a.n == b.n && a.method == b.method &&
           a.rep == b.rep && a.summands == b.summands;
  }
};

/// Builds a summand from a chain: drops empty and trailing Gr_0 factors,
/// derives the kind and, for all-point chains, the sphere representation.
WedgeSummand make_chain_summand(const RepContext& ctx,
                                std::vector<GrassmannianRef> chain,
                                std::vector<std::string> trace);

/// CP(V) for V a sum of one-dimensional characters: spheres S^{omega_i},
/// omega_i = V_i (x) phi_{i+1}^{-1}.
WedgeDecomposition split_cp_abelian(const RepContext& ctx, const RepSequence& v);

/// W_sigma = sum_i (V_{s_i - 1} - sum_{j<i} phi_{s_j}) (x) phi_{s_i}^{-1}.
Multiplicities schubert_rep(const RepContext& ctx, const SchubertSymbol& sigma,
                            const RepSequence& v);

/// Gr_n(V) for one-dimensional summands: one sphere per Schubert symbol.
WedgeDecomposition split_gr_abelian(const RepContext& ctx, int n, const RepSequence& v);

/// CP(V) for irreducible summands: Th(V_i (x) gamma_{psi_{i+1}}), i < n.
WedgeDecomposition split_cp_general(const RepContext& ctx, const RepSequence& v);

/// One filtration step of Gr_n(V0 + V') by dim(W cap V0).
WedgeDecomposition split_gr_step(const RepContext& ctx, int n, const RepSequence& v0,
                                 const RepSequence& v_prime);

/// Iterates split_gr_step with V' the last irreducible block until every
/// factor is a Grassmannian over a single irreducible.
WedgeDecomposition split_gr_recursive(const RepContext& ctx, int n, const RepSequence& v);

/// Multiset of sphere representations of a decomposition (Sphere kind only),
/// sorted; used for degeneration comparisons.
std::vector<Multiplicities> sphere_multiset(const WedgeDecomposition& d);

}  // namespace eqsplit
