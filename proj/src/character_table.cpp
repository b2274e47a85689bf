// Character tables: direct construction for products of cyclic groups, the
// class-algebra eigenvector method over F_p otherwise.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"
#include "eqsplit/reps.hpp"

namespace eqsplit {

using nlohmann::json;

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

using Row = std::vector<u64>;
using Mat = std::vector<Row>;

// Kernel of a (rows x cols) matrix over F_p, as a list of basis vectors.
std::vector<Row> kernel(Mat a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = (p - a[i][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduced echelon form of a list of vectors; returns pivot columns.
std::vector<int> rref(std::vector<Row>& vs, u64 p) {
  std::vector<int> pivots;
  const std::size_t cols = vs.empty() ? 0 : vs[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < vs.size(); ++c) {
    std::size_t piv = r;
    while (piv < vs.size() && vs[piv][c] == 0) ++piv;
    if (piv == vs.size()) continue;
    std::swap(vs[piv], vs[r]);
    const u64 inv = inv_mod(vs[r][c], p);
    for (auto& x : vs[r]) x = x * inv % p;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == r || vs[i][c] == 0) continue;
      const u64 f = vs[i][c];
      for (std::size_t j = 0; j < cols; ++j) vs[i][j] = (vs[i][j] + p - f * vs[r][j] % p) % p;
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  vs.resize(r);
  return pivots;
}

u64 det_mod(Mat a, u64 p) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const u64 inv = inv_mod(a[c][c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = a[i][c] * inv % p;
      for (std::size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + p - f * a[c][j] % p) % p;
    }
  }
  return det;
}

struct Subspace {
  std::vector<Row> basis;  // RREF rows
  std::vector<int> pivots;
};

// Split an M-invariant subspace into eigenspaces of M.
std::vector<Subspace> split(const Subspace& s, const Mat& m, u64 p) {
  const std::size_t d = s.basis.size();
  const std::size_t k = m.size();
  // Restricted action: A[i][j] = (M b_j)[pivot_i].
  Mat a(d, Row(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    Row image(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      u64 acc = 0;
      for (std::size_t c = 0; c < k; ++c) acc = (acc + m[r][c] * s.basis[j][c]) % p;
      image[r] = acc;
    }
    for (std::size_t i = 0; i < d; ++i) a[i][j] = image[s.pivots[i]];
  }
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < p && total < d; ++lambda) {
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
    if (det_mod(shifted, p) != 0) continue;
    auto coords = kernel(shifted, p);
    Subspace part;
    for (const auto& c : coords) {
      Row v(k, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t x = 0; x < k; ++x) v[x] = (v[x] + c[i] * s.basis[i][x]) % p;
      }
      part.basis.push_back(std::move(v));
    }
    part.pivots = rref(part.basis, p);
    total += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (total != d) {
    throw InternalError("class matrix not diagonalizable over F_" + std::to_string(p));
  }
  return parts;
}

std::vector<Character> dixon_characters(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const int n = g.order();
  const int k = g.class_count();
  const u64 e = static_cast<u64>(g.exponent());
  int max_class = 1;
  for (int c = 0; c < k; ++c) max_class = std::max(max_class, g.class_size(c));
  const double bound = std::max(2.0 * n, 2.0 * std::sqrt(static_cast<double>(n)) * max_class);
  u64 p = e + 1;
  while (!(static_cast<double>(p) > bound && is_prime(p))) p += e;

  // c[r][s][t] = #{x in C_r : x^-1 g_t in C_s}
  std::vector<Mat> cls_mats(k, Mat(k, Row(k, 0)));
  for (int t = 0; t < k; ++t) {
    const int z = g.class_rep(t);
    for (int x = 0; x < n; ++x) {
      const int r = g.class_of(x);
      const int s = g.class_of(g.mul(g.inverse(x), z));
      cls_mats[r][s][t] += 1;
    }
  }
  for (auto& m : cls_mats) {
    for (auto& row : m) {
      for (auto& x : row) x %= p;
    }
  }

  Subspace whole;
  for (int i = 0; i < k; ++i) {
    Row v(k, 0);
    v[i] = 1;
    whole.basis.push_back(std::move(v));
  }
  whole.pivots.resize(k);
  std::iota(whole.pivots.begin(), whole.pivots.end(), 0);
  std::vector<Subspace> spaces{whole};
  for (int r = 1; r < k; ++r) {
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, cls_mats[r], p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
    if (static_cast<int>(spaces.size()) == k) break;
  }
  if (static_cast<int>(spaces.size()) != k) {
    throw InternalError("class algebra eigenspaces did not separate");
  }

  const u64 z = pow_mod(primitive_root(p), (p - 1) / e, p);  // zeta_e mod p
  std::vector<Character> chars;
  for (const auto& s : spaces) {
    Row w = s.basis[0];
    if (w[0] == 0) throw InternalError("central character vanishes at identity");
    const u64 norm = inv_mod(w[0], p);
    for (auto& x : w) x = x * norm % p;
    // |G| / chi(1)^2 = sum_t w_t w_{t*} / h_t
    u64 sum = 0;
    for (int t = 0; t < k; ++t) {
      sum = (sum + w[t] * w[g.inverse_class(t)] % p * inv_mod(g.class_size(t), p)) % p;
    }
    const u64 d2 = static_cast<u64>(n) % p * inv_mod(sum, p) % p;
    u64 deg = 0;
    for (u64 d = 1; d * d <= static_cast<u64>(n); ++d) {
      if (d * d % p == d2) deg = d;
    }
    if (deg == 0) throw InternalError("could not recover a character degree");
    Row chi(k);
    for (int t = 0; t < k; ++t) chi[t] = w[t] * deg % p * inv_mod(g.class_size(t), p) % p;

    // Exact lift: eigenvalue multiplicities of rho(g) for g of order m.
    std::vector<Cyclotomic> values(k);
    for (int t = 0; t < k; ++t) {
      const int m = g.element_order(g.class_rep(t));
      const u64 zm = pow_mod(z, e / static_cast<u64>(m), p);
      const u64 inv_m = inv_mod(static_cast<u64>(m), p);
      std::vector<Rational> poly(m, Rational(0));
      long total = 0;
      for (int j = 0; j < m; ++j) {
        u64 acc = 0;
        for (int l = 0; l < m; ++l) {
          const u64 root = pow_mod(zm, static_cast<u64>((m - (static_cast<long>(j) * l) % m) % m), p);
          acc = (acc + chi[g.power_class(t, l)] * root) % p;
        }
        const u64 mult = acc * inv_m % p;
        if (mult > deg) throw InternalError("eigenvalue multiplicity lift out of range");
        poly[j] = static_cast<long>(mult);
        total += static_cast<long>(mult);
      }
      if (total != static_cast<long>(deg)) throw InternalError("eigenvalue multiplicities do not sum to degree");
      values[t] = Cyclotomic::from_polynomial(static_cast<unsigned>(m), std::move(poly))
                      .lifted(static_cast<unsigned>(e));
    }
    chars.emplace_back(gp, std::move(values));
  }
  return chars;
}

std::vector<Character> abelian_characters(const GroupPtr& gp,
                                          const std::vector<unsigned>& orders) {
  const FiniteGroup& g = *gp;
  const unsigned e = static_cast<unsigned>(g.exponent());
  auto decode = [&](std::size_t id) {
    std::vector<unsigned> t(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      t[i] = static_cast<unsigned>(id % orders[i]);
      id /= orders[i];
    }
    return t;
  };
  std::vector<Character> chars;
  for (int j = 0; j < g.order(); ++j) {
    const auto tj = decode(static_cast<std::size_t>(j));
    std::vector<Cyclotomic> values(g.class_count());
    for (int c = 0; c < g.class_count(); ++c) {
      const auto ta = decode(static_cast<std::size_t>(g.class_rep(c)));
      long exp = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        exp += static_cast<long>(tj[i]) * ta[i] * (e / orders[i]);
      }
      values[c] = Cyclotomic::root_of_unity(e, exp);
    }
    chars.emplace_back(gp, std::move(values));
  }
  return chars;
}

bool is_trivial_character(const Character& c) {
  for (const auto& v : c.values()) {
    if (!(v == Cyclotomic(1))) return false;
  }
  return true;
}

std::vector<std::string> default_labels(const FiniteGroup& g,
                                        const std::vector<Character>& irr) {
  std::vector<std::string> labels(irr.size());
  std::vector<int> linear;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (irr[i].dimension() == 1) linear.push_back(static_cast<int>(i));
  }
  labels[0] = "triv";
  if (linear.size() == 2) labels[linear[1]] = "sign";
  if (g.permutations()) {
    std::vector<Cyclotomic> perm(g.class_count());
    for (int c = 0; c < g.class_count(); ++c) {
      const auto& p = (*g.permutations())[g.class_rep(c)];
      long fixed = 0;
      for (std::size_t x = 0; x < p.size(); ++x) fixed += p[x] == x ? 1 : 0;
      perm[c] = Cyclotomic(fixed - 1);
    }
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (labels[i].empty() && irr[i].values() == perm && irr[i].dimension() > 1) {
        labels[i] = "std";
      }
    }
  }
  int lin = 0;
  int hi = 0;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (!labels[i].empty()) continue;
    labels[i] = irr[i].dimension() == 1 ? "chi" + std::to_string(++lin)
                                        : "rho" + std::to_string(++hi);
  }
  return labels;
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> irr,
                               std::vector<std::string> labels)
    : group_(std::move(group)), irreducibles_(std::move(irr)), labels_(std::move(labels)) {
  trivial_ = -1;
  for (const auto& c : irreducibles_) dims_.push_back(c.dimension());
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (is_trivial_character(irreducibles_[i])) {
      trivial_ = static_cast<int>(i);
      break;
    }
  }
  if (trivial_ < 0) throw InputError("character table lacks the trivial character");
}

CharacterTable CharacterTable::compute(GroupPtr group) {
  std::vector<Character> irr;
  if (group->abelian_orders()) {
    irr = abelian_characters(group, *group->abelian_orders());
  } else {
    irr = dixon_characters(group);
  }
  const unsigned e = static_cast<unsigned>(group->exponent());
  // Trivial first, then (degree, value tuple descending).
  std::stable_sort(irr.begin(), irr.end(), [&](const Character& a, const Character& b) {
    const bool ta = is_trivial_character(a);
    const bool tb = is_trivial_character(b);
    if (ta != tb) return ta;
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    for (std::size_t c = 0; c < a.values().size(); ++c) {
      const int r = Cyclotomic::compare_at(a.value(static_cast<int>(c)),
                                           b.value(static_cast<int>(c)), e);
      if (r != 0) return r > 0;
    }
    return false;
  });
  auto labels = default_labels(*group, irr);
  CharacterTable t(std::move(group), std::move(irr), std::move(labels));
  if (!t.satisfies_orthogonality()) {
    throw InternalError("computed character table fails orthogonality");
  }
  return t;
}

CharacterTable CharacterTable::from_json(GroupPtr group, const json& j) {
  try {
    const auto sizes = j.at("classes").get<std::vector<int>>();
    if (static_cast<int>(sizes.size()) != group->class_count()) {
      throw InputError("table lists " + std::to_string(sizes.size()) +
                       " classes, group has " + std::to_string(group->class_count()));
    }
    for (int c = 0; c < group->class_count(); ++c) {
      if (sizes[c] != group->class_size(c)) {
        throw InputError("class " + std::to_string(c) + " size mismatch: table says " +
                         std::to_string(sizes[c]) + ", group has " +
                         std::to_string(group->class_size(c)));
      }
    }
    std::vector<Character> irr;
    std::vector<std::string> labels;
    for (const auto& row : j.at("irreducibles")) {
      labels.push_back(row.at("label").get<std::string>());
      std::vector<Cyclotomic> values;
      for (const auto& v : row.at("values")) {
        values.push_back(v.is_string() ? Cyclotomic::parse(v.get<std::string>())
                                       : Cyclotomic(v.get<long>()));
      }
      if (static_cast<int>(values.size()) != group->class_count()) {
        throw InputError("irreducible '" + labels.back() + "' has wrong value count");
      }
      irr.emplace_back(group, std::move(values));
    }
    if (static_cast<int>(irr.size()) != group->class_count()) {
      throw InputError("number of irreducibles must equal the number of classes");
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate irreducible labels");
    }
    CharacterTable t(std::move(group), std::move(irr), std::move(labels));
    if (!t.satisfies_orthogonality()) {
      throw InputError("supplied character table fails orthogonality");
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed character table JSON: ") + e.what());
  } catch (const NotGenuineError& e) {
    throw InputError(std::string("supplied character table is invalid: ") + e.what());
  }
}

int CharacterTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Multiplicities CharacterTable::decompose(const Character& chi) const {
  if (chi.group_ptr() != group_) throw InputError("character belongs to a different group");
  Multiplicities m(irreducibles_.size(), 0);
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    const auto r = inner_product(chi, irreducibles_[i]).as_rational();
    if (!r || r->get_den() != 1 || *r < 0) {
      throw NotGenuineError("inner product with '" + labels_[i] +
                            "' is not a nonnegative integer");
    }
    m[i] = r->get_num().get_si();
  }
  return m;
}

Character CharacterTable::compose(const Multiplicities& m) const {
  Character acc = zero_character(group_);
  for (std::size_t i = 0; i < m.size() && i < irreducibles_.size(); ++i) {
    if (m[i] != 0) acc = add(acc, scaled(irreducibles_[i], m[i]));
  }
  return acc;
}

bool CharacterTable::satisfies_orthogonality() const {
  const FiniteGroup& g = *group_;
  const int k = g.class_count();
  if (size() != k) return false;
  long sum_sq = 0;
  for (int i = 0; i < size(); ++i) {
    sum_sq += dims_[i] * dims_[i];
    for (int j = 0; j < size(); ++j) {
      if (!(inner_product(irreducibles_[i], irreducibles_[j]) == Cyclotomic(i == j ? 1 : 0))) {
        return false;
      }
    }
  }
  if (sum_sq != g.order()) return false;
  // Columns: sum_chi chi(a) conj(chi(b)) = delta_ab |C_G(a)|.
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      Cyclotomic s;
      for (const auto& chi : irreducibles_) s += chi.value(a) * chi.value(b).conj();
      const long expect = a == b ? g.order() / g.class_size(a) : 0;
      if (!(s == Cyclotomic(expect))) return false;
    }
  }
  return true;
}

json CharacterTable::to_json() const {
  const FiniteGroup& g = *group_;
  json j;
  j["group"] = g.name();
  j["order"] = g.order();
  json classes = json::array();
  json reps = json::array();
  json orders = json::array();
  for (int c = 0; c < g.class_count(); ++c) {
    classes.push_back(g.class_size(c));
    reps.push_back(g.element_name(g.class_rep(c)));
    orders.push_back(g.element_order(g.class_rep(c)));
  }
  j["classes"] = classes;
  j["class_representatives"] = reps;
  j["element_orders"] = orders;
  json irr = json::array();
  json degrees = json::array();
  for (int i = 0; i < size(); ++i) {
    json row;
    row["label"] = labels_[i];
    row["degree"] = dims_[i];
    json values = json::array();
    for (const auto& v : irreducibles_[i].values()) values.push_back(v.minimized().encode());
    row["values"] = values;
    irr.push_back(row);
    degrees.push_back(dims_[i]);
  }
  j["degrees"] = degrees;
  j["irreducibles"] = irr;
  return j;
}

}  // namespace eqsplit
