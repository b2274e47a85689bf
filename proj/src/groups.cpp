#include "eqsplit/groups.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"

namespace eqsplit {

using nlohmann::json;

namespace {

std::string tuple_name(const std::vector<unsigned>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

std::string perm_name(const Permutation& p) {
  // Cycle notation, 1-based.
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = p[j];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(x) = a(b(x)): apply b first.
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::string default_abelian_name(const std::vector<unsigned>& orders) {
  if (orders.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    s += (i ? "xC" : "C") + std::to_string(orders[i]);
  }
  return s;
}

}  // namespace

void FiniteGroup::finish(std::string name) {
  const int n = order();
  if (n > static_cast<int>(kMaxGroupOrder)) {
    throw InputError("group order " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(kMaxGroupOrder));
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mult_[a][b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw InputError("element without inverse in group table");
  }
  element_order_.assign(n, 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    int x = a;
    while (x != 0) {
      x = mult_[x][a];
      ++k;
      if (k > n) throw InputError("element of infinite order in group table");
    }
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (mult_[a][b] != mult_[b][a]) {
        abelian_ = false;
        break;
      }
    }
  }
  // Conjugacy classes by orbit.
  class_of_.assign(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(conjugate(a, g));
    for (int x : orbit) class_of_[x] = static_cast<int>(classes.size());
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const std::vector<int>& x, const std::vector<int>& y) {
                     const int ox = element_order_[x.front()];
                     const int oy = element_order_[y.front()];
                     if (ox != oy) return ox < oy;
                     return x.front() < y.front();
                   });
  classes_ = std::move(classes);
  for (int c = 0; c < class_count(); ++c) {
    for (int x : classes_[c]) class_of_[x] = c;
  }
  name_ = name.empty() ? structure_name(*this) : std::move(name);
}

int FiniteGroup::power_class(int c, int k) const {
  const int g = class_rep(c);
  const int o = element_order(g);
  int e = k % o;
  if (e < 0) e += o;
  int x = 0;
  for (int i = 0; i < e; ++i) x = mul(x, g);
  return class_of(x);
}

ElementSet FiniteGroup::closure(const ElementSet& seed) const {
  ElementSet result;
  result.set(0);
  std::vector<int> gens;
  for (int a = 0; a < order(); ++a) {
    if (seed.test(a)) gens.push_back(a);
  }
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        const int y = mul(x, g);
        if (!result.test(y)) {
          result.set(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

FiniteGroup FiniteGroup::trivial() { return abelian({}, "e"); }

FiniteGroup FiniteGroup::abelian(const std::vector<unsigned>& orders,
                                 std::string name) {
  std::size_t n = 1;
  for (unsigned d : orders) {
    if (d == 0) throw InputError("cyclic factor of order 0");
    n *= d;
    if (n > kMaxGroupOrder) {
      throw InputError("abelian group order exceeds the bound " +
                       std::to_string(kMaxGroupOrder));
    }
  }
  // Mixed-radix ids give lexicographic order on tuples.
  auto decode = [&](std::size_t id) {
    std::vector<unsigned> t(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      t[i] = static_cast<unsigned>(id % orders[i]);
      id /= orders[i];
    }
    return t;
  };
  auto encode = [&](const std::vector<unsigned>& t) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) id = id * orders[i] + t[i];
    return static_cast<int>(id);
  };
  FiniteGroup g;
  g.mult_.assign(n, std::vector<int>(n));
  g.element_names_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ta = decode(a);
    g.element_names_[a] = tuple_name(ta);
    for (std::size_t b = 0; b < n; ++b) {
      auto tb = decode(b);
      for (std::size_t i = 0; i < orders.size(); ++i) tb[i] = (ta[i] + tb[i]) % orders[i];
      g.mult_[a][b] = encode(tb);
    }
  }
  g.abelian_orders_ = orders;
  g.finish(name.empty() ? default_abelian_name(orders) : std::move(name));
  return g;
}

FiniteGroup FiniteGroup::permutation(unsigned degree,
                                     const std::vector<Permutation>& generators,
                                     std::string name) {
  if (degree == 0 || degree > kMaxPermDegree) {
    throw InputError("permutation degree must be in 1.." +
                     std::to_string(kMaxPermDegree));
  }
  for (const auto& p : generators) {
    if (p.size() != degree) {
      throw InputError("generator has " + std::to_string(p.size()) +
                       " images, expected degree " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (unsigned x : p) {
      if (x >= degree || hit[x]) {
        throw InputError("generator " + perm_name(p) + " is not a permutation");
      }
      hit[x] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> elems{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& gen : generators) {
        auto y = compose(x, gen);
        if (elems.insert(y).second) {
          if (elems.size() > kMaxGroupOrder) {
            throw InputError("generated group exceeds order bound " +
                             std::to_string(kMaxGroupOrder));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> list(elems.begin(), elems.end());
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  FiniteGroup g;
  const std::size_t n = list.size();
  g.mult_.assign(n, std::vector<int>(n));
  g.element_names_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.element_names_[a] = perm_name(list[a]);
    for (std::size_t b = 0; b < n; ++b) g.mult_[a][b] = index.at(compose(list[a], list[b]));
  }
  g.perms_ = std::move(list);
  g.finish(std::move(name));
  return g;
}

FiniteGroup FiniteGroup::table(std::vector<std::string> element_names,
                               const std::vector<std::vector<int>>& mult,
                               std::string name) {
  const std::size_t n = mult.size();
  if (n == 0) throw InputError("empty multiplication table");
  if (n > kMaxGroupOrder) {
    throw InputError("group order " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(kMaxGroupOrder));
  }
  if (!element_names.empty() && element_names.size() != n) {
    throw InputError("element name count does not match table size");
  }
  for (const auto& row : mult) {
    if (row.size() != n) throw InputError("multiplication table is not square");
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw InputError("multiplication table entry out of range (not closed)");
      }
    }
  }
  int e = -1;
  for (std::size_t a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) {
      ok = mult[a][b] == static_cast<int>(b) && mult[b][a] == static_cast<int>(b);
    }
    if (ok) e = static_cast<int>(a);
  }
  if (e < 0) throw InputError("multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          throw InputError("multiplication table is not associative");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    for (int x : mult[a]) {
      if (hit[x]) throw InputError("multiplication table row is not a permutation");
      hit[x] = true;
    }
  }
  // Move the identity to id 0, keep the rest in the given order.
  std::vector<int> order_ids;
  order_ids.push_back(e);
  for (std::size_t a = 0; a < n; ++a) {
    if (static_cast<int>(a) != e) order_ids.push_back(static_cast<int>(a));
  }
  std::vector<int> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[order_ids[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.mult_.assign(n, std::vector<int>(n));
  g.element_names_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = order_ids[i];
    g.element_names_[i] =
        element_names.empty() ? "g" + std::to_string(a) : element_names[a];
    for (std::size_t j = 0; j < n; ++j) {
      g.mult_[i][j] = new_id[mult[a][order_ids[j]]];
    }
  }
  g.finish(std::move(name));
  return g;
}

namespace {

Permutation cycle_perm(unsigned degree, const std::vector<unsigned>& cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

FiniteGroup quaternion_group() {
  // Unit quaternions as (sign, unit) with unit in {1, i, j, k}.
  static const int unit_mul[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  static const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int s : {1, -1}) {
    for (int u = 0; u < 4; ++u) names.push_back((s < 0 ? "-" : "") + std::string(unit_names[u]));
  }
  auto id = [](int sign, int unit) { return (sign < 0 ? 4 : 0) + unit; };
  std::vector<std::vector<int>> mult(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int sa = a < 4 ? 1 : -1;
      const int sb = b < 4 ? 1 : -1;
      const auto& r = unit_mul[a % 4][b % 4];
      mult[a][b] = id(sa * sb * r[0], r[1]);
    }
  }
  return FiniteGroup::table(names, mult, "Q8");
}

FiniteGroup dihedral(unsigned n) {
  if (n == 0 || n > 12) throw InputError("dihedral D_n supported for 1 <= n <= 12");
  const std::string name = "D" + std::to_string(n);
  if (n == 1) return FiniteGroup::abelian({2}, name);
  if (n == 2) return FiniteGroup::abelian({2, 2}, name);
  Permutation r(n), s(n);
  for (unsigned i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return FiniteGroup::permutation(n, {r, s}, name);
}

std::optional<unsigned> parse_uint(const std::string& s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  if (name == "e" || name == "1" || name == "C1" || name == "trivial") return trivial();
  if (name == "S3") {
    return permutation(3, {cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})}, "S3");
  }
  if (name == "S4") {
    return permutation(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})}, "S4");
  }
  if (name == "A4") {
    return permutation(4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})}, "A4");
  }
  if (name == "Q8") return quaternion_group();
  if (name == "V4" || name == "K4") return abelian({2, 2}, name);
  if (name.size() > 1 && name[0] == 'D') {
    if (auto n = parse_uint(name.substr(1))) return dihedral(*n);
  }
  if (name.size() > 1 && name[0] == 'C') {
    // C6 or C2xC2xC3
    std::vector<unsigned> orders;
    std::stringstream ss(name);
    std::string part;
    bool ok = true;
    while (std::getline(ss, part, 'x')) {
      if (part.size() < 2 || part[0] != 'C') {
        ok = false;
        break;
      }
      auto d = parse_uint(part.substr(1));
      if (!d || *d == 0) {
        ok = false;
        break;
      }
      orders.push_back(*d);
    }
    if (ok && !orders.empty()) return abelian(orders, name);
  }
  throw InputError("unknown builtin group '" + name +
                   "' (known: e, Cn, CaxCb..., V4, Dn (n<=12), Q8, S3, S4, A4)");
}

Permutation parse_cycles(const std::string& text, unsigned degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t pos = 0;
  auto fail = [&]() { throw InputError("malformed cycle notation '" + text + "'"); };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    const auto close = text.find(')', pos);
    if (close == std::string::npos) fail();
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    std::vector<unsigned> cycle;
    std::string tok;
    while (ss >> tok) {
      for (char& c : tok) {
        if (c == ',') c = ' ';
      }
      std::stringstream inner(tok);
      unsigned v = 0;
      while (inner >> v) {
        if (v == 0 || v > degree) {
          throw InputError("cycle point " + std::to_string(v) + " out of range 1.." +
                           std::to_string(degree));
        }
        cycle.push_back(v - 1);
      }
    }
    std::vector<unsigned> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail();
    p = compose(p, cycle_perm(degree, cycle));
    pos = close + 1;
  }
  return p;
}

FiniteGroup FiniteGroup::from_json(const json& spec) {
  try {
    const std::string type = spec.at("type").get<std::string>();
    const std::string name = spec.value("name", std::string{});
    if (type == "builtin") return builtin(spec.at("name").get<std::string>());
    if (type == "abelian") {
      return abelian(spec.at("orders").get<std::vector<unsigned>>(), name);
    }
    if (type == "perm") {
      const unsigned degree = spec.at("degree").get<unsigned>();
      std::vector<Permutation> gens;
      for (const auto& g : spec.at("generators")) {
        if (g.is_string()) {
          gens.push_back(parse_cycles(g.get<std::string>(), degree));
          continue;
        }
        auto images = g.get<std::vector<unsigned>>();
        // A full image list contains either 0..n-1 or 1..n.
        const bool one_based =
            !images.empty() && std::find(images.begin(), images.end(), 0u) == images.end();
        if (one_based) {
          for (auto& x : images) --x;
        }
        gens.push_back(std::move(images));
      }
      return permutation(degree, gens, name);
    }
    if (type == "table") {
      std::vector<std::string> names;
      if (spec.contains("elements")) {
        for (const auto& e : spec.at("elements")) {
          names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
        }
      }
      return table(std::move(names), spec.at("mult").get<std::vector<std::vector<int>>>(),
                   name);
    }
    throw InputError("unknown group spec type '" + type + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
}

FiniteGroup load_group(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return FiniteGroup::builtin(ref.substr(8));
  json spec;
  try {
    if (ref == "-") {
      spec = json::parse(std::cin);
    } else {
      std::ifstream in(ref);
      if (!in) {
        // Bare builtin names are accepted as a convenience.
        try {
          return FiniteGroup::builtin(ref);
        } catch (const InputError&) {
          throw InputError("cannot open group spec '" + ref +
                           "' (use builtin:NAME for built-in groups)");
        }
      }
      spec = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw InputError("group spec '" + ref + "' is not valid JSON: " + e.what());
  }
  return FiniteGroup::from_json(spec);
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors d1 | d2 | ... of an abelian group.
std::vector<unsigned> abelian_invariants(const FiniteGroup& g) {
  std::vector<std::vector<unsigned>> prime_parts;  // per prime, cyclic p-power orders
  for (unsigned p : prime_factors(static_cast<unsigned>(g.order()))) {
    // count_k = #{x : x^(p^k) = 1} = prod_i p^min(k, e_i)
    std::vector<unsigned> log_counts{0};
    unsigned pk = 1;
    while (true) {
      pk *= p;
      int count = 0;
      for (int x = 0; x < g.order(); ++x) {
        if (pk % static_cast<unsigned>(g.element_order(x)) == 0) ++count;
      }
      unsigned lg = 0;
      for (int c = count; c > 1; c /= static_cast<int>(p)) ++lg;
      if (lg == log_counts.back()) break;
      log_counts.push_back(lg);
    }
    // Number of cyclic factors with exponent >= k is log_counts[k]-log_counts[k-1].
    std::vector<unsigned> exps;
    const std::size_t K = log_counts.size() - 1;
    for (std::size_t k = 1; k <= K; ++k) {
      const unsigned at_least_k = log_counts[k] - log_counts[k - 1];
      const unsigned at_least_next = k < K ? log_counts[k + 1] - log_counts[k] : 0;
      for (unsigned i = 0; i < at_least_k - at_least_next; ++i) {
        unsigned q = 1;
        for (std::size_t j = 0; j < k; ++j) q *= p;
        exps.push_back(q);
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    prime_parts.push_back(exps);
  }
  std::vector<unsigned> inv;
  for (std::size_t idx = 0;; ++idx) {
    unsigned d = 1;
    bool any = false;
    for (const auto& part : prime_parts) {
      if (idx < part.size()) {
        d *= part[idx];
        any = true;
      }
    }
    if (!any) break;
    inv.push_back(d);
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

}  // namespace

std::string structure_name(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return "e";
  if (g.is_abelian()) {
    std::string s;
    for (unsigned d : abelian_invariants(g)) s += (s.empty() ? "C" : "xC") + std::to_string(d);
    return s;
  }
  std::map<int, int> by_order;
  for (int x = 0; x < n; ++x) ++by_order[g.element_order(x)];
  const int involutions = by_order[2];
  if (n == 8) return involutions == 1 ? "Q8" : "D4";
  if (n == 12 && by_order[3] == 8) return "A4";
  if (n == 12 && involutions == 1) return "Dic3";
  if (n == 24 && by_order[4] == 6 && by_order[3] == 8) return "S4";
  if (n % 2 == 0 && by_order[n / 2] >= 1 && involutions == n / 2 + (n % 4 == 0 ? 1 : 0)) {
    return n == 6 ? "S3" : "D" + std::to_string(n / 2);
  }
  return "G" + std::to_string(n);
}

Subgroup make_subgroup(const FiniteGroup& parent, const ElementSet& members,
                       std::string label) {
  Subgroup h;
  for (int x = 0; x < parent.order(); ++x) {
    if (members.test(x)) h.members.push_back(x);
  }
  if (h.members.empty() || h.members.front() != parent.identity()) {
    throw InputError("subgroup must contain the identity");
  }
  std::map<int, int> local;
  for (std::size_t i = 0; i < h.members.size(); ++i) local[h.members[i]] = static_cast<int>(i);
  const std::size_t m = h.members.size();
  std::vector<std::vector<int>> mult(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = parent.element_name(h.members[a]);
    for (std::size_t b = 0; b < m; ++b) {
      const auto it = local.find(parent.mul(h.members[a], h.members[b]));
      if (it == local.end()) throw InputError("element set is not closed under products");
      mult[a][b] = it->second;
    }
  }
  auto sub = std::make_shared<FiniteGroup>(FiniteGroup::table(names, mult, label));
  h.class_map.resize(sub->class_count());
  for (int c = 0; c < sub->class_count(); ++c) {
    h.class_map[c] = parent.class_of(h.members[sub->class_rep(c)]);
  }
  h.label = label.empty() ? sub->name() : std::move(label);
  h.group = std::move(sub);
  return h;
}

namespace {

struct SetHash {
  std::size_t operator()(const ElementSet& s) const { return std::hash<ElementSet>{}(s); }
};

bool set_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < kMaxGroupOrder; ++i) {
    if (a.test(i) != b.test(i)) return a.test(i);
  }
  return false;
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int x) {
  ElementSet r;
  for (int a = 0; a < g.order(); ++a) {
    if (s.test(a)) r.set(g.conjugate(a, x));
  }
  return r;
}

}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g) {
  const int n = g.order();
  std::unordered_set<ElementSet, SetHash> seen;
  std::vector<ElementSet> found;
  auto add = [&](const ElementSet& s) {
    if (seen.insert(s).second) found.push_back(s);
  };
  // Subgroups generated by at most two elements.
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      ElementSet seed;
      seed.set(a);
      seed.set(b);
      add(g.closure(seed));
    }
  }
  // Saturate: adjoin one more generator until nothing new appears.
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i];
    for (int x = 0; x < n; ++x) {
      if (base.test(x)) continue;
      ElementSet seed = base;
      seed.set(x);
      add(g.closure(seed));
    }
  }
  // Canonical representative of each conjugation orbit.
  std::vector<ElementSet> reps;
  std::unordered_set<ElementSet, SetHash> rep_seen;
  for (const auto& s : found) {
    ElementSet best = s;
    for (int x = 0; x < n; ++x) {
      const ElementSet c = conjugate_set(g, s, x);
      if (set_less(c, best)) best = c;
    }
    if (rep_seen.insert(best).second) reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return set_less(a, b);
  });
  std::vector<Subgroup> result;
  result.reserve(reps.size());
  for (const auto& s : reps) {
    const bool whole = static_cast<int>(s.count()) == n;
    result.push_back(make_subgroup(g, s, whole ? g.name() : std::string{}));
  }
  // Disambiguate repeated structure names.
  std::map<std::string, int> total;
  for (const auto& h : result) ++total[h.label];
  std::map<std::string, int> running;
  for (auto& h : result) {
    if (total[h.label] > 1) h.label += "#" + std::to_string(++running[h.label]);
  }
  return result;
}

}  // namespace eqsplit
