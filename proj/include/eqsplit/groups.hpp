#pragma once

#include <bitset>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace eqsplit {

inline constexpr std::size_t kMaxGroupOrder = 96;
inline constexpr unsigned kMaxPermDegree = 12;

using ElementSet = std::bitset<kMaxGroupOrder>;
using Permutation = std::vector<unsigned>;  // images of 0..n-1

/// A concrete finite group given by its full multiplication table, with
/// conjugacy classes ordered by (element order, smallest member id). The
/// identity has id 0 and class 0.
class FiniteGroup {
 public:
  static FiniteGroup trivial();
  /// Product of cyclic groups C_{d1} x ... x C_{dr}; elements are tuples in
  /// lexicographic order.
  static FiniteGroup abelian(const std::vector<unsigned>& orders,
                             std::string name = {});
  /// Group generated by permutations of {0..degree-1}; elements are sorted
  /// lexicographically by image vector.
  static FiniteGroup permutation(unsigned degree,
                                 const std::vector<Permutation>& generators,
                                 std::string name = {});
  /// Explicit Cayley table; mult[a][b] is the id of a*b.
  static FiniteGroup table(std::vector<std::string> element_names,
                           const std::vector<std::vector<int>>& mult,
                           std::string name = {});
  static FiniteGroup builtin(const std::string& name);
  /// GroupSpec JSON: {"type":"abelian"|"perm"|"table"|"builtin", ...}.
  static FiniteGroup from_json(const nlohmann::json& spec);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  int conjugate(int x, int g) const { return mul(mul(g, x), inverse(g)); }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const std::string& element_name(int a) const { return element_names_[a]; }

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& conjugacy_class(int c) const { return classes_[c]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_of(int a) const { return class_of_[a]; }
  int class_rep(int c) const { return classes_[c].front(); }
  /// Class containing g^k for g in class c.
  int power_class(int c, int k) const;
  int inverse_class(int c) const { return class_of(inverse(class_rep(c))); }

  /// Cyclic factor orders when constructed as a product of cyclics; drives
  /// the direct construction of linear characters.
  const std::optional<std::vector<unsigned>>& abelian_orders() const {
    return abelian_orders_;
  }
  /// Permutation images when constructed from permutations.
  const std::optional<std::vector<Permutation>>& permutations() const {
    return perms_;
  }

  ElementSet closure(const ElementSet& seed) const;

 private:
  FiniteGroup() = default;
  void finish(std::string name);

  std::string name_;
  std::vector<std::string> element_names_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::optional<std::vector<unsigned>> abelian_orders_;
  std::optional<std::vector<Permutation>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup H <= G carried as its own group plus the fusion of its classes
/// into the parent's classes.
struct Subgroup {
  std::vector<int> members;  // sorted parent ids; members[i] is H-id i
  GroupPtr group;            // induced group on members
  std::vector<int> class_map;  // H class -> parent class
  std::string label;

  int order() const { return static_cast<int>(members.size()); }
};

/// Subgroup of `parent` spanned by the given element set (must be closed).
Subgroup make_subgroup(const FiniteGroup& parent, const ElementSet& members,
                       std::string label = {});

/// One representative per conjugacy class of subgroups, sorted by order then
/// by member ids. Labels are structural names ("e", "C2", "C2xC2", "S3", ...)
/// with "#k" suffixes separating non-conjugate subgroups of the same type.
std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g);

/// Structural name of a group: "e", "C4", "C2xC2", "S3", "Q8", ...
std::string structure_name(const FiniteGroup& g);

/// Parses "builtin:NAME", "-" (stdin JSON) or a path to a GroupSpec JSON file.
FiniteGroup load_group(const std::string& ref);

/// Cycle notation "(1 2)(3 4 5)" with 1-based points.
Permutation parse_cycles(const std::string& text, unsigned degree);

}  // namespace eqsplit
