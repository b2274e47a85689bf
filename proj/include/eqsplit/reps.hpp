#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eqsplit/exactnum.hpp"
#include "eqsplit/groups.hpp"

namespace eqsplit {

/// Class function on a finite group with cyclotomic values, one per class.
class Character {
 public:
  Character(GroupPtr group, std::vector<Cyclotomic> values);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value(int cls) const { return values_[cls]; }

  /// Value at the identity; throws NotGenuineError unless a nonnegative
  /// integer.
  long dimension() const;

  friend bool operator==(const Character& a, const Character& b);

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

Character add(const Character& a, const Character& b);
Character tensor(const Character& a, const Character& b);
/// Complex conjugate character (the dual representation).
Character dual(const Character& a);
Character scaled(const Character& a, long k);
Character zero_character(const GroupPtr& g);

/// (1/|G|) sum_g a(g) conj(b(g)), exact.
Cyclotomic inner_product(const Character& a, const Character& b);

/// dim Hom_G(a, b) for genuine characters; throws NotGenuineError when the
/// inner product is not a nonnegative integer.
long hom_dim(const Character& a, const Character& b);

/// Dimension of the subspace fixed by the whole group.
long fixed_dim(const Character& chi);

/// Multiplicity vector indexed like CharacterTable::irreducibles().
using Multiplicities = std::vector<long>;

class CharacterTable {
 public:
  /// Abelian groups built from cyclic factors get their linear characters
  /// directly; everything else goes through the class-algebra eigenvector
  /// method over F_p with an exact lift to cyclotomic values.
  static CharacterTable compute(GroupPtr group);
  /// User-supplied table; validated by both orthogonality relations.
  static CharacterTable from_json(GroupPtr group, const nlohmann::json& j);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(irreducibles_.size()); }
  const std::vector<Character>& irreducibles() const { return irreducibles_; }
  const Character& irreducible(int i) const { return irreducibles_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  long dimension(int i) const { return dims_[i]; }
  int trivial_index() const { return trivial_; }
  /// -1 when the label is unknown.
  int index_of(const std::string& label) const;

  Multiplicities decompose(const Character& chi) const;
  Character compose(const Multiplicities& m) const;

  /// Row and column orthogonality plus sum of squared degrees = |G|.
  bool satisfies_orthogonality() const;

  nlohmann::json to_json() const;

 private:
  CharacterTable(GroupPtr group, std::vector<Character> irr,
                 std::vector<std::string> labels);

  GroupPtr group_;
  std::vector<Character> irreducibles_;
  std::vector<std::string> labels_;
  std::vector<long> dims_;
  int trivial_ = 0;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Character of H obtained by restricting a character of the parent group.
Character restrict_to(const Character& chi, const Subgroup& h);
/// dim V^H.
long fixed_dim(const Character& chi, const Subgroup& h);

/// An ordered sequence of irreducible summands. The order is data: the
/// splittings depend on it.
class RepSequence {
 public:
  RepSequence() = default;
  RepSequence(TablePtr table, std::vector<int> blocks);
  /// "triv,triv,sign" or "2*triv,sign"; labels must exist in the table.
  static RepSequence parse(TablePtr table, const std::string& text);

  const TablePtr& table() const { return table_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int block(std::size_t i) const { return blocks_[i]; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  long dimension() const;
  Character character() const;
  Multiplicities multiplicities() const;
  std::vector<std::string> labels() const;
  std::string to_string() const;

  RepSequence prefix(std::size_t n) const;
  RepSequence slice(std::size_t from, std::size_t to) const;

  friend bool operator==(const RepSequence& a, const RepSequence& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  TablePtr table_;
  std::vector<int> blocks_;
};

/// i_H^* V split into its one-dimensional and higher-dimensional isotypic
/// parts.
struct HIsotypic {
  std::string subgroup;
  Multiplicities multiplicities;   // indexed by H-irreducible
  std::map<std::string, long> linear;  // H-label -> n_i, dim 1, n_i > 0
  std::map<std::string, long> higher;  // H-label -> m_j, dim > 1, m_j > 0
};

/// Per-subgroup data precomputed once per group: the subgroup's own table and
/// the integer branching matrix from G-irreducibles to H-irreducibles.
struct SubgroupData {
  Subgroup subgroup;
  TablePtr table;
  std::vector<std::vector<long>> branching;  // [G irr][H irr]
  std::vector<int> dual;                     // H irr -> dual H irr
  std::vector<long> dims;                    // H irr dims

  int irr_count() const { return static_cast<int>(dims.size()); }
  /// Branching of a multiplicity vector over G-irreducibles.
  Multiplicities restrict_mult(const Multiplicities& g_mult) const;
};

/// Everything the splitting and fixed-point engines need for one group.
/// Immutable after construction apart from an internally synchronized memo of
/// tensor products.
class RepContext {
 public:
  static std::shared_ptr<const RepContext> build(GroupPtr group,
                                                 TablePtr table = nullptr);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const TablePtr& table() const { return table_; }
  const std::vector<SubgroupData>& subgroups() const { return subgroups_; }
  /// -1 when unknown.
  int subgroup_index(const std::string& label) const;
  int dual(int irr) const { return dual_[irr]; }
  bool all_linear(const RepSequence& v) const;

  /// Decomposition of irr_a ⊗ irr_b (memoized).
  const Multiplicities& tensor(int a, int b) const;
  /// Decomposition of Hom(irr_a, irr_b) = dual(a) ⊗ b.
  const Multiplicities& hom(int a, int b) const { return tensor(dual(a), b); }

  HIsotypic isotypic(const Multiplicities& g_mult, int subgroup) const;

 private:
  RepContext() = default;

  GroupPtr group_;
  TablePtr table_;
  std::vector<SubgroupData> subgroups_;
  std::vector<int> dual_;
  mutable std::shared_mutex memo_mu_;
  mutable std::map<std::pair<int, int>, Multiplicities> tensor_memo_;
};

using ContextPtr = std::shared_ptr<const RepContext>;

/// Isotypic data of V restricted to H, computed from characters directly.
HIsotypic isotypic(const Character& chi, const Subgroup& h,
                   const CharacterTable& h_table);

}  // namespace eqsplit
