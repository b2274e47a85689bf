#include "eqsplit/reps.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"

namespace eqsplit {

Character::Character(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->class_count()) {
    throw InputError("character needs one value per conjugacy class");
  }
}

long Character::dimension() const {
  const auto r = values_[0].as_rational();
  if (!r || r->get_den() != 1 || *r < 0) {
    throw NotGenuineError("value at the identity is not a nonnegative integer");
  }
  return r->get_num().get_si();
}

bool operator==(const Character& a, const Character& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

namespace {

void require_same_group(const Character& a, const Character& b) {
  if (a.group_ptr() != b.group_ptr()) {
    throw InputError("characters belong to different groups");
  }
}

}  // namespace

Character add(const Character& a, const Character& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] + b.values()[i];
  return Character(a.group_ptr(), std::move(v));
}

Character tensor(const Character& a, const Character& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] * b.values()[i];
  return Character(a.group_ptr(), std::move(v));
}

Character dual(const Character& a) {
  std::vector<Cyclotomic> v;
  v.reserve(a.values().size());
  for (const auto& x : a.values()) v.push_back(x.conj());
  return Character(a.group_ptr(), std::move(v));
}

Character scaled(const Character& a, long k) {
  std::vector<Cyclotomic> v;
  v.reserve(a.values().size());
  for (const auto& x : a.values()) v.push_back(Cyclotomic(k) * x);
  return Character(a.group_ptr(), std::move(v));
}

Character zero_character(const GroupPtr& g) {
  return Character(g, std::vector<Cyclotomic>(g->class_count()));
}

Cyclotomic inner_product(const Character& a, const Character& b) {
  require_same_group(a, b);
  const FiniteGroup& g = a.group();
  Cyclotomic s;
  for (int c = 0; c < g.class_count(); ++c) {
    if (a.value(c).is_zero() || b.value(c).is_zero()) continue;
    s += Cyclotomic(static_cast<long>(g.class_size(c))) * a.value(c) * b.value(c).conj();
  }
  return s.divided_by(Rational(g.order()));
}

long hom_dim(const Character& a, const Character& b) {
  const auto r = inner_product(a, b).as_rational();
  if (!r || r->get_den() != 1 || *r < 0) {
    throw NotGenuineError("inner product is not a nonnegative integer");
  }
  return r->get_num().get_si();
}

long fixed_dim(const Character& chi) {
  const FiniteGroup& g = chi.group();
  Cyclotomic s;
  for (int c = 0; c < g.class_count(); ++c) {
    s += Cyclotomic(static_cast<long>(g.class_size(c))) * chi.value(c);
  }
  const auto r = s.divided_by(Rational(g.order())).as_rational();
  if (!r || r->get_den() != 1 || *r < 0) {
    throw NotGenuineError("average over the group is not a nonnegative integer");
  }
  return r->get_num().get_si();
}

Character restrict_to(const Character& chi, const Subgroup& h) {
  if (h.class_map.empty() || h.members.empty() ||
      h.members.back() >= chi.group().order()) {
    throw InputError("subgroup '" + h.label + "' is not a subgroup of the character's group");
  }
  std::vector<Cyclotomic> v(h.group->class_count());
  for (int c = 0; c < h.group->class_count(); ++c) {
    const int parent_class = h.class_map[c];
    if (parent_class < 0 || parent_class >= chi.group().class_count()) {
      throw InputError("subgroup class map does not match the character's group");
    }
    v[c] = chi.value(parent_class);
  }
  return Character(h.group, std::move(v));
}

long fixed_dim(const Character& chi, const Subgroup& h) {
  return fixed_dim(restrict_to(chi, h));
}

HIsotypic isotypic(const Character& chi, const Subgroup& h,
                   const CharacterTable& h_table) {
  HIsotypic iso;
  iso.subgroup = h.label;
  iso.multiplicities = h_table.decompose(restrict_to(chi, h));
  for (int i = 0; i < h_table.size(); ++i) {
    const long m = iso.multiplicities[i];
    if (m == 0) continue;
    (h_table.dimension(i) == 1 ? iso.linear : iso.higher)[h_table.label(i)] = m;
  }
  return iso;
}

// ---------------------------------------------------------------------------
// RepSequence

RepSequence::RepSequence(TablePtr table, std::vector<int> blocks)
    : table_(std::move(table)), blocks_(std::move(blocks)) {
  for (int b : blocks_) {
    if (b < 0 || b >= table_->size()) throw InputError("irreducible index out of range");
  }
}

RepSequence RepSequence::parse(TablePtr table, const std::string& text) {
  std::vector<int> blocks;
  // A blank string is the zero representation.
  if (text.find_first_not_of(" \t") == std::string::npos) return RepSequence(std::move(table), {});
  std::stringstream ss(text + ",");
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError("empty item in representation '" + text + "'");
    long count = 1;
    std::string label = item;
    const auto star = item.find('*');
    if (star != std::string::npos) {
      const std::string digits = item.substr(0, star);
      const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (ec != std::errc() || end != digits.data() + digits.size() || count < 0) {
        throw InputError("bad multiplicity in '" + item + "'");
      }
      label = item.substr(star + 1);
      label.erase(0, label.find_first_not_of(" \t"));
    }
    const int idx = table->index_of(label);
    if (idx < 0) {
      std::string known;
      for (const auto& l : table->labels()) known += (known.empty() ? "" : ", ") + l;
      throw InputError("unknown irreducible '" + label + "' for group " +
                       table->group().name() + " (known: " + known + ")");
    }
    for (long i = 0; i < count; ++i) blocks.push_back(idx);
  }
  return RepSequence(std::move(table), std::move(blocks));
}

long RepSequence::dimension() const {
  long d = 0;
  for (int b : blocks_) d += table_->dimension(b);
  return d;
}

Character RepSequence::character() const {
  Character acc = zero_character(table_->group_ptr());
  for (int b : blocks_) acc = add(acc, table_->irreducible(b));
  return acc;
}

Multiplicities RepSequence::multiplicities() const {
  Multiplicities m(table_ ? table_->size() : 0, 0);
  for (int b : blocks_) ++m[b];
  return m;
}

std::vector<std::string> RepSequence::labels() const {
  std::vector<std::string> out;
  for (int b : blocks_) out.push_back(table_->label(b));
  return out;
}

std::string RepSequence::to_string() const {
  std::string s;
  for (int b : blocks_) s += (s.empty() ? "" : ",") + table_->label(b);
  return s;
}

RepSequence RepSequence::prefix(std::size_t n) const { return slice(0, n); }

RepSequence RepSequence::slice(std::size_t from, std::size_t to) const {
  RepSequence r;
  r.table_ = table_;
  r.blocks_.assign(blocks_.begin() + static_cast<long>(from),
                   blocks_.begin() + static_cast<long>(to));
  return r;
}

// ---------------------------------------------------------------------------
// RepContext

Multiplicities SubgroupData::restrict_mult(const Multiplicities& g_mult) const {
  Multiplicities out(dims.size(), 0);
  for (std::size_t i = 0; i < g_mult.size(); ++i) {
    if (g_mult[i] == 0) continue;
    for (std::size_t a = 0; a < dims.size(); ++a) out[a] += g_mult[i] * branching[i][a];
  }
  return out;
}

namespace {

std::vector<int> dual_map(const CharacterTable& t) {
  std::vector<int> d(t.size(), -1);
  for (int i = 0; i < t.size(); ++i) {
    const Character c = dual(t.irreducible(i));
    for (int j = 0; j < t.size(); ++j) {
      if (c == t.irreducible(j)) {
        d[i] = j;
        break;
      }
    }
    if (d[i] < 0) throw InternalError("dual of an irreducible is not in the table");
  }
  return d;
}

}  // namespace

std::shared_ptr<const RepContext> RepContext::build(GroupPtr group, TablePtr table) {
  std::shared_ptr<RepContext> ctx(new RepContext());
  ctx->group_ = group;
  ctx->table_ = table ? std::move(table)
                      : std::make_shared<const CharacterTable>(CharacterTable::compute(group));
  ctx->dual_ = dual_map(*ctx->table_);
  for (auto& h : subgroups_up_to_conjugacy(*group)) {
    SubgroupData sd;
    // The whole group has the same multiplication table and class order as
    // G, so it keeps G's labels.
    sd.table = std::make_shared<const CharacterTable>(
        h.order() == group->order() ? CharacterTable::from_json(h.group, ctx->table_->to_json())
                                    : CharacterTable::compute(h.group));
    sd.dual = dual_map(*sd.table);
    for (int a = 0; a < sd.table->size(); ++a) sd.dims.push_back(sd.table->dimension(a));
    for (const auto& chi : ctx->table_->irreducibles()) {
      sd.branching.push_back(sd.table->decompose(restrict_to(chi, h)));
    }
    sd.subgroup = std::move(h);
    ctx->subgroups_.push_back(std::move(sd));
  }
  return ctx;
}

int RepContext::subgroup_index(const std::string& label) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i].subgroup.label == label) return static_cast<int>(i);
  }
  return -1;
}

bool RepContext::all_linear(const RepSequence& v) const {
  return std::all_of(v.blocks().begin(), v.blocks().end(),
                     [&](int b) { return table_->dimension(b) == 1; });
}

const Multiplicities& RepContext::tensor(int a, int b) const {
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  {
    std::shared_lock lock(memo_mu_);
    auto it = tensor_memo_.find(key);
    if (it != tensor_memo_.end()) return it->second;
  }
  Multiplicities m = table_->decompose(
      eqsplit::tensor(table_->irreducible(a), table_->irreducible(b)));
  std::unique_lock lock(memo_mu_);
  return tensor_memo_.emplace(key, std::move(m)).first->second;
}

HIsotypic RepContext::isotypic(const Multiplicities& g_mult, int subgroup) const {
  const SubgroupData& sd = subgroups_.at(static_cast<std::size_t>(subgroup));
  HIsotypic iso;
  iso.subgroup = sd.subgroup.label;
  iso.multiplicities = sd.restrict_mult(g_mult);
  for (int a = 0; a < sd.irr_count(); ++a) {
    const long m = iso.multiplicities[a];
    if (m == 0) continue;
    (sd.dims[a] == 1 ? iso.linear : iso.higher)[sd.table->label(a)] = m;
  }
  return iso;
}

}  // namespace eqsplit
