#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Finite groups as explicit Cayley tables, plus the handful of constructions
// and subgroup operations the rest of the workbench is built on.

namespace pgog {

using Elt = int32_t;

constexpr int kDefaultOrderCap = 4096;

struct GroupSpec {
  enum class Kind { Cyclic, ElementaryAbelian, Product, Semidirect, Table };

  Kind kind = Kind::Table;
  int n = 0;     // cyclic
  int p = 0;     // elementary abelian
  int k = 0;
  std::vector<GroupSpec> sub;  // product factors; {normal, acting} for semidirect
  // semidirect: one permutation of the normal group per acting element
  std::vector<std::vector<Elt>> action;
  std::vector<std::vector<Elt>> table;  // raw Cayley table
  std::string label;

  static GroupSpec cyclic(int n);
  static GroupSpec elementary_abelian(int p, int k);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec semidirect(GroupSpec normal, GroupSpec acting,
                              std::vector<std::vector<Elt>> action);
  static GroupSpec raw_table(std::vector<std::vector<Elt>> table);

  GroupSpec with_label(std::string text) const;
  bool operator==(const GroupSpec&) const = default;
};

class FiniteGroup {
 public:
  FiniteGroup(std::vector<Elt> table, int order, GroupSpec provenance,
              std::string label);

  int order() const { return order_; }
  Elt identity() const { return identity_; }
  Elt mul(Elt x, Elt y) const { return table_[size_t(x) * order_ + y]; }
  Elt inv(Elt x) const { return inverse_[x]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt power(Elt x, long long e) const;

  const std::string& label() const { return label_; }
  const GroupSpec& provenance() const { return provenance_; }
  std::string display_name() const;

  bool operator==(const FiniteGroup& other) const;

 private:
  int order_;
  Elt identity_;
  std::vector<Elt> table_;  // row-major, order*order
  std::vector<Elt> inverse_;
  GroupSpec provenance_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// value equality, tolerating distinct shared instances
bool groups_equal(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> elements;  // sorted, closed, contains identity

  int order() const { return int(elements.size()); }
  bool contains(Elt x) const;
};

class GroupHom {
 public:
  // full element map; homomorphism property is verified exhaustively
  GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Elt> map);

  Elt operator()(Elt x) const { return map_[x]; }
  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const std::vector<Elt>& map() const { return map_; }
  bool injective() const { return injective_; }
  bool surjective() const { return image_.order() == codomain_->order(); }
  const Subgroup& image() const { return image_; }

  bool operator==(const GroupHom& other) const;

 private:
  GroupPtr domain_, codomain_;
  std::vector<Elt> map_;
  bool injective_;
  Subgroup image_;
};

GroupPtr group_from_spec(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

GroupHom hom_from_generator_images(const GroupPtr& domain, const GroupPtr& codomain,
                                   const std::vector<Elt>& gens,
                                   const std::vector<Elt>& images);
GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom inverse_iso(const GroupHom& f);

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elt> elements);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elt>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup preimage_subgroup(const GroupHom& f, const Subgroup& s);
Subgroup image_subgroup(const GroupHom& f, const Subgroup& s);

// minimal-index representative per double coset QxR, ascending
std::vector<Elt> double_cosets(const GroupPtr& p, const Subgroup& q, const Subgroup& r);

bool is_normal(const GroupPtr& p, const Subgroup& s);
bool is_p_group(const FiniteGroup& g, int p);
bool is_prime(int p);

// greedy: repeatedly adjoin the smallest element outside the current span
std::vector<Elt> minimal_generators(const GroupPtr& g);

// full subgroup lattice; intended for small groups (corpus targets, order <= 64)
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

struct SubgroupGroup {
  GroupPtr group;
  GroupHom embedding;         // into the parent
  std::vector<Elt> to_parent; // element of `group` -> element of parent
};
SubgroupGroup subgroup_as_group(const Subgroup& s);

}  // namespace pgog
