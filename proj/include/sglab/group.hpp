#ifndef SGLAB_GROUP_HPP
#define SGLAB_GROUP_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sglab/permutation.hpp"

namespace sglab {

using ElementIndex = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultOrderLimit = 2000;

// Input description of a permutation group: degree plus generators in
// 1-based cycle notation. Catalog constructors produce this form too.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<CycleWord> generators;
};

struct ConjugacyClass {
  std::vector<ElementIndex> members;  // ascending
  ElementIndex representative = 0;    // smallest member
  std::size_t size() const noexcept { return members.size(); }
};

// A subgroup of a FiniteGroup, stored as a membership bitset over the
// group's element indices. `generators` is a small generating set; equality
// ignores it.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(ElementSet members, std::vector<ElementIndex> generators)
      : members_(std::move(members)), generators_(std::move(generators)) {}

  const ElementSet& members() const noexcept { return members_; }
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }
  std::size_t order() const { return members_.count(); }
  bool contains(ElementIndex g) const { return members_.test(g); }
  bool is_trivial() const { return order() == 1; }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  std::vector<ElementIndex> elements() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  ElementSet members_;
  std::vector<ElementIndex> generators_;
};

// Fully enumerated finite permutation group. Element 0 is the identity;
// the remaining elements are numbered in breadth-first discovery order from
// the generators (right multiplication, generators tried in input order).
class FiniteGroup {
public:
  static FiniteGroup build(const GroupSpec& spec, std::size_t limit = kDefaultOrderLimit);

  // K as a group in its own right. Elements keep the parent's permutations;
  // indexing is breadth-first from K's stored generators.
  // to_parent[i] is the parent index of local element i.
  struct Embedded;
  static Embedded from_subgroup(const FiniteGroup& parent, const Subgroup& k);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t exponent() const noexcept { return exponent_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  // Element indices of the generators, in input order.
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }

  ElementIndex product(ElementIndex a, ElementIndex b) const {
    return cayley_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conjugate(ElementIndex g, ElementIndex x) const {
    return product(product(inverse_[x], g), x);
  }
  std::size_t element_order(ElementIndex a) const { return element_order_[a]; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(ElementIndex g) const { return class_of_[g]; }
  // Class containing the inverses of class c.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

  // Index of p, or -1 when p is not in the group.
  std::int64_t index_of(const Permutation& p) const;

  // Deterministic 64-bit fingerprint of the multiplication table.
  std::uint64_t hash() const noexcept { return hash_; }

  Subgroup whole() const;
  Subgroup trivial() const;
  bool is_abelian() const;
  bool is_cyclic() const;

private:
  void finish();  // inverse, orders, classes, hash from the Cayley table

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t exponent_ = 1;
  std::uint64_t hash_ = 0;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> cayley_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> lookup_;
};

struct FiniteGroup::Embedded {
  FiniteGroup group;
  std::vector<ElementIndex> to_parent;
};

// Smallest subgroup containing `seed`. The returned generators are the seed
// elements that were not already in the span of their predecessors.
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const ElementIndex> seed);

// <S, x> for a subgroup S, built coset by coset.
Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& s, ElementIndex x);

Subgroup cyclic_subgroup(const FiniteGroup& g, ElementIndex x);

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// Conjugacy classes, sorted by (size, smallest member). Same data as
// FiniteGroup::classes(); exposed as an operation for symmetry with the
// other group_core calls.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

// Largest subgroup of h normal in `ambient` (default: the whole group).
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_core_free(const FiniteGroup& g, const Subgroup& h);
bool is_core_free(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);

// True when members form a subgroup (identity, products, inverses).
bool is_closed_subset(const FiniteGroup& g, const ElementSet& members);

}  // namespace sglab

#endif
