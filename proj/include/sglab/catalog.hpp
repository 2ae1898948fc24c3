#ifndef SGLAB_CATALOG_HPP
#define SGLAB_CATALOG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sglab/group.hpp"

namespace sglab::catalog {

GroupSpec trivial();
GroupSpec cyclic(std::size_t n);
// Dihedral group of the given order (2n), acting on an n-gon for n >= 3.
GroupSpec dihedral(std::size_t order);
// Dicyclic group of order 4n, <a, x | a^2n = e, x^2 = a^n, x a x^-1 = a^-1>,
// in its right regular action. Order 8 gives Q8, order 16 gives Q16.
GroupSpec dicyclic(std::size_t order);
GroupSpec symmetric(std::size_t n);
GroupSpec alternating(std::size_t n);
GroupSpec elementary_abelian(std::size_t p, std::size_t k);
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);
// Modular maximal-cyclic group <a, b | a^8 = b^2 = e, b a b^-1 = a^5> on 16
// points via the right regular action.
GroupSpec m4_2();
GroupSpec c8xc2();

// Parses names like "C6", "D16", "Q16", "Dic12", "S4", "A5", "C2^3", "M4(2)",
// "C8xC2", "S3xC3", "1". Throws Error(MalformedSpec).
GroupSpec by_name(const std::string& name);

struct Entry {
  std::string family;  // cyclic, dihedral, dicyclic, symmetric, alternating, abelian, product, special
  std::size_t order = 0;
  GroupSpec spec;
};

// Fixed built-in collection, sorted by (order, family, name). Families listed
// in `families` filter the result; empty means all.
std::vector<Entry> sweep(std::size_t order_bound, const std::vector<std::string>& families = {});

}  // namespace sglab::catalog

#endif
