#ifndef SGLAB_CHARACTERS_HPP
#define SGLAB_CHARACTERS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sglab/group.hpp"
#include "sglab/modp.hpp"

namespace sglab {

// a(i, j, k): number of pairs (x, y) in C_i x C_j with x * y equal to the
// representative of C_k.
class StructureConstants {
public:
  StructureConstants(std::size_t r) : r_(r), data_(r * r * r, 0) {}
  std::size_t classes() const noexcept { return r_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }

private:
  std::size_t r_;
  std::vector<std::uint64_t> data_;
};

StructureConstants class_structure_constants(const FiniteGroup& g);

// Irreducible characters reduced into GF(p), p = 1 mod exponent and
// p > 2|G|. Rows sorted by (degree, lifted value vector); row 0 is trivial.
// The table carries the class data it needs, so it does not reference the
// group it came from.
struct CharacterTable {
  std::size_t group_order = 0;
  std::size_t exponent = 1;
  std::uint32_t prime = 2;
  Residue omega = 1;  // primitive exponent-th root of unity
  std::vector<std::size_t> class_sizes;
  std::vector<ElementIndex> class_reps;
  std::vector<std::size_t> inverse_class;
  std::vector<std::size_t> class_of;  // per element
  std::vector<std::vector<Residue>> values;
  std::vector<std::size_t> degrees;

  std::size_t size() const noexcept { return values.size(); }
  PrimeField field() const { return PrimeField(prime); }
};

struct TableOptions {
  // Characteristic to compute in; defaults to the smallest admissible prime.
  // Tables of subgroups are computed over their parent's prime so that
  // restriction and induction stay inside one field.
  std::optional<std::uint32_t> prime;
  // Seed for the random class-algebra combinations; defaults to the group
  // hash. The finished table does not depend on it.
  std::optional<std::uint64_t> seed;
};

// Dixon's method. Throws Error(InternalInconsistency) if the result fails
// its own orthogonality checks.
CharacterTable character_table(const FiniteGroup& g, const TableOptions& options = {});

struct TableChecks {
  bool degree_square_sum = false;
  bool class_count = false;
  bool degrees_divide_order = false;
  bool row_orthogonality = false;
  bool column_orthogonality = false;
  bool trivial_first = false;
  bool all() const noexcept {
    return degree_square_sum && class_count && degrees_divide_order && row_orthogonality && column_orthogonality &&
           trivial_first;
  }
};
TableChecks check_table(const CharacterTable& t);

// Class function on a group, values per class in GF(p).
struct CharacterVector {
  std::vector<Residue> values;
  std::size_t degree = 0;  // value at the identity, lifted
};

CharacterVector row_vector(const CharacterTable& t, std::size_t row);
CharacterVector make_vector(const CharacterTable& t, std::vector<Residue> values);

// Residue x read as an integer in [0, max]; Error(LiftOutOfRange) otherwise.
std::size_t lift(Residue x, std::size_t max);

// dim V^K = (1/|K|) sum_{k in K} chi(k), lifted into [0, deg chi].
std::size_t fixed_dim(const CharacterTable& t, std::span<const Residue> chi, const Subgroup& k);
std::size_t fixed_dim(const CharacterTable& t, std::size_t row, const Subgroup& k);

// {g : dim V^<H, g> = dim V^H} by element scan. Throws Error(NotASubgroup)
// if the scan does not produce a subgroup.
Subgroup pointwise_stabilizer(const FiniteGroup& g, const CharacterTable& t, std::span<const Residue> chi,
                              const Subgroup& h);

// {g : dim V^<g> = deg chi}, evaluated per class.
Subgroup kernel(const FiniteGroup& g, const CharacterTable& t, std::size_t row);
Subgroup kernel(const FiniteGroup& g, const CharacterTable& t, std::span<const Residue> chi);

// (1/|G|) sum_j |C_j| a(g_j) b(g_j^-1), lifted into [0, p/2].
std::size_t inner_product(const CharacterTable& t, std::span<const Residue> a, std::span<const Residue> b);

// Multiplicity of every irreducible in a class function.
std::vector<std::size_t> decompose(const CharacterTable& t, std::span<const Residue> chi);

// K is given by `to_parent`, the G-index of each element of K's own group
// (FiniteGroup::Embedded::to_parent, or a composition of such maps).

// Restriction of a G-class function to K's classes.
CharacterVector restrict_character(const CharacterTable& table_g, std::span<const Residue> chi,
                                   std::span<const ElementIndex> to_parent, const CharacterTable& table_k);

// Ind_K^G(u): at a G-class c, |G| / (|K| |c|) * sum of u over K-elements in c.
CharacterVector induced_character(const CharacterTable& table_g, std::span<const ElementIndex> to_parent,
                                  const CharacterTable& table_k, std::span<const Residue> u);

// <chi, Ind u>_G == <Res chi, u>_K.
bool frobenius_check(const CharacterTable& table_g, std::span<const ElementIndex> to_parent,
                     const CharacterTable& table_k, std::span<const Residue> u, std::span<const Residue> chi);

// |G : H| == sum_i deg(chi_i) dim(V_i^H).
bool index_identity_check(const CharacterTable& t, const Subgroup& h);

// Character of the defining permutation action (fixed-point counts).
CharacterVector permutation_character(const FiniteGroup& g, const CharacterTable& t);
CharacterVector regular_character(const CharacterTable& t);

// Number of orbits of the group on its points.
std::size_t orbit_count(const FiniteGroup& g);

}  // namespace sglab

#endif
