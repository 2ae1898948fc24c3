#ifndef SGLAB_LEMMAS_HPP
#define SGLAB_LEMMAS_HPP

#include <cstddef>
#include <map>
#include <string>

#include "sglab/dual_ore.hpp"

namespace sglab {

// Dimension-level and representation-level invariants checked on a sample
// (H <= K, chi irreducible of K). Each name counts how often the property
// was checked and how often its hypothesis was actually met.
//
//   fixed_space_antitone      H <= N <= M <= K  =>  dim V^M <= dim V^N
//   stabilizer_contains       H <= K_(V^H)
//   stabilizer_fixed_space    dim V^{K_(V^H)} = dim V^H
//   strict_drop_excluded      H <= N, dim V^N < dim V^H  =>  N not in K_(V^H)
//   stabilizer_routes_agree   element scan and lattice search give one subgroup
//   nontrivial_fixed_vector   H < K  =>  some nontrivial irreducible has V^H != 0
//   index_identity            |K:H| = sum deg(V) dim V^H
//   frobenius_reciprocity     <chi, Ind u> = <Res chi, u> for u irreducible of H
//   induction_stabilizer      S = K_(V^H), V^H != 0: Ind_K^G chi and its
//                             components keep stabilizer S
//   maximal_primitive         [H, M] with M <= K covering H is linearly
//                             primitive
//   bottom_interval_lift      [H, join of atoms] primitive => [H, K] primitive
//   distributive_boolean_ends distributive [H, K] => top and bottom Boolean
struct LemmaTally {
  std::size_t checked = 0;
  std::size_t nonvacuous = 0;
};

struct LemmaReport {
  std::size_t samples = 0;
  std::map<std::string, LemmaTally> lemmas;
};

// Throws Error(TheoremViolation) naming the property and the sample.
void check_lemma_sample(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t row, LemmaReport& report,
                        std::size_t triple_scan_cap = kDefaultTripleScanCap);

// Every H <= K in the lattice and every irreducible of K.
LemmaReport lemma_suite(TableCache& cache, std::size_t triple_scan_cap = kDefaultTripleScanCap);

}  // namespace sglab

#endif
