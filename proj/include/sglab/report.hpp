#ifndef SGLAB_REPORT_HPP
#define SGLAB_REPORT_HPP

#include <json.hpp>

#include "sglab/dual_ore.hpp"
#include "sglab/lemmas.hpp"
#include "sglab/ore.hpp"

namespace sglab::report {

using nlohmann::json;

inline constexpr int kSchema = 1;

json group(const FiniteGroup& g);
json subgroup(const FiniteGroup& g, const Subgroup& s);
json element(const FiniteGroup& g, ElementIndex x);

json classification(const IntervalClass& c);
json chain(const ChainWitness& w);
json ore_witness(const SubgroupLattice& l, const OreWitness& w);

// Nodes, Hasse covers, and a classification record for every interval.
json lattice(const SubgroupLattice& l, std::size_t triple_scan_cap, bool intervals);

json table(const CharacterTable& t, const FiniteGroup& g);

// Everything known about one interval [h, k]: classification, both Ore
// constructions where they apply, and the linear-primitivity witness.
json interval(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t triple_scan_cap);

json ore(const SubgroupLattice& l, const OreReport& r);
json dual_ore(const DualOreReport& r);
json bottom_lift(const BottomLiftReport& r);
json chain_bounds(const ChainBoundReport& r);
json induction(const InductionReport& r);
json lemmas(const LemmaReport& r);
json faithful(const FaithfulComponents& f);

// Timing is left out unless asked for, so reports are byte-identical
// across runs.
json survey(const SurveyReport& r, bool timing);

}  // namespace sglab::report

#endif
