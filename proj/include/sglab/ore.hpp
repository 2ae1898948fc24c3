#ifndef SGLAB_ORE_HPP
#define SGLAB_ORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sglab/lattice.hpp"

namespace sglab {

enum class WitnessMethod { Brute, BooleanRecursive, TopReduction };
const char* to_string(WitnessMethod m) noexcept;

// g with <H, g> equal to the top of the interval.
struct OreWitness {
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  ElementIndex element = 0;
  WitnessMethod method = WitnessMethod::Brute;
};

// Recomputes <H, g> from the group and compares with the top.
bool validate(const SubgroupLattice& l, const OreWitness& w);

// Smallest-index g in the top with <H, g> = top, if any.
std::optional<OreWitness> hcyclic_witness(const Interval& i);

// Recursive construction on a Boolean interval: rank 1 takes the smallest
// element outside the bottom; rank n combines witnesses a for the smallest
// coatom M and b for its complement as g = a * b. Throws Error(NotBoolean).
OreWitness boolean_witness_construct(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

// Witness of the top interval [K, G], reused for [H, G]. Throws
// Error(NotTopBoolean).
OreWitness top_reduction_witness(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

struct OreIntervalRecord {
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  IntervalClass classification;
  std::optional<OreWitness> brute;
  std::optional<OreWitness> reduction;  // present iff top Boolean
};

struct OreReport {
  std::vector<OreIntervalRecord> intervals;  // every non-degenerate interval
  std::size_t top_boolean_count = 0;
  std::size_t hcyclic_count = 0;
  std::size_t hcyclic_not_top_boolean = 0;
};

// Every top-Boolean interval must yield valid witnesses from both the brute
// force scan and the top reduction; anything else throws
// Error(TheoremViolation) naming the interval.
OreReport verify_ore(const SubgroupLattice& l, std::size_t triple_scan_cap = kDefaultTripleScanCap);

}  // namespace sglab

#endif
