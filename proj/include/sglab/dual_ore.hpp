#ifndef SGLAB_DUAL_ORE_HPP
#define SGLAB_DUAL_ORE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sglab/catalog.hpp"
#include "sglab/characters.hpp"
#include "sglab/lattice.hpp"

namespace sglab {

// Character tables of lattice nodes, built on demand. Every node K is
// rebuilt as a standalone group; all tables share the prime of the whole
// group's table so that induction and restriction stay in one field.
class TableCache {
public:
  struct Entry {
    FiniteGroup::Embedded embedded;
    std::vector<ElementIndex> local_of;  // parent index -> local index, or npos
    CharacterTable table;
  };
  static constexpr ElementIndex npos = static_cast<ElementIndex>(-1);

  explicit TableCache(const SubgroupLattice& l, TableOptions options = {});

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const Entry& get(NodeIndex k);
  const CharacterTable& table(NodeIndex k) { return get(k).table; }
  const CharacterTable& root() { return table(lattice_->top()); }
  std::size_t built() const noexcept { return entries_.size(); }

  // Node n <= k as a subgroup of k's standalone group.
  Subgroup local_subgroup(NodeIndex k, NodeIndex n);

  // dim V^N for a class function of node k and a node n <= k.
  std::size_t fixed_dim(NodeIndex k, std::span<const Residue> chi, NodeIndex n);

  // Pointwise stabilizer K_(V^H) through the lattice: the largest node N in
  // [h, k] with dim V^N = dim V^H. Every such node lies below it because
  // V^{A v B} = V^A meet V^B; a node that does not throws
  // Error(InternalInconsistency).
  NodeIndex stabilizer(NodeIndex k, std::span<const Residue> chi, NodeIndex h);
  // Same for a class function of an ambient node a, searched inside [h, k]
  // with k <= a: the stabilizer of V^H in K for V restricted to K.
  NodeIndex stabilizer(NodeIndex a, std::span<const Residue> chi, NodeIndex h, NodeIndex k);

private:
  const SubgroupLattice* lattice_;
  TableOptions options_;
  std::map<NodeIndex, std::unique_ptr<Entry>> entries_;
};

struct LinearPrimitivityWitness {
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  std::size_t row = 0;        // irreducible of the top, in its table order
  std::size_t fixed_dim = 0;  // dim V^H
  bool verified = false;      // element-scan stabilizer was run and agrees
};

// First irreducible row chi of T_K with K_(V^H) = H, scanning in table
// order. With cross_check the witness is recomputed by element scan; a
// disagreement throws Error(InternalInconsistency). Throws
// Error(HNotContained) when h is not below k.
std::optional<LinearPrimitivityWitness> interval_linearly_primitive(TableCache& cache, NodeIndex h, NodeIndex k,
                                                                    bool cross_check = true);

// First row with trivial kernel.
std::optional<std::size_t> group_linearly_primitive(const FiniteGroup& g, const CharacterTable& t);

struct DualOreRecord {
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  bool boolean = false;
  bool distributive = false;
  LinearPrimitivityWitness witness;
};

struct DualOreReport {
  std::vector<DualOreRecord> intervals;  // bottom-Boolean intervals only
  std::size_t intervals_scanned = 0;
  std::size_t bottom_boolean = 0;
  std::size_t distributive = 0;
  std::size_t cross_checked = 0;
};

// Every bottom-Boolean interval must be linearly primitive; otherwise
// Error(TheoremViolation) naming the interval.
DualOreReport verify_dual_ore(TableCache& cache, std::size_t triple_scan_cap = kDefaultTripleScanCap,
                              bool cross_check = true);

struct BottomLiftRecord {
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  NodeIndex bottom_interval_top = 0;
  bool bottom_interval_primitive = false;
  bool interval_primitive = false;
};

struct BottomLiftReport {
  std::vector<BottomLiftRecord> samples;
  std::size_t nonvacuous = 0;
};

// For each (h, k): if [h, b] is linearly primitive, b the join of the atoms
// of [h, k], then so is [h, k]. An empty sample means every non-degenerate
// interval. Throws Error(TheoremViolation).
BottomLiftReport verify_bottom_lift(TableCache& cache, const std::vector<std::pair<NodeIndex, NodeIndex>>& sample = {});

struct FaithfulComponents {
  std::size_t m = 0;
  std::vector<std::size_t> rows;
};

// Smallest set of irreducibles whose kernels meet trivially; ties go to the
// lexicographically smallest row set.
FaithfulComponents min_faithful_components(const FiniteGroup& g, const CharacterTable& t);

struct ChainBoundReport {
  FaithfulComponents components;
  ChainWitness bottom_boolean;  // from the trivial subgroup
  ChainWitness distributive;
  ChainWitness core_free;  // bottom Boolean, first node core-free in the second
  bool holds = false;
};

// m <= l_bottom_boolean <= l_distributive, and m <= l_core_free. Throws
// Error(TheoremViolation) when any of these fails.
ChainBoundReport chain_bound_check(const SubgroupLattice& l, const CharacterTable& t,
                                std::size_t triple_scan_cap = kDefaultTripleScanCap);

struct InductionReport {
  std::size_t chains = 0;      // (H, K) pairs visited
  std::size_t hypotheses = 0;  // (H, K, u) with K_(U^H) = H and U^H != 0
  std::size_t components = 0;  // irreducible components V checked
  std::size_t skipped_large = 0;
};

// For H <= K with |K| <= order_cap and every irreducible u of K with
// U^H != 0 and K_(U^H) = H: W = Ind_K^G u has G_(W^H) = H, and every
// irreducible component V of W has K_(V^H) = H. Throws
// Error(TheoremViolation).
InductionReport induction_stabilizer_suite(TableCache& cache, std::size_t order_cap = 200);

// The same check for one (h, k, row); rows whose stabilizer is not h are
// skipped without counting.
void check_induction_stabilizer(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t row, InductionReport& report);

struct SurveyRecord {
  std::string name;
  std::string family;
  std::size_t order = 0;
  std::size_t nodes = 0;
  std::optional<std::size_t> primitive_row;  // faithful irreducible
  std::optional<NodeIndex> core_free_node;   // core-free H with [H, G] bottom Boolean
  std::vector<std::string> core_free_generators;
  std::size_t core_free_order = 0;
  bool verdict = false;
  std::optional<std::string> skipped;  // error text when the group was not surveyed
  double seconds = 0;
};

struct IsomorphicLatticePair {
  bool lattices_isomorphic = false;
  bool first_primitive = false;   // M4(2)
  bool second_primitive = false;  // C8 x C2
};

struct SurveyReport {
  std::size_t bound = 0;
  std::vector<std::string> families;
  std::vector<SurveyRecord> records;
  std::size_t surveyed = 0;
  std::size_t skipped = 0;
  std::size_t primitive = 0;
  std::size_t verdict_true = 0;
  bool all_true = false;
  IsomorphicLatticePair lattice_pair;
};

struct SurveyOptions {
  std::size_t order_limit = kDefaultOrderLimit;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t triple_scan_cap = kDefaultTripleScanCap;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
};

// One group: is it linearly primitive, and is there a core-free H with
// [H, G] bottom Boolean (first such node in lattice order)?
SurveyRecord survey_group(const catalog::Entry& entry, const SurveyOptions& options);

// primitivity_survey over catalog::sweep(bound, families), plus the
// M4(2) / C8 x C2 pair.
SurveyReport primitivity_survey(std::size_t bound, const std::vector<std::string>& families,
                             const SurveyOptions& options = {});

}  // namespace sglab

#endif
