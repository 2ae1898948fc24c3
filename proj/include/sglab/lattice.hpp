#ifndef SGLAB_LATTICE_HPP
#define SGLAB_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sglab/group.hpp"

namespace sglab {

using NodeIndex = std::size_t;
using NodeSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultNodeCap = 20000;
inline constexpr std::size_t kDefaultTripleScanCap = 256;

// All subgroups of a group, sorted by (order, member list lexicographic),
// with the inclusion order stored as up-set and down-set bitsets.
// The lattice keeps a pointer to its group; the group must outlive it.
class SubgroupLattice {
public:
  // Seeds with the cyclic subgroups and closes under joins layer by layer.
  // Throws Error(NodeCapExceeded) past node_cap subgroups.
  static SubgroupLattice enumerate(const FiniteGroup& g, std::size_t node_cap = kDefaultNodeCap);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& node(NodeIndex i) const { return nodes_[i]; }
  const std::vector<Subgroup>& nodes() const noexcept { return nodes_; }
  NodeIndex bottom() const noexcept { return 0; }
  NodeIndex top() const noexcept { return nodes_.size() - 1; }

  bool leq(NodeIndex a, NodeIndex b) const { return up_[a].test(b); }
  const NodeSet& up_set(NodeIndex a) const { return up_[a]; }
  const NodeSet& down_set(NodeIndex a) const { return down_[a]; }

  NodeIndex meet(NodeIndex a, NodeIndex b) const;
  NodeIndex join(NodeIndex a, NodeIndex b) const;

  std::optional<NodeIndex> index_of(const Subgroup& s) const;
  std::optional<NodeIndex> index_of(const ElementSet& members) const;
  // Node of the cyclic subgroup generated by element g.
  NodeIndex cyclic_node(ElementIndex g) const { return cyclic_node_[g]; }

  const std::vector<NodeIndex>& upper_covers(NodeIndex a) const { return upper_covers_[a]; }
  const std::vector<NodeIndex>& lower_covers(NodeIndex a) const { return lower_covers_[a]; }

  // Re-checks closure under intersection and join against the group.
  bool verify_closure() const;

private:
  const FiniteGroup* group_ = nullptr;
  std::vector<Subgroup> nodes_;
  std::unordered_map<ElementSet, NodeIndex> index_;
  std::vector<NodeSet> up_;
  std::vector<NodeSet> down_;
  std::vector<NodeIndex> cyclic_node_;
  std::vector<std::vector<NodeIndex>> upper_covers_;
  std::vector<std::vector<NodeIndex>> lower_covers_;
  std::vector<std::uint32_t> meet_table_;  // filled for small lattices only
  std::vector<std::uint32_t> join_table_;
};

// Subgroup meet and join as group operations.
Subgroup meet(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// [bottom, top] inside a lattice; members sorted by node index.
struct Interval {
  const SubgroupLattice* lattice = nullptr;
  NodeIndex bottom = 0;
  NodeIndex top = 0;
  std::vector<NodeIndex> members;

  std::size_t size() const noexcept { return members.size(); }
  bool degenerate() const noexcept { return bottom == top; }
};

// Throws Error(HNotContained) when bottom is not below top.
Interval make_interval(const SubgroupLattice& l, NodeIndex bottom, NodeIndex top);
Interval whole_lattice(const SubgroupLattice& l);

// Elements covering the bottom / covered by the top. A two-node interval has
// the top as its only atom and the bottom as its only coatom.
// Throws Error(DegenerateInterval) when bottom == top.
std::vector<NodeIndex> atoms(const Interval& i);
std::vector<NodeIndex> coatoms(const Interval& i);

// Definitional triple scan up to `triple_scan_cap` members; larger intervals
// use the join-irreducible embedding test, which decides the same property.
bool is_distributive(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

struct BooleanInfo {
  bool boolean = false;
  std::size_t rank = 0;
  // complement[k] pairs with members[k]; empty unless boolean.
  std::vector<NodeIndex> complement;
};
BooleanInfo boolean_info(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);
bool is_boolean(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

Interval top_interval(const Interval& i);
Interval bottom_interval(const Interval& i);
bool is_top_boolean(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);
bool is_bottom_boolean(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

struct IntervalClass {
  bool distributive = false;
  bool boolean = false;
  std::size_t rank = 0;  // meaningful when boolean
  bool top_boolean = false;
  bool bottom_boolean = false;
  NodeIndex top_interval_bottom = 0;  // meet of the coatoms
  NodeIndex bottom_interval_top = 0;  // join of the atoms
};
// All of the above in one pass. Requires a non-degenerate interval.
IntervalClass classify(const Interval& i, std::size_t triple_scan_cap = kDefaultTripleScanCap);

// Both modular-pair conditions against every element of the lattice.
bool is_modular_element(const SubgroupLattice& l, NodeIndex x);

// True certifies that h is core-free using the lattice alone: no K with
// 1 < K <= h is a modular element. False is inconclusive. Throws
// Error(DegenerateInterval) for the trivial subgroup.
bool combinatorial_core_free(const SubgroupLattice& l, NodeIndex h);

enum class ChainFlavor { Distributive, BottomBoolean };
enum class ChainStart { Trivial, CoreFree };

const char* to_string(ChainFlavor f) noexcept;
const char* to_string(ChainStart s) noexcept;

struct ChainStep {
  bool distributive = false;
  bool bottom_boolean = false;
};

struct ChainWitness {
  ChainFlavor flavor = ChainFlavor::Distributive;
  ChainStart start = ChainStart::Trivial;
  std::vector<NodeIndex> nodes;  // strictly increasing chain ending at the top
  std::vector<ChainStep> steps;  // one per consecutive pair
  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Shortest chain ending at the whole group whose consecutive intervals have
// the flavor. Trivial start: first node is the trivial subgroup. Core-free
// start: first node is any H0 that is core-free in the second node. Ties go
// to the lexicographically smallest node sequence.
ChainWitness min_chain(const SubgroupLattice& l, ChainFlavor flavor, ChainStart start,
                       std::size_t triple_scan_cap = kDefaultTripleScanCap);

// Order isomorphism by backtracking over nodes with matching structural
// invariants. Returns the map from l1 nodes to l2 nodes when one exists.
std::optional<std::vector<NodeIndex>> lattice_isomorphism(const SubgroupLattice& l1, const SubgroupLattice& l2);

}  // namespace sglab

#endif
