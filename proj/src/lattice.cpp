#include "sglab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

#include "sglab/error.hpp"

namespace sglab {

namespace {

constexpr std::size_t kTableLimit = 1024;

// a < b in (order, member list lexicographic).
bool node_less(const Subgroup& a, const Subgroup& b) {
  std::size_t oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  ElementSet diff = a.members() ^ b.members();
  auto first = diff.find_first();
  if (first == ElementSet::npos) return false;
  return a.members().test(first);
}

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(const FiniteGroup& g, std::size_t node_cap) {
  SubgroupLattice l;
  l.group_ = &g;
  const std::size_t n = g.order();

  std::vector<Subgroup> nodes;
  std::unordered_map<ElementSet, NodeIndex> index;
  auto add = [&](Subgroup s) -> std::pair<NodeIndex, bool> {
    auto [it, inserted] = index.try_emplace(s.members(), nodes.size());
    if (inserted) {
      if (nodes.size() >= node_cap)
        throw Error(ErrorKind::NodeCapExceeded, "subgroup lattice of '" + g.name() + "' exceeds node cap " +
                                                    std::to_string(node_cap));
      nodes.push_back(std::move(s));
    }
    return {it->second, inserted};
  };

  add(g.trivial());
  std::vector<NodeIndex> cyclic_of(n, 0);
  std::vector<std::pair<ElementIndex, NodeIndex>> cyclics;  // one generator per cyclic subgroup
  for (ElementIndex x = 1; x < n; ++x) {
    auto [node, fresh] = add(cyclic_subgroup(g, x));
    cyclic_of[x] = node;
    if (fresh) cyclics.emplace_back(x, node);
  }

  std::vector<NodeIndex> frontier;
  for (const auto& c : cyclics) frontier.push_back(c.second);
  while (!frontier.empty()) {
    std::vector<NodeIndex> next;
    for (NodeIndex s : frontier) {
      const Subgroup base = nodes[s];
      for (const auto& [x, cnode] : cyclics) {
        if (base.contains(x)) continue;
        auto [node, fresh] = add(extend_subgroup(g, base, x));
        if (fresh) next.push_back(node);
      }
    }
    frontier = std::move(next);
  }

  std::vector<NodeIndex> order(nodes.size());
  for (NodeIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return node_less(nodes[a], nodes[b]); });
  std::vector<NodeIndex> rank_of(nodes.size());
  for (NodeIndex r = 0; r < order.size(); ++r) rank_of[order[r]] = r;

  for (NodeIndex r = 0; r < order.size(); ++r) l.nodes_.push_back(std::move(nodes[order[r]]));
  for (NodeIndex i = 0; i < l.nodes_.size(); ++i) l.index_.emplace(l.nodes_[i].members(), i);
  l.cyclic_node_.resize(n);
  for (ElementIndex x = 0; x < n; ++x) l.cyclic_node_[x] = rank_of[cyclic_of[x]];

  const std::size_t m = l.nodes_.size();
  l.up_.assign(m, NodeSet(m));
  l.down_.assign(m, NodeSet(m));
  std::vector<std::size_t> orders(m);
  for (NodeIndex i = 0; i < m; ++i) orders[i] = l.nodes_[i].order();
  for (NodeIndex i = 0; i < m; ++i) {
    l.up_[i].set(i);
    l.down_[i].set(i);
    for (NodeIndex j = i + 1; j < m; ++j) {
      if (orders[j] == orders[i] || orders[j] % orders[i]) continue;
      if (l.nodes_[i].is_subgroup_of(l.nodes_[j])) {
        l.up_[i].set(j);
        l.down_[j].set(i);
      }
    }
  }

  l.upper_covers_.assign(m, {});
  l.lower_covers_.assign(m, {});
  for (NodeIndex i = 0; i < m; ++i) {
    for (auto j = l.up_[i].find_next(i); j != NodeSet::npos; j = l.up_[i].find_next(j)) {
      if ((l.up_[i] & l.down_[j]).count() == 2) {
        l.upper_covers_[i].push_back(j);
        l.lower_covers_[j].push_back(i);
      }
    }
  }

  if (m <= kTableLimit) {
    l.meet_table_.resize(m * m);
    l.join_table_.resize(m * m);
    for (NodeIndex a = 0; a < m; ++a) {
      for (NodeIndex b = a; b < m; ++b) {
        std::uint32_t mt = static_cast<std::uint32_t>(l.index_.at(l.nodes_[a].members() & l.nodes_[b].members()));
        std::uint32_t jt = static_cast<std::uint32_t>((l.up_[a] & l.up_[b]).find_first());
        l.meet_table_[a * m + b] = l.meet_table_[b * m + a] = mt;
        l.join_table_[a * m + b] = l.join_table_[b * m + a] = jt;
      }
    }
  }
  return l;
}

NodeIndex SubgroupLattice::meet(NodeIndex a, NodeIndex b) const {
  if (!meet_table_.empty()) return meet_table_[a * nodes_.size() + b];
  return index_.at(nodes_[a].members() & nodes_[b].members());
}

NodeIndex SubgroupLattice::join(NodeIndex a, NodeIndex b) const {
  if (!join_table_.empty()) return join_table_[a * nodes_.size() + b];
  // Nodes are sorted by order, so the least common upper bound comes first.
  return (up_[a] & up_[b]).find_first();
}

std::optional<NodeIndex> SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeIndex> SubgroupLattice::index_of(const Subgroup& s) const { return index_of(s.members()); }

bool SubgroupLattice::verify_closure() const {
  const FiniteGroup& g = *group_;
  for (NodeIndex a = 0; a < size(); ++a) {
    if (!is_closed_subset(g, nodes_[a].members())) return false;
    for (NodeIndex b = a + 1; b < size(); ++b) {
      auto m = index_of(nodes_[a].members() & nodes_[b].members());
      if (!m || *m != meet(a, b)) return false;
      Subgroup j = sglab::join(g, nodes_[a], nodes_[b]);
      auto jn = index_of(j);
      if (!jn || *jn != join(a, b)) return false;
    }
  }
  return true;
}

Subgroup meet(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) { return intersect(g, a, b); }

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  Subgroup out = a;
  for (ElementIndex x : b.generators()) out = extend_subgroup(g, out, x);
  if (b.generators().empty() && !b.is_trivial())
    for (ElementIndex x : b.elements()) out = extend_subgroup(g, out, x);
  return out;
}

Interval make_interval(const SubgroupLattice& l, NodeIndex bottom, NodeIndex top) {
  if (bottom >= l.size() || top >= l.size())
    throw Error(ErrorKind::HNotContained, "node index out of range");
  if (!l.leq(bottom, top))
    throw Error(ErrorKind::HNotContained,
                "node " + std::to_string(bottom) + " is not contained in node " + std::to_string(top));
  Interval i{&l, bottom, top, {}};
  NodeSet m = l.up_set(bottom) & l.down_set(top);
  for (auto x = m.find_first(); x != NodeSet::npos; x = m.find_next(x)) i.members.push_back(x);
  return i;
}

Interval whole_lattice(const SubgroupLattice& l) { return make_interval(l, l.bottom(), l.top()); }

std::vector<NodeIndex> atoms(const Interval& i) {
  if (i.degenerate()) throw Error(ErrorKind::DegenerateInterval, "interval has a single node");
  std::vector<NodeIndex> out;
  for (NodeIndex c : i.lattice->upper_covers(i.bottom))
    if (i.lattice->leq(c, i.top)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeIndex> coatoms(const Interval& i) {
  if (i.degenerate()) throw Error(ErrorKind::DegenerateInterval, "interval has a single node");
  std::vector<NodeIndex> out;
  for (NodeIndex c : i.lattice->lower_covers(i.top))
    if (i.lattice->leq(i.bottom, c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Interval with dense local meet/join tables over its members.
struct LocalLattice {
  const SubgroupLattice* lattice;
  std::vector<NodeIndex> members;
  std::unordered_map<NodeIndex, std::uint32_t> local_of;
  std::vector<std::uint32_t> meet;
  std::vector<std::uint32_t> join;

  explicit LocalLattice(const Interval& iv) : lattice(iv.lattice), members(iv.members) {
    const std::size_t m = members.size();
    for (std::uint32_t k = 0; k < m; ++k) local_of.emplace(members[k], k);
    meet.resize(m * m);
    join.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        std::uint32_t mt = local_of.at(lattice->meet(members[a], members[b]));
        std::uint32_t jt = local_of.at(lattice->join(members[a], members[b]));
        meet[a * m + b] = meet[b * m + a] = mt;
        join[a * m + b] = join[b * m + a] = jt;
      }
  }

  std::size_t size() const { return members.size(); }
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return meet[a * members.size() + b]; }
  std::uint32_t j(std::uint32_t a, std::uint32_t b) const { return join[a * members.size() + b]; }
  bool leq(std::uint32_t a, std::uint32_t b) const { return m(a, b) == a; }

  // Distributivity of the sublattice formed by `subset` (a convex
  // sub-interval, so meets and joins stay inside).
  bool distributive(const std::vector<std::uint32_t>& subset, std::size_t cap) const {
    if (subset.size() <= cap) {
      for (std::uint32_t a : subset)
        for (std::uint32_t b : subset)
          for (std::uint32_t c : subset)
            if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return false;
      return true;
    }
    // Join-irreducibles: exactly one lower cover inside the subset. The map
    // x -> {join-irreducibles below x} preserves joins iff distributive.
    std::vector<bool> in(size(), false);
    for (std::uint32_t x : subset) in[x] = true;
    std::vector<std::uint32_t> irreducible;
    for (std::uint32_t x : subset) {
      std::size_t covers = 0;
      for (NodeIndex c : lattice->lower_covers(members[x])) {
        auto it = local_of.find(c);
        if (it != local_of.end() && in[it->second]) ++covers;
      }
      if (covers == 1) irreducible.push_back(x);
    }
    for (std::uint32_t a : subset)
      for (std::uint32_t b : subset) {
        std::uint32_t ab = j(a, b);
        for (std::uint32_t q : irreducible)
          if (leq(q, ab) && !leq(q, a) && !leq(q, b)) return false;
      }
    return true;
  }

  // Complement of each subset element relative to (lo, hi), or -1.
  std::vector<std::int64_t> complements(const std::vector<std::uint32_t>& subset, std::uint32_t lo,
                                        std::uint32_t hi) const {
    std::vector<std::int64_t> out;
    for (std::uint32_t x : subset) {
      std::int64_t found = -1;
      for (std::uint32_t y : subset)
        if (m(x, y) == lo && j(x, y) == hi) {
          found = y;
          break;
        }
      out.push_back(found);
    }
    return out;
  }

  bool boolean(const std::vector<std::uint32_t>& subset, std::uint32_t lo, std::uint32_t hi, std::size_t cap,
               std::size_t* rank = nullptr) const {
    if (!distributive(subset, cap)) return false;
    for (std::int64_t c : complements(subset, lo, hi))
      if (c < 0) return false;
    if (rank) {
      std::size_t r = 0;
      while ((std::size_t{1} << r) < subset.size()) ++r;
      *rank = r;
    }
    return true;
  }

  std::vector<std::uint32_t> all() const {
    std::vector<std::uint32_t> v(size());
    for (std::uint32_t k = 0; k < v.size(); ++k) v[k] = k;
    return v;
  }
  std::vector<std::uint32_t> above(std::uint32_t t) const {
    std::vector<std::uint32_t> v;
    for (std::uint32_t k = 0; k < size(); ++k)
      if (leq(t, k)) v.push_back(k);
    return v;
  }
  std::vector<std::uint32_t> below(std::uint32_t b) const {
    std::vector<std::uint32_t> v;
    for (std::uint32_t k = 0; k < size(); ++k)
      if (leq(k, b)) v.push_back(k);
    return v;
  }
};

}  // namespace

bool is_distributive(const Interval& i, std::size_t triple_scan_cap) {
  if (i.size() <= 2) return true;
  LocalLattice loc(i);
  return loc.distributive(loc.all(), triple_scan_cap);
}

BooleanInfo boolean_info(const Interval& i, std::size_t triple_scan_cap) {
  BooleanInfo info;
  if (i.size() == 1) {
    info.boolean = true;
    info.complement = {i.bottom};
    return info;
  }
  LocalLattice loc(i);
  const std::uint32_t lo = loc.local_of.at(i.bottom), hi = loc.local_of.at(i.top);
  auto subset = loc.all();
  if (!loc.distributive(subset, triple_scan_cap)) return info;
  auto comp = loc.complements(subset, lo, hi);
  for (std::int64_t c : comp)
    if (c < 0) return info;
  info.boolean = true;
  info.rank = atoms(i).size();
  for (std::int64_t c : comp) info.complement.push_back(loc.members[static_cast<std::size_t>(c)]);
  return info;
}

bool is_boolean(const Interval& i, std::size_t triple_scan_cap) { return boolean_info(i, triple_scan_cap).boolean; }

Interval top_interval(const Interval& i) {
  std::vector<NodeIndex> cs = coatoms(i);
  NodeIndex t = cs.front();
  for (NodeIndex c : cs) t = i.lattice->meet(t, c);
  return make_interval(*i.lattice, t, i.top);
}

Interval bottom_interval(const Interval& i) {
  std::vector<NodeIndex> as = atoms(i);
  NodeIndex b = as.front();
  for (NodeIndex a : as) b = i.lattice->join(b, a);
  return make_interval(*i.lattice, i.bottom, b);
}

bool is_top_boolean(const Interval& i, std::size_t triple_scan_cap) {
  return is_boolean(top_interval(i), triple_scan_cap);
}

bool is_bottom_boolean(const Interval& i, std::size_t triple_scan_cap) {
  return is_boolean(bottom_interval(i), triple_scan_cap);
}

IntervalClass classify(const Interval& i, std::size_t triple_scan_cap) {
  if (i.degenerate()) throw Error(ErrorKind::DegenerateInterval, "interval has a single node");
  IntervalClass out;
  const SubgroupLattice& l = *i.lattice;

  NodeIndex t = i.top, b = i.bottom;
  bool first = true;
  for (NodeIndex c : coatoms(i)) {
    t = first ? c : l.meet(t, c);
    first = false;
  }
  first = true;
  for (NodeIndex a : atoms(i)) {
    b = first ? a : l.join(b, a);
    first = false;
  }
  out.top_interval_bottom = t;
  out.bottom_interval_top = b;

  if (i.size() == 2) {
    out.distributive = out.boolean = out.top_boolean = out.bottom_boolean = true;
    out.rank = 1;
    return out;
  }

  LocalLattice loc(i);
  const std::uint32_t lo = loc.local_of.at(i.bottom), hi = loc.local_of.at(i.top);
  auto all = loc.all();
  out.distributive = loc.distributive(all, triple_scan_cap);
  if (out.distributive) {
    auto comp = loc.complements(all, lo, hi);
    out.boolean = std::all_of(comp.begin(), comp.end(), [](std::int64_t c) { return c >= 0; });
  }
  if (out.boolean) {
    out.rank = atoms(i).size();
    out.top_boolean = out.bottom_boolean = true;
    return out;
  }
  const std::uint32_t tl = loc.local_of.at(t), bl = loc.local_of.at(b);
  out.top_boolean = loc.boolean(loc.above(tl), tl, hi, triple_scan_cap);
  out.bottom_boolean = loc.boolean(loc.below(bl), lo, bl, triple_scan_cap);
  return out;
}

bool is_modular_element(const SubgroupLattice& l, NodeIndex x) {
  const std::size_t n = l.size();
  for (NodeIndex b = 0; b < n; ++b) {
    const NodeIndex xb = l.meet(x, b);
    const NodeSet& below_b = l.down_set(b);
    for (auto a = below_b.find_first(); a != NodeSet::npos; a = below_b.find_next(a))
      if (l.join(a, xb) != l.meet(l.join(a, x), b)) return false;
  }
  const NodeSet& above_x = l.up_set(x);
  for (auto b = above_x.find_first(); b != NodeSet::npos; b = above_x.find_next(b))
    for (NodeIndex a = 0; a < n; ++a)
      if (l.join(x, l.meet(a, b)) != l.meet(l.join(x, a), b)) return false;
  return true;
}

bool combinatorial_core_free(const SubgroupLattice& l, NodeIndex h) {
  if (h == l.bottom()) throw Error(ErrorKind::DegenerateInterval, "combinatorial core-freeness needs a nontrivial subgroup");
  const NodeSet& below = l.down_set(h);
  for (auto k = below.find_first(); k != NodeSet::npos; k = below.find_next(k)) {
    if (k == l.bottom()) continue;
    if (is_modular_element(l, k)) return false;
  }
  return true;
}

const char* to_string(ChainFlavor f) noexcept {
  return f == ChainFlavor::Distributive ? "distributive" : "bottom_boolean";
}

const char* to_string(ChainStart s) noexcept { return s == ChainStart::Trivial ? "trivial" : "core_free"; }

ChainWitness min_chain(const SubgroupLattice& l, ChainFlavor flavor, ChainStart start, std::size_t triple_scan_cap) {
  const std::size_t n = l.size();
  ChainWitness w;
  w.flavor = flavor;
  w.start = start;
  if (n == 1) {
    w.nodes = {0};
    return w;
  }

  // 0 unknown, 1 edge, 2 no edge.
  std::vector<std::uint8_t> memo(n * n, 0);
  auto edge = [&](NodeIndex a, NodeIndex b) {
    std::uint8_t& e = memo[a * n + b];
    if (!e) {
      Interval iv = make_interval(l, a, b);
      bool ok = flavor == ChainFlavor::Distributive ? is_distributive(iv, triple_scan_cap)
                                                    : is_bottom_boolean(iv, triple_scan_cap);
      e = ok ? 1 : 2;
    }
    return e == 1;
  };

  // Distance to the top along flavored edges; node indices increase along
  // strict inclusions, so a reverse sweep sees every successor first.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kInf);
  dist[l.top()] = 0;
  for (NodeIndex v = n - 1; v-- > 0;) {
    const NodeSet& up = l.up_set(v);
    for (auto x = up.find_next(v); x != NodeSet::npos; x = up.find_next(x))
      if (dist[x] != kInf && dist[x] + 1 < dist[v] && edge(v, x)) dist[v] = dist[x] + 1;
  }

  auto extend = [&](std::vector<NodeIndex>& chain) {
    while (chain.back() != l.top()) {
      NodeIndex v = chain.back();
      const NodeSet& up = l.up_set(v);
      for (auto x = up.find_next(v); x != NodeSet::npos; x = up.find_next(x))
        if (dist[x] + 1 == dist[v] && edge(v, x)) {
          chain.push_back(x);
          break;
        }
    }
  };

  if (start == ChainStart::Trivial) {
    if (dist[0] == kInf) throw Error(ErrorKind::InternalInconsistency, "no flavored chain from the trivial subgroup");
    w.nodes = {0};
    extend(w.nodes);
  } else {
    const FiniteGroup& g = l.group();
    std::size_t best = kInf;
    NodeIndex best_h0 = 0, best_h1 = 0;
    for (NodeIndex h0 = 0; h0 < n; ++h0) {
      const NodeSet& up = l.up_set(h0);
      for (auto h1 = up.find_next(h0); h1 != NodeSet::npos; h1 = up.find_next(h1)) {
        if (dist[h1] == kInf || dist[h1] + 1 >= best) continue;
        if (!edge(h0, h1)) continue;
        if (!is_core_free(g, l.node(h0), l.node(h1))) continue;
        best = dist[h1] + 1;
        best_h0 = h0;
        best_h1 = h1;
      }
    }
    w.nodes = {best_h0, best_h1};
    extend(w.nodes);
  }

  for (std::size_t k = 0; k + 1 < w.nodes.size(); ++k) {
    Interval iv = make_interval(l, w.nodes[k], w.nodes[k + 1]);
    w.steps.push_back({is_distributive(iv, triple_scan_cap), is_bottom_boolean(iv, triple_scan_cap)});
  }
  return w;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const SubgroupLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> height(n, 0), depth(n, 0);
  for (NodeIndex v = 0; v < n; ++v)
    for (NodeIndex c : l.lower_covers(v)) height[v] = std::max(height[v], height[c] + 1);
  for (NodeIndex v = n; v-- > 0;)
    for (NodeIndex c : l.upper_covers(v)) depth[v] = std::max(depth[v], depth[c] + 1);
  std::vector<Signature> out;
  for (NodeIndex v = 0; v < n; ++v)
    out.emplace_back(height[v], depth[v], l.lower_covers(v).size(), l.upper_covers(v).size(),
                     l.down_set(v).count(), l.up_set(v).count());
  return out;
}

}  // namespace

std::optional<std::vector<NodeIndex>> lattice_isomorphism(const SubgroupLattice& l1, const SubgroupLattice& l2) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return std::nullopt;
  auto s1 = signatures(l1), s2 = signatures(l2);
  {
    auto a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::map<Signature, std::vector<NodeIndex>> pool;
  for (NodeIndex v = 0; v < n; ++v) pool[s2[v]].push_back(v);

  std::vector<NodeIndex> map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(NodeIndex)> assign = [&](NodeIndex v) -> bool {
    if (v == n) return true;
    for (NodeIndex cand : pool[s1[v]]) {
      if (used[cand]) continue;
      bool consistent = true;
      for (NodeIndex u = 0; u < v && consistent; ++u)
        consistent = l1.leq(u, v) == l2.leq(map[u], cand) && l1.leq(v, u) == l2.leq(cand, map[u]);
      if (!consistent) continue;
      map[v] = cand;
      used[cand] = true;
      if (assign(v + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace sglab
