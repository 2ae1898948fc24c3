#include "sglab/dual_ore.hpp"

#include <chrono>
#include <functional>

#include "sglab/error.hpp"
#include "sglab/work_queue.hpp"

namespace sglab {

namespace {

std::string describe(NodeIndex h, NodeIndex k) { return "[" + std::to_string(h) + ", " + std::to_string(k) + "]"; }

NodeSet interval_set(const SubgroupLattice& l, NodeIndex h, NodeIndex k) { return l.up_set(h) & l.down_set(k); }

}  // namespace

TableCache::TableCache(const SubgroupLattice& l, TableOptions options) : lattice_(&l), options_(options) {}

const TableCache::Entry& TableCache::get(NodeIndex k) {
  if (auto it = entries_.find(k); it != entries_.end()) return *it->second;
  const FiniteGroup& g = lattice_->group();
  auto entry = std::make_unique<Entry>();
  if (k == lattice_->top()) {
    entry->embedded.group = g;
    entry->embedded.to_parent.resize(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) entry->embedded.to_parent[x] = x;
    entry->table = character_table(g, options_);
  } else {
    TableOptions sub = options_;
    sub.prime = root().prime;
    entry->embedded = FiniteGroup::from_subgroup(g, lattice_->node(k));
    entry->table = character_table(entry->embedded.group, sub);
  }
  entry->local_of.assign(g.order(), npos);
  const auto& to_parent = entry->embedded.to_parent;
  for (ElementIndex i = 0; i < to_parent.size(); ++i) entry->local_of[to_parent[i]] = i;
  return *entries_.emplace(k, std::move(entry)).first->second;
}

Subgroup TableCache::local_subgroup(NodeIndex k, NodeIndex n) {
  const Entry& e = get(k);
  std::vector<ElementIndex> seed;
  for (ElementIndex x : lattice_->node(n).generators()) seed.push_back(e.local_of.at(x));
  return subgroup_closure(e.embedded.group, seed);
}

std::size_t TableCache::fixed_dim(NodeIndex k, std::span<const Residue> chi, NodeIndex n) {
  const Entry& e = get(k);
  const PrimeField f = e.table.field();
  const Subgroup& node = lattice_->node(n);
  std::uint64_t acc = 0;
  const ElementSet& members = node.members();
  for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x)) {
    ElementIndex local = e.local_of[x];
    if (local == npos) throw Error(ErrorKind::HNotContained, "node " + std::to_string(n) + " is not below " + std::to_string(k));
    acc += chi[e.table.class_of[local]];
  }
  Residue mean = f.mul(static_cast<Residue>(acc % f.prime()), f.inv(f.reduce(static_cast<std::int64_t>(node.order()))));
  return lift(mean, lift(chi[0], f.prime() / 2));
}

NodeIndex TableCache::stabilizer(NodeIndex k, std::span<const Residue> chi, NodeIndex h) {
  return stabilizer(k, chi, h, k);
}

NodeIndex TableCache::stabilizer(NodeIndex a, std::span<const Residue> chi, NodeIndex h, NodeIndex k) {
  const SubgroupLattice& l = *lattice_;
  if (!l.leq(h, k) || !l.leq(k, a)) throw Error(ErrorKind::HNotContained, "stabilizer needs h <= k <= ambient node");
  const std::size_t base = fixed_dim(a, chi, h);
  std::vector<NodeIndex> equal;
  NodeIndex best = h;
  NodeSet span = interval_set(l, h, k);
  for (auto n = span.find_first(); n != NodeSet::npos; n = span.find_next(n)) {
    if (n != h && fixed_dim(a, chi, n) != base) continue;
    equal.push_back(n);
    if (l.node(n).order() > l.node(best).order()) best = n;
  }
  for (NodeIndex n : equal)
    if (!l.leq(n, best)) throw Error(ErrorKind::InternalInconsistency, "fixed spaces are not closed under joins");
  return best;
}

std::optional<LinearPrimitivityWitness> interval_linearly_primitive(TableCache& cache, NodeIndex h, NodeIndex k,
                                                                    bool cross_check) {
  const SubgroupLattice& l = cache.lattice();
  if (!l.leq(h, k)) throw Error(ErrorKind::HNotContained, "node " + std::to_string(h) + " is not below " + std::to_string(k));
  const TableCache::Entry& e = cache.get(k);
  const CharacterTable& t = e.table;
  for (std::size_t row = 0; row < t.size(); ++row) {
    std::span<const Residue> chi(t.values[row]);
    if (cache.stabilizer(k, chi, h) != h) continue;
    LinearPrimitivityWitness w{h, k, row, cache.fixed_dim(k, chi, h), false};
    if (cross_check) {
      Subgroup local_h = cache.local_subgroup(k, h);
      if (!(pointwise_stabilizer(e.embedded.group, t, chi, local_h) == local_h))
        throw Error(ErrorKind::InternalInconsistency,
                    "element-scan stabilizer disagrees with the lattice route on " + describe(h, k));
      w.verified = true;
    }
    return w;
  }
  return std::nullopt;
}

std::optional<std::size_t> group_linearly_primitive(const FiniteGroup& g, const CharacterTable& t) {
  for (std::size_t row = 0; row < t.size(); ++row)
    if (kernel(g, t, row).is_trivial()) return row;
  return std::nullopt;
}

DualOreReport verify_dual_ore(TableCache& cache, std::size_t triple_scan_cap, bool cross_check) {
  const SubgroupLattice& l = cache.lattice();
  DualOreReport report;
  for (NodeIndex h = 0; h < l.size(); ++h) {
    const NodeSet& up = l.up_set(h);
    for (auto k = up.find_next(h); k != NodeSet::npos; k = up.find_next(k)) {
      ++report.intervals_scanned;
      IntervalClass c = classify(make_interval(l, h, k), triple_scan_cap);
      if (c.distributive) ++report.distributive;
      if (!c.bottom_boolean) continue;
      ++report.bottom_boolean;
      auto w = interval_linearly_primitive(cache, h, k, cross_check);
      if (!w)
        throw Error(ErrorKind::TheoremViolation, "bottom Boolean interval " + describe(h, k) + " is not linearly primitive");
      if (w->verified) ++report.cross_checked;
      report.intervals.push_back({h, k, c.boolean, c.distributive, *w});
    }
  }
  return report;
}

BottomLiftReport verify_bottom_lift(TableCache& cache, const std::vector<std::pair<NodeIndex, NodeIndex>>& sample) {
  const SubgroupLattice& l = cache.lattice();
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs = sample;
  if (pairs.empty())
    for (NodeIndex h = 0; h < l.size(); ++h) {
      const NodeSet& up = l.up_set(h);
      for (auto k = up.find_next(h); k != NodeSet::npos; k = up.find_next(k)) pairs.emplace_back(h, k);
    }
  BottomLiftReport report;
  for (auto [h, k] : pairs) {
    if (h == k) continue;
    Interval iv = make_interval(l, h, k);
    BottomLiftRecord rec{h, k, bottom_interval(iv).top, false, false};
    rec.bottom_interval_primitive = interval_linearly_primitive(cache, h, rec.bottom_interval_top, false).has_value();
    rec.interval_primitive = rec.bottom_interval_top == k ? rec.bottom_interval_primitive
                                                          : interval_linearly_primitive(cache, h, k, false).has_value();
    if (rec.bottom_interval_primitive) {
      ++report.nonvacuous;
      if (!rec.interval_primitive)
        throw Error(ErrorKind::TheoremViolation, "bottom interval of " + describe(h, k) +
                                                     " is linearly primitive but the interval is not");
    }
    report.samples.push_back(rec);
  }
  return report;
}

FaithfulComponents min_faithful_components(const FiniteGroup& g, const CharacterTable& t) {
  // One representative row per distinct kernel, the smallest index.
  std::vector<std::size_t> rows;
  std::vector<ElementSet> kernels;
  for (std::size_t row = 0; row < t.size(); ++row) {
    ElementSet k = kernel(g, t, row).members();
    if (std::find(kernels.begin(), kernels.end(), k) != kernels.end()) continue;
    rows.push_back(row);
    kernels.push_back(std::move(k));
  }

  ElementSet identity(g.order());
  identity.set(0);
  ElementSet all(g.order());
  all.set();
  if (all == identity) return {0, {}};

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t, const ElementSet&)> search =
      [&](std::size_t start, std::size_t left, const ElementSet& current) {
        if (left == 0) return current == identity;
        for (std::size_t i = start; i + left <= rows.size(); ++i) {
          if (current.is_subset_of(kernels[i])) continue;  // no progress
          chosen.push_back(rows[i]);
          if (search(i + 1, left - 1, current & kernels[i])) return true;
          chosen.pop_back();
        }
        return false;
      };
  for (std::size_t m = 1; m <= rows.size(); ++m)
    if (search(0, m, all)) return {m, chosen};
  throw Error(ErrorKind::InternalInconsistency, "irreducible kernels do not meet trivially");
}

ChainBoundReport chain_bound_check(const SubgroupLattice& l, const CharacterTable& t, std::size_t triple_scan_cap) {
  ChainBoundReport r;
  r.components = min_faithful_components(l.group(), t);
  r.bottom_boolean = min_chain(l, ChainFlavor::BottomBoolean, ChainStart::Trivial, triple_scan_cap);
  r.distributive = min_chain(l, ChainFlavor::Distributive, ChainStart::Trivial, triple_scan_cap);
  r.core_free = min_chain(l, ChainFlavor::BottomBoolean, ChainStart::CoreFree, triple_scan_cap);
  const std::size_t m = r.components.m;
  r.holds = m <= r.bottom_boolean.length() && r.bottom_boolean.length() <= r.distributive.length() &&
            m <= r.core_free.length();
  if (!r.holds)
    throw Error(ErrorKind::TheoremViolation,
                "faithful components " + std::to_string(m) + " vs chains bottom_boolean=" +
                    std::to_string(r.bottom_boolean.length()) + " distributive=" +
                    std::to_string(r.distributive.length()) + " core_free=" + std::to_string(r.core_free.length()));
  return r;
}

void check_induction_stabilizer(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t row, InductionReport& report) {
  const SubgroupLattice& l = cache.lattice();
  const NodeIndex top = l.top();
  const TableCache::Entry& ek = cache.get(k);
  std::span<const Residue> u(ek.table.values.at(row));
  if (cache.fixed_dim(k, u, h) == 0 || cache.stabilizer(k, u, h) != h) return;
  ++report.hypotheses;

  const CharacterTable& tg = cache.root();
  CharacterVector w = induced_character(tg, ek.embedded.to_parent, ek.table, u);
  if (cache.stabilizer(top, w.values, h) != h)
    throw Error(ErrorKind::TheoremViolation, "induced character from node " + std::to_string(k) + " row " +
                                                 std::to_string(row) + " does not have stabilizer " + std::to_string(h));
  std::vector<std::size_t> mult = decompose(tg, w.values);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    ++report.components;
    std::span<const Residue> v(tg.values[i]);
    if (cache.fixed_dim(top, v, h) == 0 || cache.stabilizer(top, v, h, k) != h)
      throw Error(ErrorKind::TheoremViolation, "component " + std::to_string(i) + " of the induced character from node " +
                                                   std::to_string(k) + " fails at " + std::to_string(h));
  }
}

InductionReport induction_stabilizer_suite(TableCache& cache, std::size_t order_cap) {
  const SubgroupLattice& l = cache.lattice();
  InductionReport report;
  for (NodeIndex k = 0; k < l.size(); ++k) {
    if (l.node(k).order() > order_cap) {
      ++report.skipped_large;
      continue;
    }
    const NodeSet& below = l.down_set(k);
    const std::size_t rows = cache.table(k).size();
    for (auto h = below.find_first(); h != NodeSet::npos; h = below.find_next(h)) {
      ++report.chains;
      for (std::size_t row = 0; row < rows; ++row) check_induction_stabilizer(cache, h, k, row, report);
    }
  }
  return report;
}

SurveyRecord survey_group(const catalog::Entry& entry, const SurveyOptions& options) {
  SurveyRecord rec;
  rec.name = entry.spec.name;
  rec.family = entry.family;
  rec.order = entry.order;
  auto start = std::chrono::steady_clock::now();
  try {
    FiniteGroup g = FiniteGroup::build(entry.spec, options.order_limit);
    SubgroupLattice l = SubgroupLattice::enumerate(g, options.node_cap);
    rec.order = g.order();
    rec.nodes = l.size();
    CharacterTable t = character_table(g, TableOptions{std::nullopt, options.seed});
    rec.primitive_row = group_linearly_primitive(g, t);
    for (NodeIndex h = 0; h < l.size(); ++h) {
      if (!is_core_free(g, l.node(h))) continue;
      // For the trivial group the only candidate is the one-node interval,
      // read as the Boolean lattice of rank 0.
      if (h == l.top() || classify(make_interval(l, h, l.top()), options.triple_scan_cap).bottom_boolean) {
        rec.core_free_node = h;
        rec.core_free_order = l.node(h).order();
        for (ElementIndex x : l.node(h).generators()) rec.core_free_generators.push_back(g.element(x).to_string());
        break;
      }
    }
    rec.verdict = rec.primitive_row.has_value() == rec.core_free_node.has_value();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrderLimitExceeded && e.kind() != ErrorKind::NodeCapExceeded) throw;
    rec.skipped = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SurveyReport primitivity_survey(std::size_t bound, const std::vector<std::string>& families,
                             const SurveyOptions& options) {
  SurveyReport report;
  report.bound = bound;
  report.families = families;
  std::vector<catalog::Entry> entries = catalog::sweep(bound, families);
  report.records.resize(entries.size());
  run_work_queue(entries.size(), options.jobs,
                 [&](std::size_t i) { report.records[i] = survey_group(entries[i], options); });
  for (const SurveyRecord& r : report.records) {
    if (r.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.surveyed;
    if (r.primitive_row) ++report.primitive;
    if (r.verdict) ++report.verdict_true;
  }
  report.all_true = report.verdict_true == report.surveyed;

  FiniteGroup m = FiniteGroup::build(catalog::m4_2());
  FiniteGroup c = FiniteGroup::build(catalog::c8xc2());
  SubgroupLattice lm = SubgroupLattice::enumerate(m);
  SubgroupLattice lc = SubgroupLattice::enumerate(c);
  report.lattice_pair.lattices_isomorphic = lattice_isomorphism(lm, lc).has_value();
  report.lattice_pair.first_primitive = group_linearly_primitive(m, character_table(m, {std::nullopt, options.seed})).has_value();
  report.lattice_pair.second_primitive = group_linearly_primitive(c, character_table(c, {std::nullopt, options.seed})).has_value();
  return report;
}

}  // namespace sglab
