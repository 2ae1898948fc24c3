#include "sglab/lemmas.hpp"

#include "sglab/error.hpp"

namespace sglab {

namespace {

struct Sample {
  TableCache& cache;
  NodeIndex h;
  NodeIndex k;
  std::size_t row;
  LemmaReport& report;

  void require(const char* name, bool hypothesis, bool holds) {
    LemmaTally& t = report.lemmas[name];
    ++t.checked;
    if (!hypothesis) return;
    ++t.nonvacuous;
    if (!holds)
      throw Error(ErrorKind::TheoremViolation, std::string(name) + " fails for H=" + std::to_string(h) +
                                                   " K=" + std::to_string(k) + " row " + std::to_string(row));
  }
};

}  // namespace

void check_lemma_sample(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t row, LemmaReport& report,
                        std::size_t triple_scan_cap) {
  const SubgroupLattice& l = cache.lattice();
  if (!l.leq(h, k)) throw Error(ErrorKind::HNotContained, "sample needs H <= K");
  Sample s{cache, h, k, row, report};
  ++report.samples;

  const TableCache::Entry& ek = cache.get(k);
  const CharacterTable& tk = ek.table;
  std::span<const Residue> chi(tk.values.at(row));
  const std::size_t base = cache.fixed_dim(k, chi, h);
  const NodeSet span = l.up_set(h) & l.down_set(k);

  // Element-scan stabilizer, mapped back to a lattice node.
  Subgroup scan = pointwise_stabilizer(ek.embedded.group, tk, chi, cache.local_subgroup(k, h));
  ElementSet members(l.group().order());
  for (ElementIndex x : scan.elements()) members.set(ek.embedded.to_parent[x]);
  auto scan_node = l.index_of(members);
  NodeIndex lattice_node = cache.stabilizer(k, chi, h);
  s.require("stabilizer_routes_agree", true, scan_node && *scan_node == lattice_node);
  const NodeIndex stab = lattice_node;

  s.require("stabilizer_contains", true, l.leq(h, stab));
  s.require("stabilizer_fixed_space", true, cache.fixed_dim(k, chi, stab) == base);

  for (auto n = span.find_first(); n != NodeSet::npos; n = span.find_next(n)) {
    const std::size_t dn = cache.fixed_dim(k, chi, n);
    for (NodeIndex m : l.upper_covers(n))
      if (l.leq(m, k)) s.require("fixed_space_antitone", true, cache.fixed_dim(k, chi, m) <= dn);
    s.require("strict_drop_excluded", dn < base, !l.leq(n, stab));
  }

  if (h != k) {
    bool found = false;
    for (std::size_t i = 1; i < tk.size() && !found; ++i)
      found = cache.fixed_dim(k, std::span<const Residue>(tk.values[i]), h) > 0;
    s.require("nontrivial_fixed_vector", true, found);
  }

  std::size_t weighted = 0;
  for (std::size_t i = 0; i < tk.size(); ++i)
    weighted += tk.degrees[i] * cache.fixed_dim(k, std::span<const Residue>(tk.values[i]), h);
  s.require("index_identity", true, weighted * l.node(h).order() == l.node(k).order());

  // H's group embedded in K's: compose H -> parent -> K.
  const TableCache::Entry& eh = cache.get(h);
  std::vector<ElementIndex> h_in_k;
  for (ElementIndex x : eh.embedded.to_parent) h_in_k.push_back(ek.local_of[x]);
  for (const auto& u : eh.table.values)
    s.require("frobenius_reciprocity", true, frobenius_check(tk, h_in_k, eh.table, u, chi));

  if (base > 0) {
    InductionReport induced;
    check_induction_stabilizer(cache, stab, k, row, induced);
    s.require("induction_stabilizer", true, induced.hypotheses == 1);
  } else {
    s.require("induction_stabilizer", false, true);
  }

  for (NodeIndex m : l.upper_covers(h))
    if (l.leq(m, k))
      s.require("maximal_primitive", true, interval_linearly_primitive(cache, h, m, false).has_value());

  if (h != k) {
    Interval iv = make_interval(l, h, k);
    IntervalClass c = classify(iv, triple_scan_cap);
    bool bottom_primitive = interval_linearly_primitive(cache, h, c.bottom_interval_top, false).has_value();
    s.require("bottom_interval_lift", bottom_primitive,
              bottom_primitive && interval_linearly_primitive(cache, h, k, false).has_value());
    s.require("distributive_boolean_ends", c.distributive, c.top_boolean && c.bottom_boolean);
  }
}

LemmaReport lemma_suite(TableCache& cache, std::size_t triple_scan_cap) {
  const SubgroupLattice& l = cache.lattice();
  LemmaReport report;
  for (NodeIndex h = 0; h < l.size(); ++h) {
    const NodeSet& up = l.up_set(h);
    for (auto k = up.find_first(); k != NodeSet::npos; k = up.find_next(k)) {
      const std::size_t rows = cache.table(k).size();
      for (std::size_t row = 0; row < rows; ++row) check_lemma_sample(cache, h, k, row, report, triple_scan_cap);
    }
  }
  return report;
}

}  // namespace sglab
