#include "sglab/report.hpp"

namespace sglab::report {

json element(const FiniteGroup& g, ElementIndex x) { return {{"index", x}, {"cycles", g.element(x).to_string()}}; }

json group(const FiniteGroup& g) {
  json classes = json::array();
  for (const ConjugacyClass& c : g.classes())
    classes.push_back({{"size", c.size()},
                       {"representative", g.element(c.representative).to_string()},
                       {"order", g.element_order(c.representative)}});
  json gens = json::array();
  for (ElementIndex s : g.generators()) gens.push_back(g.element(s).to_string());
  return {{"name", g.name()},
          {"degree", g.degree()},
          {"order", g.order()},
          {"exponent", g.exponent()},
          {"generators", gens},
          {"abelian", g.is_abelian()},
          {"cyclic", g.is_cyclic()},
          {"class_count", g.classes().size()},
          {"classes", classes}};
}

json subgroup(const FiniteGroup& g, const Subgroup& s) {
  json gens = json::array();
  for (ElementIndex x : s.generators()) gens.push_back(g.element(x).to_string());
  return {{"order", s.order()}, {"generators", gens}};
}

json classification(const IntervalClass& c) {
  json j = {{"distributive", c.distributive},
            {"boolean", c.boolean},
            {"top_boolean", c.top_boolean},
            {"bottom_boolean", c.bottom_boolean},
            {"top_interval_bottom", c.top_interval_bottom},
            {"bottom_interval_top", c.bottom_interval_top}};
  if (c.boolean) j["rank"] = c.rank;
  return j;
}

json chain(const ChainWitness& w) {
  json steps = json::array();
  for (const ChainStep& s : w.steps) steps.push_back({{"distributive", s.distributive}, {"bottom_boolean", s.bottom_boolean}});
  return {{"flavor", to_string(w.flavor)},
          {"start", to_string(w.start)},
          {"length", w.length()},
          {"nodes", w.nodes},
          {"steps", steps}};
}

json ore_witness(const SubgroupLattice& l, const OreWitness& w) {
  json j = element(l.group(), w.element);
  j["method"] = to_string(w.method);
  j["valid"] = validate(l, w);
  return j;
}

json lattice(const SubgroupLattice& l, std::size_t triple_scan_cap, bool intervals) {
  const FiniteGroup& g = l.group();
  json nodes = json::array();
  for (NodeIndex i = 0; i < l.size(); ++i) {
    json n = subgroup(g, l.node(i));
    n["index"] = i;
    n["normal"] = is_normal(g, l.node(i));
    nodes.push_back(std::move(n));
  }
  json covers = json::array();
  for (NodeIndex i = 0; i < l.size(); ++i)
    for (NodeIndex j : l.upper_covers(i)) covers.push_back({i, j});
  json out = {{"size", l.size()}, {"nodes", nodes}, {"covers", covers}};
  if (intervals) {
    json records = json::array();
    for (NodeIndex h = 0; h < l.size(); ++h) {
      const NodeSet& up = l.up_set(h);
      for (auto k = up.find_next(h); k != NodeSet::npos; k = up.find_next(k)) {
        json r = classification(classify(make_interval(l, h, k), triple_scan_cap));
        r["bottom"] = h;
        r["top"] = k;
        records.push_back(std::move(r));
      }
    }
    out["intervals"] = records;
  }
  json chains = json::array();
  for (ChainFlavor f : {ChainFlavor::Distributive, ChainFlavor::BottomBoolean})
    for (ChainStart s : {ChainStart::Trivial, ChainStart::CoreFree}) chains.push_back(chain(min_chain(l, f, s, triple_scan_cap)));
  out["chains"] = chains;
  return out;
}

json table(const CharacterTable& t, const FiniteGroup& g) {
  json reps = json::array();
  for (ElementIndex r : t.class_reps) reps.push_back(g.element(r).to_string());
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string text;
    for (std::size_t k = 0; k < t.values[i].size(); ++k) text += (k ? " " : "") + std::to_string(t.values[i][k]);
    rows.push_back({{"degree", t.degrees[i]}, {"values", t.values[i]}, {"text", text}});
  }
  TableChecks c = check_table(t);
  std::size_t squares = 0;
  for (std::size_t d : t.degrees) squares += d * d;
  return {{"prime", t.prime},
          {"omega", t.omega},
          {"exponent", t.exponent},
          {"class_sizes", t.class_sizes},
          {"class_representatives", reps},
          {"rows", rows},
          {"checks",
           {{"degree_square_sum", squares},
            {"degree_square_sum_ok", c.degree_square_sum},
            {"class_count_ok", c.class_count},
            {"degrees_divide_order", c.degrees_divide_order},
            {"row_orthogonality", c.row_orthogonality},
            {"column_orthogonality", c.column_orthogonality},
            {"trivial_first", c.trivial_first}}}};
}

json interval(TableCache& cache, NodeIndex h, NodeIndex k, std::size_t triple_scan_cap) {
  const SubgroupLattice& l = cache.lattice();
  const FiniteGroup& g = l.group();
  Interval iv = make_interval(l, h, k);
  json out = {{"bottom", h},
              {"top", k},
              {"bottom_subgroup", subgroup(g, l.node(h))},
              {"top_subgroup", subgroup(g, l.node(k))},
              {"size", iv.size()},
              {"degenerate", iv.degenerate()}};
  if (!iv.degenerate()) {
    IntervalClass c = classify(iv, triple_scan_cap);
    out["classification"] = classification(c);
    auto brute = hcyclic_witness(iv);
    out["h_cyclic"] = brute.has_value();
    if (brute) out["ore_brute"] = ore_witness(l, *brute);
    if (c.boolean) out["ore_recursive"] = ore_witness(l, boolean_witness_construct(iv, triple_scan_cap));
    if (c.top_boolean) out["ore_top_reduction"] = ore_witness(l, top_reduction_witness(iv, triple_scan_cap));
  }
  auto w = interval_linearly_primitive(cache, h, k, true);
  out["linearly_primitive"] = w.has_value();
  if (w) out["linear_witness"] = {{"row", w->row}, {"fixed_dim", w->fixed_dim}, {"verified", w->verified}};
  return out;
}

json ore(const SubgroupLattice& l, const OreReport& r) {
  json records = json::array();
  for (const OreIntervalRecord& rec : r.intervals) {
    json j = {{"bottom", rec.bottom}, {"top", rec.top}, {"classification", classification(rec.classification)}};
    if (rec.brute) j["brute"] = ore_witness(l, *rec.brute);
    if (rec.reduction) j["top_reduction"] = ore_witness(l, *rec.reduction);
    records.push_back(std::move(j));
  }
  return {{"intervals", r.intervals.size()},
          {"top_boolean", r.top_boolean_count},
          {"h_cyclic", r.hcyclic_count},
          {"h_cyclic_not_top_boolean", r.hcyclic_not_top_boolean},
          {"records", records}};
}

json dual_ore(const DualOreReport& r) {
  json records = json::array();
  for (const DualOreRecord& rec : r.intervals)
    records.push_back({{"bottom", rec.bottom},
                       {"top", rec.top},
                       {"boolean", rec.boolean},
                       {"distributive", rec.distributive},
                       {"row", rec.witness.row},
                       {"fixed_dim", rec.witness.fixed_dim},
                       {"verified", rec.witness.verified}});
  return {{"intervals_scanned", r.intervals_scanned},
          {"bottom_boolean", r.bottom_boolean},
          {"distributive", r.distributive},
          {"cross_checked", r.cross_checked},
          {"records", records}};
}

json bottom_lift(const BottomLiftReport& r) { return {{"samples", r.samples.size()}, {"nonvacuous", r.nonvacuous}}; }

json faithful(const FaithfulComponents& f) { return {{"m", f.m}, {"rows", f.rows}}; }

json chain_bounds(const ChainBoundReport& r) {
  return {{"faithful_components", faithful(r.components)},
          {"bottom_boolean_chain", chain(r.bottom_boolean)},
          {"distributive_chain", chain(r.distributive)},
          {"core_free_chain", chain(r.core_free)},
          {"holds", r.holds}};
}

json induction(const InductionReport& r) {
  return {{"chains", r.chains}, {"hypotheses", r.hypotheses}, {"components", r.components}, {"skipped_large", r.skipped_large}};
}

json lemmas(const LemmaReport& r) {
  json by_name = json::object();
  for (const auto& [name, t] : r.lemmas) by_name[name] = {{"checked", t.checked}, {"nonvacuous", t.nonvacuous}};
  return {{"samples", r.samples}, {"lemmas", by_name}};
}

json survey(const SurveyReport& r, bool timing) {
  json records = json::array();
  for (const SurveyRecord& rec : r.records) {
    json j = {{"name", rec.name}, {"family", rec.family}, {"order", rec.order}};
    if (rec.skipped) {
      j["skipped"] = *rec.skipped;
    } else {
      j["nodes"] = rec.nodes;
      j["linearly_primitive"] = rec.primitive_row.has_value();
      if (rec.primitive_row) j["primitive_row"] = *rec.primitive_row;
      j["core_free_bottom_boolean"] = rec.core_free_node.has_value();
      if (rec.core_free_node)
        j["core_free_witness"] = {{"node", *rec.core_free_node},
                                  {"order", rec.core_free_order},
                                  {"generators", rec.core_free_generators}};
      j["verdict"] = rec.verdict;
    }
    if (timing) j["seconds"] = rec.seconds;
    records.push_back(std::move(j));
  }
  return {{"bound", r.bound},
          {"families", r.families},
          {"surveyed", r.surveyed},
          {"skipped", r.skipped},
          {"linearly_primitive", r.primitive},
          {"verdict_true", r.verdict_true},
          {"all_verdicts_true", r.all_true},
          {"isomorphic_lattice_pair",
           {{"first", "M4(2)"},
            {"second", "C8xC2"},
            {"lattices_isomorphic", r.lattice_pair.lattices_isomorphic},
            {"first_linearly_primitive", r.lattice_pair.first_primitive},
            {"second_linearly_primitive", r.lattice_pair.second_primitive}}},
          {"records", records}};
}

}  // namespace sglab::report
