// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sglab/catalog.hpp"
#include "sglab/error.hpp"
#include "sglab/report.hpp"

using namespace sglab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Loaded {
  catalog::Entry entry;
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<SubgroupLattice> lattice;
};

// Groups and lattices are shared between criteria; enumerating them once
// keeps the gate well inside its time budget.
std::vector<Loaded>& sweep_200() {
  static std::vector<Loaded> groups = [] {
    std::vector<Loaded> out;
    for (catalog::Entry& e : catalog::sweep(200)) {
      Loaded l;
      l.group = std::make_unique<FiniteGroup>(FiniteGroup::build(e.spec));
      l.lattice = std::make_unique<SubgroupLattice>(SubgroupLattice::enumerate(*l.group));
      l.entry = std::move(e);
      out.push_back(std::move(l));
    }
    return out;
  }();
  return groups;
}

Outcome ore_equivalence() {
  std::size_t cyclic = 0;
  for (const Loaded& l : sweep_200()) {
    bool distributive = is_distributive(whole_lattice(*l.lattice));
    if (distributive != l.group->is_cyclic()) return {false, l.entry.spec.name + " breaks cyclic <=> distributive"};
    if (distributive) ++cyclic;
  }
  return {true, std::to_string(sweep_200().size()) + " groups of order <= 200, " + std::to_string(cyclic) + " cyclic"};
}

Outcome ore_witnesses() {
  std::vector<GroupSpec> specs = {catalog::symmetric(4), catalog::symmetric(5), catalog::alternating(5),
                                  catalog::dihedral(16),  catalog::dicyclic(16),  catalog::m4_2(),
                                  catalog::c8xc2()};
  for (std::size_t n = 2; n <= 64; n += 2) specs.push_back(catalog::dihedral(n));
  for (std::size_t n = 8; n <= 64; n += 4) specs.push_back(catalog::dicyclic(n));
  std::size_t top_boolean = 0, recursive = 0;
  for (const GroupSpec& s : specs) {
    FiniteGroup g = FiniteGroup::build(s);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    OreReport r = verify_ore(l);
    for (const OreIntervalRecord& rec : r.intervals) {
      if (!rec.classification.top_boolean) continue;
      if (!rec.brute || !validate(l, *rec.brute) || !rec.reduction || !validate(l, *rec.reduction))
        return {false, s.name + " interval [" + std::to_string(rec.bottom) + ", " + std::to_string(rec.top) + "]"};
      ++top_boolean;
      if (rec.classification.boolean) {
        OreWitness w = boolean_witness_construct(make_interval(l, rec.bottom, rec.top));
        if (!validate(l, w)) return {false, s.name + " recursive witness"};
        ++recursive;
      }
    }
  }
  return {true, std::to_string(specs.size()) + " groups, " + std::to_string(top_boolean) +
                    " top-Boolean intervals with brute and a*b witnesses (" + std::to_string(recursive) +
                    " Boolean intervals also built directly)"};
}

Outcome counterexample() {
  FiniteGroup g = FiniteGroup::build(catalog::symmetric(4));
  SubgroupLattice l = SubgroupLattice::enumerate(g);
  ElementIndex t = static_cast<ElementIndex>(g.index_of(Permutation::from_cycles(4, {{1, 2}})));
  ElementIndex c = static_cast<ElementIndex>(g.index_of(Permutation::from_cycles(4, {{1, 2, 3, 4}})));
  NodeIndex h = l.cyclic_node(t);
  Interval iv = make_interval(l, h, l.top());
  auto brute = hcyclic_witness(iv);
  bool paper_witness = validate(l, OreWitness{h, l.top(), c, WitnessMethod::Brute});
  bool top_boolean = is_top_boolean(iv);
  bool ok = brute && validate(l, *brute) && paper_witness && !top_boolean;
  return {ok, std::string("H-cyclic ") + (brute ? "yes" : "no") + ", (1 2 3 4) valid " + (paper_witness ? "yes" : "no") +
                  ", top Boolean " + (top_boolean ? "yes" : "no")};
}

Outcome index_identity() {
  std::size_t checked = 0;
  for (const Loaded& l : sweep_200()) {
    if (l.group->order() > 120) continue;
    CharacterTable t = character_table(*l.group);
    for (const Subgroup& h : l.lattice->nodes()) {
      if (!index_identity_check(t, h)) return {false, l.entry.spec.name};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " subgroups in groups of order <= 120"};
}

Outcome table_validity() {
  std::size_t tables = 0;
  for (const Loaded& l : sweep_200()) {
    const FiniteGroup& g = *l.group;
    CharacterTable t = character_table(g);
    TableChecks c = check_table(t);
    if (!c.all() || t.size() != g.classes().size()) return {false, g.name() + " table checks"};
    CharacterVector pi = permutation_character(g, t);
    if (inner_product(t, pi.values, t.values[0]) != orbit_count(g)) return {false, g.name() + " Burnside count"};
    ++tables;
  }
  return {true, std::to_string(tables) + " tables of order <= 200 with orthogonality and Burnside cross-check"};
}

Outcome dual_ore() {
  std::size_t groups = 0, intervals = 0;
  for (const Loaded& l : sweep_200()) {
    if (l.group->order() > 128) continue;
    TableCache cache(*l.lattice);
    DualOreReport r = verify_dual_ore(cache);
    intervals += r.bottom_boolean;
    ++groups;
  }
  return {true, std::to_string(intervals) + " bottom-Boolean intervals in " + std::to_string(groups) +
                    " groups of order <= 128, all linearly primitive"};
}

Outcome lattice_pair() {
  FiniteGroup m = FiniteGroup::build(catalog::m4_2());
  FiniteGroup c = FiniteGroup::build(catalog::c8xc2());
  SubgroupLattice lm = SubgroupLattice::enumerate(m);
  SubgroupLattice lc = SubgroupLattice::enumerate(c);
  bool iso = lattice_isomorphism(lm, lc).has_value();
  bool m_prim = group_linearly_primitive(m, character_table(m)).has_value();
  bool c_prim = group_linearly_primitive(c, character_table(c)).has_value();
  return {iso && m_prim && !c_prim, std::string("lattices isomorphic ") + (iso ? "yes" : "no") + ", M4(2) primitive " +
                                        (m_prim ? "yes" : "no") + ", C8xC2 primitive " + (c_prim ? "yes" : "no")};
}

Outcome chain_bounds() {
  std::size_t groups = 0;
  std::string equality;
  for (const Loaded& l : sweep_200()) {
    if (l.group->order() > 128) continue;
    ChainBoundReport r = chain_bound_check(*l.lattice, character_table(*l.group));
    ++groups;
    if (l.entry.spec.name == "C8xC2") {
      if (r.components.m != 2 || r.bottom_boolean.length() != 2) return {false, "C8xC2 is not 2 = 2"};
      equality = "C8xC2 gives 2 = 2";
    }
  }
  if (equality.empty()) return {false, "C8xC2 missing from the sweep"};
  return {true, std::to_string(groups) + " groups of order <= 128 satisfy m <= l_bb <= l_dist; " + equality};
}

Outcome survey() {
  SurveyReport r = primitivity_survey(128, {});
  std::ofstream("acceptance_survey.json") << report::survey(r, false).dump(2) << '\n';
  std::ostringstream names;
  for (const SurveyRecord& rec : r.records) names << ' ' << rec.name;
  std::ofstream("acceptance_coverage.txt") << "surveyed:" << names.str() << '\n';
  bool ok = r.all_true && r.skipped == 0 && r.lattice_pair.lattices_isomorphic && r.lattice_pair.first_primitive &&
            !r.lattice_pair.second_primitive;
  return {ok, std::to_string(r.verdict_true) + "/" + std::to_string(r.surveyed) +
                  " verdicts true over the catalog to order 128 (coverage in acceptance_coverage.txt)"};
}

Outcome properties() {
  FiniteGroup s4 = FiniteGroup::build(catalog::symmetric(4));
  SubgroupLattice ls4 = SubgroupLattice::enumerate(s4);
  TableCache cs4(ls4);
  LemmaReport exhaustive = lemma_suite(cs4);
  verify_bottom_lift(cs4);
  induction_stabilizer_suite(cs4);

  // Random (group, H, K, chi) samples from the catalog to order 64.
  std::vector<catalog::Entry> pool = catalog::sweep(64);
  std::mt19937_64 rng(20240601);
  std::vector<std::unique_ptr<FiniteGroup>> groups(pool.size());
  std::vector<std::unique_ptr<SubgroupLattice>> lattices(pool.size());
  std::vector<std::unique_ptr<TableCache>> caches(pool.size());
  LemmaReport sampled;
  for (int s = 0; s < 200; ++s) {
    std::size_t gi = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    if (!groups[gi]) {
      groups[gi] = std::make_unique<FiniteGroup>(FiniteGroup::build(pool[gi].spec));
      lattices[gi] = std::make_unique<SubgroupLattice>(SubgroupLattice::enumerate(*groups[gi]));
      caches[gi] = std::make_unique<TableCache>(*lattices[gi]);
    }
    const SubgroupLattice& l = *lattices[gi];
    NodeIndex h = std::uniform_int_distribution<NodeIndex>(0, l.size() - 1)(rng);
    std::vector<NodeIndex> above;
    for (auto k = l.up_set(h).find_first(); k != NodeSet::npos; k = l.up_set(h).find_next(k)) above.push_back(k);
    NodeIndex k = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
    std::size_t row = std::uniform_int_distribution<std::size_t>(0, caches[gi]->table(k).size() - 1)(rng);
    check_lemma_sample(*caches[gi], h, k, row, sampled);
  }
  std::size_t properties = exhaustive.lemmas.size();
  return {true, std::to_string(properties) + " properties on " + std::to_string(exhaustive.samples) +
                    " exhaustive S4 samples and " + std::to_string(sampled.samples) + " random catalog samples"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"cyclic iff distributive lattice (order <= 200)", ore_equivalence},
      {"top-Boolean intervals are H-cyclic, brute and recursive witnesses", ore_witnesses},
      {"[<(1 2)>, S4] is H-cyclic but not top Boolean", counterexample},
      {"index identity |G:H| = sum d_i dim V_i^H (order <= 120)", index_identity},
      {"character tables valid (order <= 200)", table_validity},
      {"bottom-Boolean intervals are linearly primitive (order <= 128)", dual_ore},
      {"M4(2) and C8xC2: same lattice, different primitivity", lattice_pair},
      {"faithful components <= bottom-Boolean chain <= distributive chain", chain_bounds},
      {"linearly primitive iff core-free bottom-Boolean interval (order <= 128)", survey},
      {"property suites on S4 and 200 random samples", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name << " -- " << o.detail
              << " [" << static_cast<int>(secs * 1000) << " ms]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
