#include <doctest.h>

#include "oracles.hpp"
#include "sglab/catalog.hpp"
#include "sglab/dual_ore.hpp"
#include "sglab/error.hpp"
#include "sglab/report.hpp"

using namespace sglab;

namespace {

FiniteGroup make(const std::string& name) { return FiniteGroup::build(catalog::by_name(name)); }

std::vector<ElementIndex> members(const ElementSet& s) {
  std::vector<ElementIndex> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(static_cast<ElementIndex>(i));
  return out;
}

// Kernel read straight off the values: chi(x) == chi(1).
ElementSet value_kernel(const FiniteGroup& g, const CharacterTable& t, std::size_t row) {
  ElementSet k(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (t.values[row][t.class_of[x]] == t.values[row][0]) k.set(x);
  return k;
}

// Smallest number of rows whose kernels intersect trivially, by subset search.
std::size_t brute_min_faithful(const FiniteGroup& g, const CharacterTable& t) {
  if (g.order() == 1) return 0;
  const std::size_t r = t.size();
  std::size_t best = r + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits >= best) continue;
    ElementSet k(g.order());
    k.set();
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) k &= value_kernel(g, t, i);
    if (k.count() == 1) best = bits;
  }
  return best;
}

// [h, k] linearly primitive by element scan in k's own group: some
// irreducible of k whose fixed space under h is stabilized by h alone.
bool brute_interval_primitive(TableCache& cache, NodeIndex h, NodeIndex k) {
  const TableCache::Entry& e = cache.get(k);
  const FiniteGroup& kg = e.embedded.group;
  const CharacterTable& t = e.table;
  PrimeField f = t.field();
  ElementSet hl(kg.order());
  for (ElementIndex x : cache.lattice().node(h).elements()) hl.set(e.local_of[x]);
  auto average = [&](std::size_t row, const ElementSet& s) {
    Residue sum = 0;
    for (ElementIndex x : members(s)) sum = f.add(sum, t.values[row][t.class_of[x]]);
    return f.mul(sum, f.inv(static_cast<Residue>(s.count() % t.prime)));
  };
  for (std::size_t row = 0; row < t.size(); ++row) {
    Residue base = average(row, hl);
    bool primitive = true;
    for (ElementIndex x = 0; x < kg.order() && primitive; ++x) {
      if (hl.test(x)) continue;
      std::vector<ElementIndex> seed = members(hl);
      seed.push_back(x);
      if (average(row, oracle::closure(kg, seed)) == base) primitive = false;
    }
    if (primitive) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group linear primitivity of familiar groups") {
  for (const char* name : {"S3", "S4", "A5", "D8", "Q8", "C6", "M4(2)", "1", "Q16"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    CHECK(group_linearly_primitive(g, character_table(g)).has_value());
  }
  for (const char* name : {"C2xC2", "C2^3", "C8xC2", "C3^2", "C4xC4xC2"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    CHECK_FALSE(group_linearly_primitive(g, character_table(g)).has_value());
  }
}

TEST_CASE("interval linear primitivity agrees with element-scan oracle") {
  for (const char* name : {"S3", "S4", "D8", "Q8", "A4", "C2^3", "C12", "Dic12"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    TableCache cache(l);
    for (NodeIndex h = 0; h < l.size(); ++h)
      for (NodeIndex k = h; k < l.size(); ++k) {
        if (!l.leq(h, k)) continue;
        CAPTURE(h);
        CAPTURE(k);
        auto w = interval_linearly_primitive(cache, h, k);
        CHECK(w.has_value() == brute_interval_primitive(cache, h, k));
        if (w) {
          CHECK(w->verified);
          CHECK(w->bottom == h);
          CHECK(w->top == k);
          CHECK(cache.stabilizer(k, cache.table(k).values[w->row], h) == h);
        }
      }
  }
}

TEST_CASE("interval primitivity rejects h not below k") {
  FiniteGroup g = make("S3");
  SubgroupLattice l = SubgroupLattice::enumerate(g);
  TableCache cache(l);
  try {
    interval_linearly_primitive(cache, 1, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HNotContained);
  }
}

TEST_CASE("lattice stabilizer route agrees with the element scan") {
  for (const char* name : {"S4", "D16", "S3xC3"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    TableCache cache(l);
    const CharacterTable& t = cache.root();
    for (NodeIndex h = 0; h < l.size(); ++h)
      for (std::size_t row = 0; row < t.size(); ++row) {
        Subgroup scan = pointwise_stabilizer(g, t, t.values[row], l.node(h));
        CHECK(l.node(cache.stabilizer(l.top(), t.values[row], h)) == scan);
      }
  }
}

TEST_CASE("table cache shares the root prime") {
  FiniteGroup g = make("S4");
  SubgroupLattice l = SubgroupLattice::enumerate(g);
  TableCache cache(l);
  for (NodeIndex k = 0; k < l.size(); ++k) {
    const TableCache::Entry& e = cache.get(k);
    CHECK(e.table.prime == cache.root().prime);
    CHECK(e.embedded.group.order() == l.node(k).order());
    CHECK(check_table(e.table).all());
    for (ElementIndex x = 0; x < e.embedded.group.order(); ++x) CHECK(e.local_of[e.embedded.to_parent[x]] == x);
  }
  CHECK(cache.built() == l.size());
}

TEST_CASE("isomorphic lattices, different primitivity") {
  FiniteGroup m = make("M4(2)"), c = make("C8xC2");
  SubgroupLattice lm = SubgroupLattice::enumerate(m), lc = SubgroupLattice::enumerate(c);
  CHECK(lattice_isomorphism(lm, lc).has_value());
  TableCache cm(lm), cc(lc);
  CHECK(interval_linearly_primitive(cm, lm.bottom(), lm.top()).has_value());
  CHECK_FALSE(interval_linearly_primitive(cc, lc.bottom(), lc.top()).has_value());
}

TEST_CASE("bottom-Boolean intervals are linearly primitive (order <= 32)") {
  for (const auto& e : catalog::sweep(32)) {
    FiniteGroup g = FiniteGroup::build(e.spec);
    CAPTURE(g.name());
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    TableCache cache(l);
    DualOreReport r = verify_dual_ore(cache);
    CHECK(r.bottom_boolean == r.intervals.size());
    CHECK(r.cross_checked == r.intervals.size());
    std::size_t bb = 0;
    for (NodeIndex h = 0; h < l.size(); ++h)
      for (NodeIndex k = h + 1; k < l.size(); ++k)
        if (l.leq(h, k) && is_bottom_boolean(make_interval(l, h, k))) ++bb;
    CHECK(r.bottom_boolean == bb);
    for (const DualOreRecord& rec : r.intervals) CHECK(rec.witness.verified);
  }
}

TEST_CASE("faithful components agree with subset search") {
  std::map<std::string, std::size_t> known = {{"C2xC2", 2}, {"C2^3", 3}, {"C8xC2", 2}, {"S4", 1},
                                              {"1", 0},     {"C3^2", 2}, {"C2^5", 5}};
  for (const auto& [name, m] : known) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    CharacterTable t = character_table(g);
    FaithfulComponents fc = min_faithful_components(g, t);
    CHECK(fc.m == m);
    CHECK(fc.rows.size() == m);
  }
  for (const auto& e : catalog::sweep(40)) {
    FiniteGroup g = FiniteGroup::build(e.spec);
    CAPTURE(g.name());
    CharacterTable t = character_table(g);
    if (t.size() > 16) continue;
    FaithfulComponents fc = min_faithful_components(g, t);
    CHECK(fc.m == brute_min_faithful(g, t));
    ElementSet k(g.order());
    k.set();
    for (std::size_t row : fc.rows) k &= value_kernel(g, t, row);
    CHECK(k.count() == 1);
    if (g.order() > 1) CHECK((fc.m == 1) == group_linearly_primitive(g, t).has_value());
  }
}

TEST_CASE("faithful components bounded by chain lengths (order <= 48)") {
  for (const auto& e : catalog::sweep(48)) {
    FiniteGroup g = FiniteGroup::build(e.spec);
    CAPTURE(g.name());
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    ChainBoundReport r = chain_bound_check(l, character_table(g));
    CHECK(r.holds);
    CHECK(r.components.m <= r.bottom_boolean.length());
    CHECK(r.bottom_boolean.length() <= r.distributive.length());
    CHECK(r.components.m <= r.core_free.length());
  }
  FiniteGroup c = make("C8xC2");
  ChainBoundReport r = chain_bound_check(SubgroupLattice::enumerate(c), character_table(c));
  CHECK(r.components.m == 2);
  CHECK(r.bottom_boolean.length() == 2);
}

TEST_CASE("induced characters keep the stabilizer (S4, D8)") {
  for (const char* name : {"S4", "D8"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    TableCache cache(l);
    InductionReport r = induction_stabilizer_suite(cache);
    CHECK(r.hypotheses > 0);
    CHECK(r.components >= r.hypotheses);
    CHECK(r.skipped_large == 0);
    BottomLiftReport b = verify_bottom_lift(cache);
    CHECK(b.nonvacuous > 0);
    for (const BottomLiftRecord& rec : b.samples)
      if (rec.bottom_interval_primitive) CHECK(rec.interval_primitive);
  }
}

TEST_CASE("survey of one-element bound and family filter") {
  SurveyReport one = primitivity_survey(1, {});
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].order == 1);
  CHECK(one.records[0].verdict);
  CHECK(one.all_true);
  CHECK(one.lattice_pair.lattices_isomorphic);
  CHECK(one.lattice_pair.first_primitive);
  CHECK_FALSE(one.lattice_pair.second_primitive);

  SurveyReport d = primitivity_survey(24, {"dihedral"});
  CHECK_FALSE(d.records.empty());
  for (const SurveyRecord& rec : d.records) {
    CHECK(rec.family == "dihedral");
    CHECK(rec.verdict);
    CHECK(rec.primitive_row.has_value() == rec.core_free_node.has_value());
  }
}

TEST_CASE("survey verdicts to order 32 and core-free witnesses") {
  SurveyReport r = primitivity_survey(32, {});
  CHECK(r.all_true);
  CHECK(r.skipped == 0);
  CHECK(r.surveyed == r.records.size());
  for (const SurveyRecord& rec : r.records) {
    CAPTURE(rec.name);
    CHECK(rec.verdict == (rec.primitive_row.has_value() == rec.core_free_node.has_value()));
    if (!rec.core_free_node || rec.order == 1) continue;
    FiniteGroup g = make(rec.name);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    const Subgroup& h = l.node(*rec.core_free_node);
    CHECK(h.order() == rec.core_free_order);
    CHECK(oracle::core(g, h.members()).count() == 1);
    CHECK(is_bottom_boolean(make_interval(l, *rec.core_free_node, l.top())));
  }
}

TEST_CASE("survey is deterministic across worker counts") {
  SurveyOptions serial, parallel;
  parallel.jobs = 3;
  std::string a = report::survey(primitivity_survey(40, {}, serial), false).dump();
  std::string b = report::survey(primitivity_survey(40, {}, parallel), false).dump();
  CHECK(a == b);
}

TEST_CASE("survey records limits as skipped") {
  SurveyOptions tight;
  tight.node_cap = 5;
  SurveyReport r = primitivity_survey(12, {}, tight);
  CHECK(r.skipped > 0);
  for (const SurveyRecord& rec : r.records)
    if (rec.skipped) CHECK_FALSE(rec.verdict);
}
