#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "sglab/catalog.hpp"
#include "sglab/error.hpp"
#include "sglab/spec_io.hpp"

using namespace sglab;

namespace {

FiniteGroup make(const std::string& name) { return FiniteGroup::build(catalog::by_name(name)); }

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : g.classes()) out.insert(c.size());
  return out;
}

}  // namespace

TEST_CASE("permutation products compose left to right") {
  Permutation a = Permutation::from_cycles(3, {{1, 2}});
  Permutation b = Permutation::from_cycles(3, {{2, 3}});
  // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  CHECK((a * b).to_string() == "(1 3 2)");
  CHECK((b * a).to_string() == "(1 2 3)");
  CHECK(Permutation::identity(4).to_string() == "()");
  CHECK((a * a).is_identity());
  Permutation c = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.cycles() == CycleWord{{1, 2, 3}, {4, 5}});
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}}), Error);
  try {
    Permutation::from_cycles(3, {{1, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedSpec);
    CHECK(exit_code_for(e.kind()) == 2);
  }
}

TEST_CASE("catalog group orders") {
  std::map<std::string, std::size_t> expected = {
      {"1", 1},      {"C6", 6},     {"S3", 6},      {"S4", 24},    {"A4", 12},    {"A5", 60},
      {"S5", 120},   {"D8", 8},     {"D16", 16},    {"Q8", 8},     {"Q16", 16},   {"Dic12", 12},
      {"C2^3", 8},   {"C3^2", 9},   {"M4(2)", 16},  {"C8xC2", 16}, {"S3xC3", 18}, {"C2xC2", 4}};
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    CHECK(make(name).order() == order);
  }
  CHECK_THROWS_AS(catalog::by_name("X9"), Error);
}

TEST_CASE("element 0 is the identity and generators come first") {
  FiniteGroup g = make("S4");
  CHECK(g.element(0).is_identity());
  CHECK(g.generators().size() == 2);
  CHECK(g.element(g.generators()[0]).to_string() == "(1 2)");
  CHECK(g.exponent() == 12);
  CHECK_FALSE(g.is_abelian());
  CHECK(make("C6").is_cyclic());
  CHECK_FALSE(make("C2xC2").is_cyclic());
}

TEST_CASE("order limit") {
  try {
    FiniteGroup::build(catalog::symmetric(6), 100);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderLimitExceeded);
    CHECK(exit_code_for(e.kind()) == 3);
  }
  CHECK(FiniteGroup::build(catalog::symmetric(4), 24).order() == 24);
}

TEST_CASE("conjugacy classes agree with direct conjugation") {
  for (const char* name : {"S3", "S4", "A4", "D8", "Q8", "Q16", "M4(2)", "A5", "S3xC3"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    std::size_t total = 0;
    for (const ConjugacyClass& c : g.classes()) {
      std::set<ElementIndex> direct = oracle::conjugacy_class(g, c.representative);
      CHECK(std::set<ElementIndex>(c.members.begin(), c.members.end()) == direct);
      CHECK(c.representative == c.members.front());
      CHECK(g.order() % c.size() == 0);
      for (ElementIndex x : c.members) CHECK(g.class_of(x) == g.class_of(c.representative));
      total += c.size();
    }
    CHECK(total == g.order());
    CHECK(g.classes().front().members == std::vector<ElementIndex>{0});
  }
  CHECK(class_sizes(make("S4")) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(make("S3")) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(class_sizes(make("A5")) == std::multiset<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("classes are sorted by size then smallest member") {
  FiniteGroup g = make("S5");
  for (std::size_t c = 1; c < g.classes().size(); ++c) {
    const auto& a = g.classes()[c - 1];
    const auto& b = g.classes()[c];
    CHECK((a.size() < b.size() || (a.size() == b.size() && a.representative < b.representative)));
  }
}

TEST_CASE("inverse classes") {
  FiniteGroup g = make("C8xC2");
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    ElementIndex x = g.classes()[c].representative;
    CHECK(g.class_of(g.inverse(x)) == g.inverse_class(c));
  }
}

TEST_CASE("Cayley table is a Latin square and associative (exhaustive, order <= 64)") {
  for (const auto& e : catalog::sweep(24)) {
    FiniteGroup g = FiniteGroup::build(e.spec);
    CAPTURE(g.name());
    const std::size_t n = g.order();
    for (ElementIndex a = 0; a < n; ++a) {
      ElementSet row(n), col(n);
      for (ElementIndex b = 0; b < n; ++b) {
        row.set(g.product(a, b));
        col.set(g.product(b, a));
      }
      REQUIRE(row.all());
      REQUIRE(col.all());
      REQUIRE(g.product(a, g.inverse(a)) == 0);
    }
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c)
          REQUIRE(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
  }
  for (const char* name : {"M4(2)", "Q16", "D16", "C4xC4xC2"}) {
    FiniteGroup g = make(name);
    CAPTURE(name);
    for (ElementIndex a = 0; a < g.order(); ++a)
      for (ElementIndex b = 0; b < g.order(); ++b)
        for (ElementIndex c = 0; c < g.order(); ++c)
          REQUIRE(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
  }
}

TEST_CASE("Cayley table matches permutation products (random sample)") {
  std::mt19937_64 rng(7);
  for (const char* name : {"S5", "A5xC2", "C2xS4"}) {
    FiniteGroup g = make(name);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g.order() - 1));
    for (int i = 0; i < 10000; ++i) {
      ElementIndex a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(g.element(g.product(a, b)) == g.element(a) * g.element(b));
      REQUIRE(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
    }
  }
}

TEST_CASE("subgroup closure agrees with fixed-point closure and is idempotent") {
  std::mt19937_64 rng(11);
  for (const char* name : {"S4", "D16", "Q16", "A5", "C2^3"}) {
    FiniteGroup g = make(name);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g.order() - 1));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<ElementIndex> seed;
      for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) seed.push_back(pick(rng));
      Subgroup s = subgroup_closure(g, seed);
      CHECK(s.members() == oracle::closure(g, seed));
      CHECK(subgroup_closure(g, s.generators()) == s);
      CHECK(subgroup_closure(g, s.elements()) == s);
      CHECK(is_closed_subset(g, s.members()));
      CHECK(g.order() % s.order() == 0);
    }
  }
}

TEST_CASE("extend_subgroup builds <S, x>") {
  FiniteGroup g = make("S4");
  Subgroup s = cyclic_subgroup(g, g.generators()[0]);
  CHECK(s.order() == 2);
  Subgroup t = extend_subgroup(g, s, g.generators()[1]);
  CHECK(t.order() == 24);
  CHECK(extend_subgroup(g, t, 5) == t);
}

TEST_CASE("intersection and normal core agree with brute force") {
  for (const char* name : {"S3", "S4", "D8", "Q8", "A4", "D16", "S3xC3", "C2xA4"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    std::set<ElementSet> subs = oracle::all_subgroups(g);
    std::vector<Subgroup> list;
    for (const ElementSet& s : subs) {
      std::vector<ElementIndex> seed;
      for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) seed.push_back(static_cast<ElementIndex>(i));
      list.push_back(subgroup_closure(g, seed));
    }
    for (const Subgroup& h : list) {
      ElementSet c = oracle::core(g, h.members());
      CHECK(normal_core(g, h).members() == c);
      CHECK(is_normal(g, h) == (c == h.members()));
      CHECK(is_core_free(g, h) == (c.count() == 1));
    }
    for (std::size_t i = 0; i < list.size(); i += 3)
      for (std::size_t j = 0; j < list.size(); j += 2)
        CHECK(intersect(g, list[i], list[j]).members() == (list[i].members() & list[j].members()));
  }
}

TEST_CASE("relative normal core") {
  FiniteGroup g = make("S4");
  Subgroup h = cyclic_subgroup(g, g.generators()[0]);
  Subgroup ambient = extend_subgroup(g, h, static_cast<ElementIndex>(g.index_of(Permutation::from_cycles(4, {{3, 4}}))));
  CHECK(ambient.order() == 4);
  CHECK(normal_core(g, h, ambient) == h);  // abelian ambient
  CHECK(normal_core(g, h).is_trivial());
  CHECK_FALSE(is_core_free(g, h, ambient));
}

TEST_CASE("subgroups as standalone groups") {
  FiniteGroup g = make("S4");
  Subgroup h = extend_subgroup(g, cyclic_subgroup(g, g.generators()[0]),
                               static_cast<ElementIndex>(g.index_of(Permutation::from_cycles(4, {{1, 2, 3}}))));
  REQUIRE(h.order() == 6);
  FiniteGroup::Embedded e = FiniteGroup::from_subgroup(g, h);
  CHECK(e.group.order() == 6);
  CHECK(e.group.classes().size() == 3);
  for (ElementIndex a = 0; a < 6; ++a) {
    CHECK(h.contains(e.to_parent[a]));
    for (ElementIndex b = 0; b < 6; ++b)
      CHECK(e.to_parent[e.group.product(a, b)] == g.product(e.to_parent[a], e.to_parent[b]));
  }
  FiniteGroup::Embedded t = FiniteGroup::from_subgroup(g, g.trivial());
  CHECK(t.group.order() == 1);
}

TEST_CASE("group spec text and JSON forms") {
  GroupSpec s = parse_group_spec_text("name=S3; degree=3; gens=(1 2 3), (1 2)");
  CHECK(s.name == "S3");
  CHECK(s.degree == 3);
  REQUIRE(s.generators.size() == 2);
  CHECK(s.generators[0] == CycleWord{{1, 2, 3}});
  CHECK(FiniteGroup::build(s).order() == 6);

  GroupSpec j = parse_group_spec(R"({"name":"V4","degree":4,"generators":[[[1,2],[3,4]],[[1,3],[2,4]]]})");
  CHECK(j.name == "V4");
  CHECK(FiniteGroup::build(j).order() == 4);
  CHECK(parse_group_spec(to_text(j)).generators == j.generators);
  CHECK(parse_group_spec_json(to_json(s)).generators == s.generators);

  CHECK(parse_generator_list("(1 2)(3 4), ()").size() == 2);
  CHECK_THROWS_AS(parse_generator_list("(1 2"), Error);
  CHECK_THROWS_AS(parse_generator_list("(1 a)"), Error);
  CHECK_THROWS_AS(FiniteGroup::build(parse_group_spec_text("degree=3; gens=(1 4)")), Error);
  CHECK_THROWS_AS(parse_group_spec_text("gens=(1 2)"), Error);
  CHECK_THROWS_AS(parse_group_spec_text("degree=x; gens=(1 2)"), Error);
  CHECK_THROWS_AS(parse_group_spec("{\"degree\": 2"), Error);
}

TEST_CASE("catalog sweep is sorted and filtered") {
  auto all = catalog::sweep(32);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].order <= all[i].order);
  for (const auto& e : all) CHECK(FiniteGroup::build(e.spec).order() == e.order);
  auto dihedral = catalog::sweep(32, {"dihedral"});
  CHECK_FALSE(dihedral.empty());
  for (const auto& e : dihedral) CHECK(e.family == "dihedral");
  auto one = catalog::sweep(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front().order == 1);
}
