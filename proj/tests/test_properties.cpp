#include <doctest.h>

#include "oracles.hpp"
#include "sglab/catalog.hpp"
#include "sglab/error.hpp"
#include "sglab/lemmas.hpp"

using namespace sglab;

namespace {

FiniteGroup make(const std::string& name) { return FiniteGroup::build(catalog::by_name(name)); }

struct Loaded {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<SubgroupLattice> lattice;
  std::unique_ptr<TableCache> cache;
};

// Random (group, H <= K, irreducible of K) drawn from a pool of catalog
// groups; groups are built lazily and kept.
class SampleGen {
public:
  SampleGen(std::size_t bound, std::uint64_t seed) : pool_(catalog::sweep(bound)), loaded_(pool_.size()), rng_(seed) {}

  struct Sample {
    TableCache* cache;
    NodeIndex h, k;
    std::size_t row;
    std::string name;
  };

  Sample next() {
    std::size_t gi = pick(pool_.size());
    Loaded& l = loaded_[gi];
    if (!l.group) {
      l.group = std::make_unique<FiniteGroup>(FiniteGroup::build(pool_[gi].spec));
      l.lattice = std::make_unique<SubgroupLattice>(SubgroupLattice::enumerate(*l.group));
      l.cache = std::make_unique<TableCache>(*l.lattice);
    }
    const SubgroupLattice& lat = *l.lattice;
    NodeIndex h = pick(lat.size());
    std::vector<NodeIndex> above;
    const NodeSet& up = lat.up_set(h);
    for (auto k = up.find_first(); k != NodeSet::npos; k = up.find_next(k)) above.push_back(k);
    NodeIndex k = above[pick(above.size())];
    return {l.cache.get(), h, k, pick(l.cache->table(k).size()), pool_[gi].spec.name};
  }

private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::vector<catalog::Entry> pool_;
  std::vector<Loaded> loaded_;
  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("every property holds exhaustively on small groups") {
  for (const char* name : {"S3", "S4", "D8", "Q8", "A4", "C2^3", "C12", "Dic12"}) {
    CAPTURE(name);
    FiniteGroup g = make(name);
    SubgroupLattice l = SubgroupLattice::enumerate(g);
    TableCache cache(l);
    LemmaReport r = lemma_suite(cache);
    CHECK(r.samples > 0);
    CHECK(r.lemmas.size() == 12);
    for (const auto& [property, tally] : r.lemmas) {
      CAPTURE(property);
      CHECK(tally.checked > 0);
      CHECK(tally.nonvacuous <= tally.checked);
    }
  }
}

TEST_CASE("every property has non-vacuous instances on S4") {
  FiniteGroup g = make("S4");
  SubgroupLattice l = SubgroupLattice::enumerate(g);
  TableCache cache(l);
  LemmaReport r = lemma_suite(cache);
  std::size_t expected = 0;
  for (NodeIndex h = 0; h < l.size(); ++h)
    for (NodeIndex k = h; k < l.size(); ++k)
      if (l.leq(h, k)) expected += cache.table(k).size();
  CHECK(r.samples == expected);
  for (const auto& [property, tally] : r.lemmas) {
    CAPTURE(property);
    CHECK(tally.nonvacuous > 0);
  }
}

TEST_CASE("random samples over the catalog to order 48") {
  SampleGen gen(48, 99);
  LemmaReport r;
  for (int i = 0; i < 300; ++i) {
    SampleGen::Sample s = gen.next();
    CAPTURE(s.name);
    CAPTURE(s.h);
    CAPTURE(s.k);
    CAPTURE(s.row);
    CHECK_NOTHROW(check_lemma_sample(*s.cache, s.h, s.k, s.row, r));
  }
  CHECK(r.samples == 300);
}

TEST_CASE("fixed dimensions shrink along chains and the stabilizer keeps them") {
  SampleGen gen(32, 7);
  for (int i = 0; i < 300; ++i) {
    SampleGen::Sample s = gen.next();
    CAPTURE(s.name);
    TableCache& cache = *s.cache;
    const SubgroupLattice& l = cache.lattice();
    const auto& chi = cache.table(s.k).values[s.row];
    std::size_t base = cache.fixed_dim(s.k, chi, s.h);
    NodeIndex stab = cache.stabilizer(s.k, chi, s.h);
    CHECK(l.leq(s.h, stab));
    CHECK(l.leq(stab, s.k));
    CHECK(cache.fixed_dim(s.k, chi, stab) == base);
    for (NodeIndex n = 0; n < l.size(); ++n) {
      if (!l.leq(s.h, n) || !l.leq(n, s.k)) continue;
      std::size_t d = cache.fixed_dim(s.k, chi, n);
      CHECK(d <= base);
      CHECK((d == base) == l.leq(n, stab));
    }
  }
}

TEST_CASE("distributive intervals have Boolean ends") {
  SampleGen gen(64, 13);
  for (int i = 0; i < 400; ++i) {
    SampleGen::Sample s = gen.next();
    if (s.h == s.k) continue;
    const SubgroupLattice& l = s.cache->lattice();
    IntervalClass c = classify(make_interval(l, s.h, s.k));
    if (c.distributive) {
      CHECK(c.top_boolean);
      CHECK(c.bottom_boolean);
    }
    if (c.boolean) CHECK(c.distributive);
    CHECK(l.leq(s.h, c.bottom_interval_top));
    CHECK(l.leq(c.top_interval_bottom, s.k));
  }
}

TEST_CASE("samples with H not below K are rejected") {
  FiniteGroup g = make("S3");
  SubgroupLattice l = SubgroupLattice::enumerate(g);
  TableCache cache(l);
  LemmaReport r;
  CHECK_THROWS_AS(check_lemma_sample(cache, 1, 2, 0, r), Error);
}
