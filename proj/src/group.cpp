#include "sglab/group.hpp"

#include <algorithm>
#include <numeric>

#include "sglab/error.hpp"

namespace sglab {

std::vector<ElementIndex> Subgroup::elements() const {
  std::vector<ElementIndex> out;
  out.reserve(members_.count());
  for (auto i = members_.find_first(); i != ElementSet::npos; i = members_.find_next(i))
    out.push_back(static_cast<ElementIndex>(i));
  return out;
}

namespace {

constexpr ElementIndex kNone = static_cast<ElementIndex>(-1);

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
  h ^= x;
  h *= 1099511628211ull;
  return h;
}

}  // namespace

FiniteGroup FiniteGroup::build(const GroupSpec& spec, std::size_t limit) {
  if (limit == 0) throw Error(ErrorKind::OrderLimitExceeded, "order limit must be positive");
  std::vector<Permutation> gens;
  gens.reserve(spec.generators.size());
  for (const CycleWord& word : spec.generators) gens.push_back(Permutation::from_cycles(spec.degree, word));

  FiniteGroup g;
  g.name_ = spec.name;
  g.degree_ = spec.degree;
  g.elements_.push_back(Permutation::identity(spec.degree));
  g.lookup_.emplace(g.elements_[0], 0);

  // Breadth-first closure. right[i * ngens + s] = index of element_i * gen_s;
  // parent/via record one word for every element so the full table can be
  // filled without further hashing.
  const std::size_t ngens = gens.size();
  std::vector<ElementIndex> right;
  std::vector<ElementIndex> parent{kNone};
  std::vector<ElementIndex> via{kNone};
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation y = g.elements_[head] * gens[s];
      auto [it, inserted] = g.lookup_.try_emplace(y, static_cast<ElementIndex>(g.elements_.size()));
      if (inserted) {
        if (g.elements_.size() >= limit)
          throw Error(ErrorKind::OrderLimitExceeded,
                      "closure of '" + spec.name + "' exceeds order limit " + std::to_string(limit));
        g.elements_.push_back(std::move(y));
        parent.push_back(static_cast<ElementIndex>(head));
        via.push_back(static_cast<ElementIndex>(s));
      }
      right.push_back(it->second);
    }
  }

  for (const Permutation& p : gens) g.generators_.push_back(g.lookup_.at(p));

  const std::size_t n = g.elements_.size();
  g.cayley_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ElementIndex* row = &g.cayley_[i * n];
    row[0] = static_cast<ElementIndex>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = right[row[parent[j]] * ngens + via[j]];
  }
  g.finish();
  return g;
}

FiniteGroup::Embedded FiniteGroup::from_subgroup(const FiniteGroup& parent, const Subgroup& k) {
  std::vector<ElementIndex> gens = k.generators();
  if (gens.empty() && !k.is_trivial()) gens = subgroup_closure(parent, k.elements()).generators();

  Embedded out;
  FiniteGroup& g = out.group;
  g.name_ = parent.name_ + "/sub" + std::to_string(k.order());
  g.degree_ = parent.degree_;

  std::vector<ElementIndex> local_of(parent.order(), kNone);
  std::vector<ElementIndex>& to_parent = out.to_parent;
  to_parent.push_back(0);
  local_of[0] = 0;
  for (std::size_t head = 0; head < to_parent.size(); ++head) {
    for (ElementIndex s : gens) {
      ElementIndex y = parent.product(to_parent[head], s);
      if (local_of[y] == kNone) {
        local_of[y] = static_cast<ElementIndex>(to_parent.size());
        to_parent.push_back(y);
      }
    }
  }
  if (to_parent.size() != k.order())
    throw Error(ErrorKind::InternalInconsistency, "subgroup generators do not span the subgroup");

  const std::size_t n = to_parent.size();
  for (ElementIndex x : to_parent) g.elements_.push_back(parent.elements_[x]);
  for (ElementIndex s : gens) g.generators_.push_back(local_of[s]);
  g.cayley_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.cayley_[i * n + j] = local_of[parent.product(to_parent[i], to_parent[j])];
  for (std::size_t i = 0; i < n; ++i) g.lookup_.emplace(g.elements_[i], static_cast<ElementIndex>(i));
  g.finish();
  return out;
}

void FiniteGroup::finish() {
  const std::size_t n = elements_.size();

  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const ElementIndex* row = &cayley_[i * n];
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] == 0) {
        inverse_[i] = static_cast<ElementIndex>(j);
        break;
      }
  }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = 1;
    for (ElementIndex x = static_cast<ElementIndex>(i); x != 0; x = product(x, static_cast<ElementIndex>(i))) ++k;
    element_order_[i] = k;
    exponent_ = std::lcm(exponent_, element_order_[i]);
  }

  // Conjugation orbits under the generators.
  class_of_.assign(n, static_cast<std::size_t>(-1));
  std::vector<std::vector<ElementIndex>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != static_cast<std::size_t>(-1)) continue;
    std::vector<ElementIndex> orbit{static_cast<ElementIndex>(start)};
    class_of_[start] = orbits.size();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (ElementIndex s : generators_) {
        ElementIndex y = conjugate(orbit[head], s);
        if (class_of_[y] == static_cast<std::size_t>(-1)) {
          class_of_[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  classes_.clear();
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    for (ElementIndex x : orbits[c]) class_of_[x] = c;
    classes_.push_back({std::move(orbits[c]), 0});
    classes_.back().representative = classes_.back().members.front();
  }
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inverse_[classes_[c].representative]];

  std::uint64_t h = fnv_mix(1469598103934665603ull, n);
  for (ElementIndex x : cayley_) h = fnv_mix(h, x);
  hash_ = h;
}

std::int64_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Subgroup FiniteGroup::whole() const {
  ElementSet all(order());
  all.set();
  std::vector<ElementIndex> gens;
  for (ElementIndex s : generators_)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  return Subgroup(std::move(all), std::move(gens));
}

Subgroup FiniteGroup::trivial() const {
  ElementSet e(order());
  e.set(0);
  return Subgroup(std::move(e), {});
}

bool FiniteGroup::is_abelian() const { return classes_.size() == order(); }

bool FiniteGroup::is_cyclic() const {
  for (std::size_t k : element_order_)
    if (k == order()) return true;
  return false;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const ElementIndex> seed) {
  Subgroup current = g.trivial();
  for (ElementIndex x : seed)
    if (!current.contains(x)) current = extend_subgroup(g, current, x);
  return current;
}

Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& s, ElementIndex x) {
  if (s.contains(x)) return s;
  if (s.generators().empty() && !s.is_trivial()) return extend_subgroup(g, subgroup_closure(g, s.elements()), x);
  std::vector<ElementIndex> gens = s.generators();
  gens.push_back(x);

  // The result is a union of cosets s*r; it is closed once every
  // representative times every generator lands in a known coset.
  const std::vector<ElementIndex> base = s.elements();
  ElementSet members = s.members();
  std::vector<ElementIndex> reps{0};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (ElementIndex t : gens) {
      ElementIndex y = g.product(reps[head], t);
      if (members.test(y)) continue;
      reps.push_back(y);
      for (ElementIndex h : base) members.set(g.product(h, y));
    }
  }
  return Subgroup(std::move(members), std::move(gens));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, ElementIndex x) {
  ElementSet members(g.order());
  members.set(0);
  for (ElementIndex y = x; y != 0; y = g.product(y, x)) members.set(y);
  std::vector<ElementIndex> gens;
  if (x != 0) gens.push_back(x);
  return Subgroup(std::move(members), std::move(gens));
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  ElementSet m = a.members() & b.members();
  return subgroup_closure(g, Subgroup(std::move(m), {}).elements());
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

namespace {

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& set, ElementIndex x) {
  ElementSet out(set.size());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.set(g.conjugate(static_cast<ElementIndex>(i), x));
  return out;
}

}  // namespace

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  // Intersect with conjugates by the ambient generators until stable; the
  // fixed point is normal in the ambient group and contains the core.
  std::vector<ElementIndex> gens = ambient.generators();
  if (gens.empty() && !ambient.is_trivial()) gens = subgroup_closure(g, ambient.elements()).generators();
  ElementSet core = h.members();
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementIndex s : gens) {
      ElementSet next = core & conjugate_set(g, core, s);
      if (next != core) {
        core = std::move(next);
        changed = true;
      }
    }
  }
  return subgroup_closure(g, Subgroup(core, {}).elements());
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) { return normal_core(g, h, g.whole()); }

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementIndex s : g.generators())
    if (conjugate_set(g, h.members(), s) != h.members()) return false;
  return true;
}

bool is_core_free(const FiniteGroup& g, const Subgroup& h) { return normal_core(g, h).is_trivial(); }

bool is_core_free(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  return normal_core(g, h, ambient).is_trivial();
}

bool is_closed_subset(const FiniteGroup& g, const ElementSet& members) {
  if (members.size() != g.order() || !members.test(0)) return false;
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    if (!members.test(g.inverse(static_cast<ElementIndex>(i)))) return false;
    for (auto j = members.find_first(); j != ElementSet::npos; j = members.find_next(j))
      if (!members.test(g.product(static_cast<ElementIndex>(i), static_cast<ElementIndex>(j)))) return false;
  }
  return true;
}

}  // namespace sglab
