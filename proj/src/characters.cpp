#include "sglab/characters.hpp"

#include <algorithm>
#include <numeric>

#include "sglab/error.hpp"

namespace sglab {

StructureConstants class_structure_constants(const FiniteGroup& g) {
  const auto& classes = g.classes();
  StructureConstants a(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    ElementIndex z = classes[k].representative;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      ElementIndex y = g.product(g.inverse(x), z);
      ++a(g.class_of(x), g.class_of(y), k);
    }
  }
  return a;
}

std::size_t lift(Residue x, std::size_t max) {
  if (x > max)
    throw Error(ErrorKind::LiftOutOfRange,
                "residue " + std::to_string(x) + " does not lift into [0, " + std::to_string(max) + "]");
  return x;
}

namespace {

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Eigenvector of the class algebra, scaled so the identity entry is 1, into
// an irreducible character.
std::vector<Residue> character_from_central(const PrimeField& f, const CharacterTable& t, std::vector<Residue> v) {
  const std::size_t r = v.size();
  if (v[0] == 0) throw Error(ErrorKind::InternalInconsistency, "central character vanishes at the identity");
  Residue s = f.inv(v[0]);
  for (Residue& x : v) x = f.mul(x, s);

  Residue sum = 0;
  for (std::size_t k = 0; k < r; ++k)
    sum = f.add(sum, f.mul(f.mul(v[k], v[t.inverse_class[k]]), f.inv(f.reduce(static_cast<std::int64_t>(t.class_sizes[k])))));
  if (sum == 0) throw Error(ErrorKind::InternalInconsistency, "degree normalisation vanishes");
  Residue d2 = f.mul(f.reduce(static_cast<std::int64_t>(t.group_order)), f.inv(sum));
  std::size_t square = lift(d2, t.group_order);
  std::size_t d = isqrt(square);
  if (d == 0 || d * d != square || t.group_order % d != 0)
    throw Error(ErrorKind::InternalInconsistency, "degree squared " + std::to_string(square) + " is not a valid degree");

  std::vector<Residue> chi(r);
  for (std::size_t k = 0; k < r; ++k)
    chi[k] = f.mul(f.mul(static_cast<Residue>(d), v[k]), f.inv(f.reduce(static_cast<std::int64_t>(t.class_sizes[k]))));
  return chi;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const TableOptions& options) {
  CharacterTable t;
  t.group_order = g.order();
  t.exponent = g.exponent();
  t.prime = options.prime ? *options.prime : dixon_prime(t.exponent, t.group_order);
  if ((t.prime - 1) % t.exponent != 0 || t.prime <= 2 * t.group_order)
    throw Error(ErrorKind::InternalInconsistency, "prime " + std::to_string(t.prime) + " is not admissible for " + g.name());
  const PrimeField f(t.prime);
  t.omega = f.primitive_root_of_unity(t.exponent);

  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  for (std::size_t c = 0; c < r; ++c) {
    t.class_sizes.push_back(classes[c].size());
    t.class_reps.push_back(classes[c].representative);
    t.inverse_class.push_back(g.inverse_class(c));
  }
  t.class_of.resize(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) t.class_of[x] = g.class_of(x);

  std::mt19937_64 rng(options.seed ? *options.seed : g.hash());
  std::uniform_int_distribution<Residue> draw(0, t.prime - 1);

  // Random combinations of the class-sum matrices split the class algebra
  // until every common eigenspace is a line.
  std::vector<Subspace> pending{whole_space(r)};
  std::vector<std::vector<Residue>> lines;
  if (r == 1) {
    lines.push_back(pending.front().vectors.front());
    pending.clear();
  }
  for (std::size_t round = 0; round < 256 && !pending.empty(); ++round) {
    std::vector<Residue> c(r);
    for (Residue& x : c) x = draw(rng);
    ModMatrix m(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      ElementIndex z = classes[k].representative;
      for (ElementIndex x = 0; x < g.order(); ++x) {
        ElementIndex y = g.product(g.inverse(x), z);
        Residue& entry = m(g.class_of(y), k);
        entry = f.add(entry, c[g.class_of(x)]);
      }
    }
    std::vector<Subspace> next;
    for (const Subspace& w : pending) {
      for (Subspace& part : split_eigenspaces(f, m, w, rng)) {
        if (part.dim() == 1)
          lines.push_back(std::move(part.vectors.front()));
        else
          next.push_back(std::move(part));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty() || lines.size() != r)
    throw Error(ErrorKind::InternalInconsistency, "class algebra did not split for " + g.name());

  std::vector<std::pair<std::size_t, std::vector<Residue>>> rows;
  for (auto& v : lines) {
    std::vector<Residue> chi = character_from_central(f, t, std::move(v));
    std::size_t degree = chi[0];
    rows.emplace_back(degree, std::move(chi));
  }
  std::sort(rows.begin(), rows.end());
  for (auto& [degree, chi] : rows) {
    t.degrees.push_back(degree);
    t.values.push_back(std::move(chi));
  }

  TableChecks checks = check_table(t);
  if (!checks.all()) throw Error(ErrorKind::InternalInconsistency, "character table of " + g.name() + " fails its checks");
  return t;
}

TableChecks check_table(const CharacterTable& t) {
  TableChecks out;
  const PrimeField f = t.field();
  const std::size_t r = t.class_sizes.size();
  out.class_count = t.values.size() == r && t.degrees.size() == r;
  if (!out.class_count) return out;

  std::size_t squares = 0;
  out.degrees_divide_order = true;
  for (std::size_t d : t.degrees) {
    squares += d * d;
    if (d == 0 || t.group_order % d != 0) out.degrees_divide_order = false;
  }
  out.degree_square_sum = squares == t.group_order;
  out.trivial_first = r > 0 && std::all_of(t.values[0].begin(), t.values[0].end(), [](Residue x) { return x == 1; });

  const Residue order = f.reduce(static_cast<std::int64_t>(t.group_order));
  out.row_orthogonality = true;
  for (std::size_t i = 0; i < r && out.row_orthogonality; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Residue sum = 0;
      for (std::size_t k = 0; k < r; ++k)
        sum = f.add(sum, f.mul(f.reduce(static_cast<std::int64_t>(t.class_sizes[k])),
                               f.mul(t.values[i][k], t.values[j][t.inverse_class[k]])));
      if (sum != (i == j ? order : 0)) {
        out.row_orthogonality = false;
        break;
      }
    }

  out.column_orthogonality = true;
  for (std::size_t k = 0; k < r && out.column_orthogonality; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      Residue sum = 0;
      for (std::size_t i = 0; i < r; ++i) sum = f.add(sum, f.mul(t.values[i][k], t.values[i][t.inverse_class[l]]));
      Residue expect = k == l ? f.mul(order, f.inv(f.reduce(static_cast<std::int64_t>(t.class_sizes[k])))) : 0;
      if (sum != expect) {
        out.column_orthogonality = false;
        break;
      }
    }
  return out;
}

CharacterVector row_vector(const CharacterTable& t, std::size_t row) {
  return CharacterVector{t.values.at(row), t.degrees.at(row)};
}

CharacterVector make_vector(const CharacterTable& t, std::vector<Residue> values) {
  std::size_t degree = lift(values.at(0), t.prime / 2);
  return CharacterVector{std::move(values), degree};
}

std::size_t fixed_dim(const CharacterTable& t, std::span<const Residue> chi, const Subgroup& k) {
  const PrimeField f = t.field();
  std::uint64_t acc = 0;
  for (ElementIndex x : k.elements()) acc += chi[t.class_of[x]];
  Residue mean = f.mul(f.reduce(static_cast<std::int64_t>(acc % t.prime)), f.inv(f.reduce(static_cast<std::int64_t>(k.order()))));
  return lift(mean, lift(chi[0], t.prime / 2));
}

std::size_t fixed_dim(const CharacterTable& t, std::size_t row, const Subgroup& k) {
  return fixed_dim(t, std::span<const Residue>(t.values.at(row)), k);
}

Subgroup pointwise_stabilizer(const FiniteGroup& g, const CharacterTable& t, std::span<const Residue> chi,
                              const Subgroup& h) {
  const std::size_t base = fixed_dim(t, chi, h);
  ElementSet in = h.members();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (in.test(x)) continue;
    Subgroup hx = extend_subgroup(g, h, x);
    // V^<H,x> = V^H forces the same for every y in <H, x>.
    if (fixed_dim(t, chi, hx) == base) in |= hx.members();
  }
  if (!is_closed_subset(g, in))
    throw Error(ErrorKind::NotASubgroup, "pointwise stabilizer is not closed under products");
  std::vector<ElementIndex> seed;
  for (auto i = in.find_first(); i != ElementSet::npos; i = in.find_next(i)) seed.push_back(static_cast<ElementIndex>(i));
  return subgroup_closure(g, seed);
}

Subgroup kernel(const FiniteGroup& g, const CharacterTable& t, std::span<const Residue> chi) {
  const std::size_t degree = lift(chi[0], t.prime / 2);
  ElementSet in(g.order());
  for (const ConjugacyClass& c : g.classes()) {
    if (fixed_dim(t, chi, cyclic_subgroup(g, c.representative)) != degree) continue;
    for (ElementIndex x : c.members) in.set(x);
  }
  std::vector<ElementIndex> seed;
  for (auto i = in.find_first(); i != ElementSet::npos; i = in.find_next(i)) seed.push_back(static_cast<ElementIndex>(i));
  Subgroup k = subgroup_closure(g, seed);
  if (k.members() != in) throw Error(ErrorKind::InternalInconsistency, "kernel is not a subgroup");
  return k;
}

Subgroup kernel(const FiniteGroup& g, const CharacterTable& t, std::size_t row) {
  return kernel(g, t, std::span<const Residue>(t.values.at(row)));
}

std::size_t inner_product(const CharacterTable& t, std::span<const Residue> a, std::span<const Residue> b) {
  const PrimeField f = t.field();
  Residue sum = 0;
  for (std::size_t k = 0; k < t.class_sizes.size(); ++k)
    sum = f.add(sum, f.mul(f.reduce(static_cast<std::int64_t>(t.class_sizes[k])), f.mul(a[k], b[t.inverse_class[k]])));
  Residue value = f.mul(sum, f.inv(f.reduce(static_cast<std::int64_t>(t.group_order))));
  return lift(value, t.prime / 2);
}

std::vector<std::size_t> decompose(const CharacterTable& t, std::span<const Residue> chi) {
  std::vector<std::size_t> out;
  for (const auto& row : t.values) out.push_back(inner_product(t, std::span<const Residue>(row), chi));
  return out;
}

CharacterVector restrict_character(const CharacterTable& table_g, std::span<const Residue> chi,
                                   std::span<const ElementIndex> to_parent, const CharacterTable& table_k) {
  std::vector<Residue> values(table_k.class_sizes.size());
  for (std::size_t c = 0; c < values.size(); ++c)
    values[c] = chi[table_g.class_of[to_parent[table_k.class_reps[c]]]];
  return make_vector(table_k, std::move(values));
}

CharacterVector induced_character(const CharacterTable& table_g, std::span<const ElementIndex> to_parent,
                                  const CharacterTable& table_k, std::span<const Residue> u) {
  if (table_g.prime != table_k.prime)
    throw Error(ErrorKind::InternalInconsistency, "induction between tables over different primes");
  const PrimeField f = table_g.field();
  const std::size_t r = table_g.class_sizes.size();
  std::vector<Residue> sums(r, 0);
  for (ElementIndex y = 0; y < to_parent.size(); ++y) {
    std::size_t c = table_g.class_of[to_parent[y]];
    sums[c] = f.add(sums[c], u[table_k.class_of[y]]);
  }
  const Residue index_factor =
      f.mul(f.reduce(static_cast<std::int64_t>(table_g.group_order)), f.inv(f.reduce(static_cast<std::int64_t>(to_parent.size()))));
  std::vector<Residue> values(r);
  for (std::size_t c = 0; c < r; ++c)
    values[c] = f.mul(f.mul(index_factor, sums[c]), f.inv(f.reduce(static_cast<std::int64_t>(table_g.class_sizes[c]))));
  return make_vector(table_g, std::move(values));
}

bool frobenius_check(const CharacterTable& table_g, std::span<const ElementIndex> to_parent,
                     const CharacterTable& table_k, std::span<const Residue> u, std::span<const Residue> chi) {
  CharacterVector ind = induced_character(table_g, to_parent, table_k, u);
  CharacterVector res = restrict_character(table_g, chi, to_parent, table_k);
  return inner_product(table_g, chi, ind.values) == inner_product(table_k, res.values, u);
}

bool index_identity_check(const CharacterTable& t, const Subgroup& h) {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) sum += t.degrees[i] * fixed_dim(t, i, h);
  return sum * h.order() == t.group_order;
}

CharacterVector permutation_character(const FiniteGroup& g, const CharacterTable& t) {
  std::vector<Residue> values;
  for (ElementIndex rep : t.class_reps) {
    std::size_t fixed = 0;
    const Permutation& p = g.element(rep);
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (p(static_cast<Point>(i)) == i) ++fixed;
    values.push_back(static_cast<Residue>(fixed % t.prime));
  }
  return make_vector(t, std::move(values));
}

CharacterVector regular_character(const CharacterTable& t) {
  std::vector<Residue> values(t.class_sizes.size(), 0);
  values[0] = static_cast<Residue>(t.group_order % t.prime);
  return make_vector(t, std::move(values));
}

std::size_t orbit_count(const FiniteGroup& g) {
  std::vector<std::size_t> parent(g.degree());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementIndex s : g.generators())
    for (std::size_t i = 0; i < g.degree(); ++i) parent[find(i)] = find(g.element(s)(static_cast<Point>(i)));
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (find(i) == i) ++count;
  return count;
}

}  // namespace sglab
