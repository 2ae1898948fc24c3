#include "sglab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

#include "sglab/error.hpp"
#include "sglab/modp.hpp"

namespace sglab::catalog {

namespace {

CycleWord cycle_range(std::size_t first, std::size_t last) {
  Cycle c;
  for (std::size_t i = first; i <= last; ++i) c.push_back(i);
  return c.size() > 1 ? CycleWord{c} : CycleWord{};
}

// Right regular action of a group given by a multiplication rule on
// {0, ..., order-1}; point i+1 represents element i.
GroupSpec regular(std::string name, std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                  const std::vector<std::size_t>& gens) {
  GroupSpec spec{std::move(name), order, {}};
  for (std::size_t g : gens) {
    std::vector<Point> images(order);
    for (std::size_t i = 0; i < order; ++i) images[i] = static_cast<Point>(mul(i, g));
    spec.generators.push_back(Permutation(std::move(images)).cycles());
  }
  return spec;
}

std::size_t parse_number(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::MalformedSpec, "cannot parse group name '" + whole + "'");
  return std::stoul(s);
}

}  // namespace

GroupSpec trivial() { return GroupSpec{"1", 1, {}}; }

GroupSpec cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::MalformedSpec, "cyclic group needs n >= 1");
  GroupSpec spec{"C" + std::to_string(n), n, {}};
  if (n > 1) spec.generators.push_back(cycle_range(1, n));
  return spec;
}

GroupSpec dihedral(std::size_t order) {
  if (order < 2 || order % 2) throw Error(ErrorKind::MalformedSpec, "dihedral group order must be even and >= 2");
  const std::size_t n = order / 2;
  std::string name = "D" + std::to_string(order);
  if (n == 1) return GroupSpec{name, 2, {{{1, 2}}}};
  if (n == 2) return GroupSpec{name, 4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}};
  CycleWord reflection;
  for (std::size_t i = 1; i < n + 1 - i; ++i) reflection.push_back({i, n + 1 - i});
  return GroupSpec{name, n, {cycle_range(1, n), reflection}};
}

GroupSpec dicyclic(std::size_t order) {
  if (order < 4 || order % 4) throw Error(ErrorKind::MalformedSpec, "dicyclic group order must be a multiple of 4");
  const std::size_t n = order / 4;
  const std::size_t m = 2 * n;
  // Element a^i x^j has index i + m*j.
  auto mul = [n, m](std::size_t u, std::size_t v) {
    std::size_t i = u % m, j = u / m, k = v % m, l = v / m;
    std::size_t e = j ? (i + m - k) % m : (i + k) % m;
    if (j && l) return (e + n) % m;
    return e + m * (j + l);
  };
  std::string name = (order == 8 ? "Q8" : "Q" + std::to_string(order));
  return regular(name, order, mul, {1, m});
}

GroupSpec symmetric(std::size_t n) {
  GroupSpec spec{"S" + std::to_string(n), n, {}};
  if (n >= 2) spec.generators.push_back({{1, 2}});
  if (n >= 3) spec.generators.push_back(cycle_range(1, n));
  return spec;
}

GroupSpec alternating(std::size_t n) {
  GroupSpec spec{"A" + std::to_string(n), n, {}};
  for (std::size_t k = 3; k <= n; ++k) spec.generators.push_back({{1, 2, k}});
  return spec;
}

GroupSpec elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k == 0) throw Error(ErrorKind::MalformedSpec, "elementary abelian group needs prime p and k >= 1");
  GroupSpec spec{"C" + std::to_string(p) + "^" + std::to_string(k), p * k, {}};
  for (std::size_t i = 0; i < k; ++i) spec.generators.push_back(cycle_range(p * i + 1, p * i + p));
  return spec;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec spec{a.name + "x" + b.name, a.degree + b.degree, a.generators};
  for (const CycleWord& word : b.generators) {
    CycleWord shifted = word;
    for (Cycle& c : shifted)
      for (std::size_t& x : c) x += a.degree;
    spec.generators.push_back(std::move(shifted));
  }
  return spec;
}

GroupSpec m4_2() {
  // a^i b^j has index i + 8j; b^j a^k b^-j = a^(5^j k).
  auto mul = [](std::size_t u, std::size_t v) {
    std::size_t i = u % 8, j = u / 8, k = v % 8, l = v / 8;
    std::size_t twisted = j ? (5 * k) % 8 : k;
    return (i + twisted) % 8 + 8 * ((j + l) % 2);
  };
  return regular("M4(2)", 16, mul, {1, 8});
}

GroupSpec c8xc2() {
  GroupSpec spec = direct_product(cyclic(8), cyclic(2));
  spec.name = "C8xC2";
  return spec;
}

namespace {

GroupSpec factor_by_name(const std::string& f, const std::string& whole) {
  if (f == "1" || f == "C1") return trivial();
  if (f == "M4(2)") return m4_2();
  if (f.rfind("Dic", 0) == 0) return dicyclic(parse_number(f.substr(3), whole));
  if (f.empty()) throw Error(ErrorKind::MalformedSpec, "empty factor in group name '" + whole + "'");
  const std::string rest = f.substr(1);
  switch (f[0]) {
    case 'C': {
      auto caret = rest.find('^');
      if (caret == std::string::npos) return cyclic(parse_number(rest, whole));
      std::size_t base = parse_number(rest.substr(0, caret), whole);
      std::size_t power = parse_number(rest.substr(caret + 1), whole);
      if (power == 0) throw Error(ErrorKind::MalformedSpec, "zero power in '" + whole + "'");
      if (is_prime(base)) return elementary_abelian(base, power);
      GroupSpec out = cyclic(base);
      for (std::size_t i = 1; i < power; ++i) out = direct_product(out, cyclic(base));
      out.name = f;
      return out;
    }
    case 'D': return dihedral(parse_number(rest, whole));
    case 'Q': return dicyclic(parse_number(rest, whole));
    case 'S': return symmetric(parse_number(rest, whole));
    case 'A': return alternating(parse_number(rest, whole));
    default: break;
  }
  throw Error(ErrorKind::MalformedSpec, "unknown catalog group '" + whole + "'");
}

}  // namespace

GroupSpec by_name(const std::string& name) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = name.find('x', start);
    factors.push_back(name.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  GroupSpec out = factor_by_name(factors[0], name);
  for (std::size_t i = 1; i < factors.size(); ++i) out = direct_product(out, factor_by_name(factors[i], name));
  out.name = name;
  return out;
}

std::vector<Entry> sweep(std::size_t order_bound, const std::vector<std::string>& families) {
  std::vector<Entry> all;
  auto add = [&](std::string family, std::size_t order, GroupSpec spec) {
    if (order <= order_bound) all.push_back({std::move(family), order, std::move(spec)});
  };

  add("cyclic", 1, trivial());
  for (std::size_t n = 2; n <= order_bound; ++n) add("cyclic", n, cyclic(n));
  for (std::size_t n = 6; n <= order_bound; n += 2) add("dihedral", n, dihedral(n));
  for (std::size_t n = 8; n <= order_bound; n += 4) add("dicyclic", n, dicyclic(n));
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    add("symmetric", f, symmetric(n));
  }
  add("alternating", 12, alternating(4));
  add("alternating", 60, alternating(5));
  add("alternating", 360, alternating(6));

  const std::vector<std::pair<std::size_t, std::size_t>> elementary = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {13, 2}};
  for (auto [p, k] : elementary) {
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) order *= p;
    add("abelian", order, elementary_abelian(p, k));
  }
  for (const char* name : {"C4xC2", "C4xC4", "C4xC2xC2", "C9xC3", "C8xC4", "C4xC4xC2", "C6xC6", "C4xC2xC2xC2"}) {
    GroupSpec spec = by_name(name);
    add("abelian", FiniteGroup::build(spec).order(), spec);
  }

  add("special", 16, m4_2());
  add("special", 16, c8xc2());

  for (const char* name : {"S3xC3", "C2xA4", "S3xS3", "D8xC2", "Q8xC2", "Q8xC3", "D8xC3", "S3xC4", "C5xS3",
                           "S3xC2xC2", "C2xS4", "C3xA4", "S4xC3", "A5xC2", "D8xS3", "Q8xC4", "D10xC3"}) {
    GroupSpec spec = by_name(name);
    add("product", FiniteGroup::build(spec).order(), spec);
  }

  if (!families.empty()) {
    std::erase_if(all, [&](const Entry& e) {
      return std::find(families.begin(), families.end(), e.family) == families.end();
    });
  }
  std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.order, a.family, a.spec.name) < std::tie(b.order, b.family, b.spec.name);
  });
  return all;
}

}  // namespace sglab::catalog
