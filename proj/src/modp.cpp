#include "sglab/modp.hpp"

#include <map>
#include <numeric>

#include "sglab/error.hpp"

namespace sglab {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InternalInconsistency, "field characteristic " + std::to_string(p) + " is not a usable prime");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InternalInconsistency, "division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

Residue PrimeField::primitive_root_of_unity(std::uint64_t m) const {
  if ((p_ - 1) % m != 0)
    throw Error(ErrorKind::InternalInconsistency, "no primitive " + std::to_string(m) + "-th root in GF(" + std::to_string(p_) + ")");
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = m;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q) continue;
    prime_factors.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) prime_factors.push_back(rest);

  for (Residue a = 1; a < p_; ++a) {
    if (pow(a, m) != 1) continue;
    bool primitive = true;
    for (std::uint64_t q : prime_factors)
      if (pow(a, m / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return a;
  }
  throw Error(ErrorKind::InternalInconsistency, "root of unity search failed");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  if (exponent == 0) exponent = 1;
  for (std::uint64_t p = exponent + 1;; p += exponent)
    if (p > 2 * order && is_prime(p)) return static_cast<std::uint32_t>(p);
}

std::vector<Residue> ModMatrix::apply(const PrimeField& f, const std::vector<Residue>& x) const {
  const std::uint64_t p = f.prime();
  std::vector<Residue> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Residue* row = &data_[i * cols_];
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(row[j]) * x[j];
      if (acc >= (1ull << 62)) acc %= p;
    }
    y[i] = static_cast<Residue>(acc % p);
  }
  return y;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, std::vector<std::vector<Residue>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Residue s = f.inv(rows[r][c]);
    for (Residue& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Residue factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Residue> combine(const PrimeField& f, const std::vector<std::vector<Residue>>& basis,
                             const std::vector<Residue>& coeffs, std::size_t n) {
  std::vector<Residue> out(n, 0);
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = f.add(out[i], f.mul(coeffs[t], basis[t][i]));
  }
  return out;
}

Residue eval_poly(const PrimeField& f, const std::vector<Residue>& coeffs, Residue x) {
  Residue acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

}  // namespace

Subspace reduce_span(const PrimeField& f, std::vector<std::vector<Residue>> vectors) {
  Subspace s;
  if (vectors.empty()) return s;
  const std::size_t n = vectors.front().size();
  s.pivots = rref(f, vectors, n);
  s.vectors = std::move(vectors);
  return s;
}

Subspace whole_space(std::size_t n) {
  Subspace s;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Residue> e(n, 0);
    e[i] = 1;
    s.vectors.push_back(std::move(e));
    s.pivots.push_back(i);
  }
  return s;
}

Subspace null_space(const PrimeField& f, const ModMatrix& m) {
  std::vector<std::vector<Residue>> rows(m.rows(), std::vector<Residue>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  std::vector<std::size_t> pivots = rref(f, rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return reduce_span(f, std::move(basis));
}

std::size_t rank(const PrimeField& f, ModMatrix m) {
  std::vector<std::vector<Residue>> rows(m.rows(), std::vector<Residue>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rref(f, rows, m.cols()).size();
}

std::vector<Subspace> split_eigenspaces(const PrimeField& f, const ModMatrix& m, const Subspace& w,
                                        std::mt19937_64& rng) {
  const std::size_t k = w.dim();
  if (k <= 1) return k == 0 ? std::vector<Subspace>{} : std::vector<Subspace>{w};
  const std::size_t n = w.vectors.front().size();

  // Matrix of m on w in the reduced basis: coordinates are read off at pivots.
  ModMatrix a(k, k);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Residue> image = m.apply(f, w.vectors[t]);
    for (std::size_t s = 0; s < k; ++s) a(s, t) = image[w.pivots[s]];
  }

  std::uniform_int_distribution<Residue> draw(0, f.prime() - 1);
  std::map<Residue, Subspace> spans;
  const std::size_t max_runs = k + 32;
  for (std::size_t run = 0; run < max_runs; ++run) {
    std::vector<Residue> x(k);
    for (Residue& xi : x) xi = draw(rng);

    // Krylov sequence x, Ax, A^2x, ... until the first linear dependency,
    // which yields the minimal polynomial of x.
    std::vector<std::vector<Residue>> krylov;
    std::vector<std::vector<Residue>> reduced;  // echelon rows, normalized at pivot
    std::vector<std::size_t> pivot_of;
    std::vector<std::vector<Residue>> coeff_of;  // reduced[i] = sum coeff_of[i][j] * krylov[j]
    std::vector<Residue> minpoly;
    std::vector<Residue> v = x;
    while (true) {
      const std::size_t d = krylov.size();
      krylov.push_back(v);
      std::vector<Residue> coeff(d + 1, 0);
      coeff[d] = 1;
      std::vector<Residue> r = v;
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        Residue factor = r[pivot_of[i]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < k; ++j) r[j] = f.sub(r[j], f.mul(factor, reduced[i][j]));
        for (std::size_t j = 0; j < coeff_of[i].size(); ++j)
          coeff[j] = f.sub(coeff[j], f.mul(factor, coeff_of[i][j]));
      }
      std::size_t piv = 0;
      while (piv < k && r[piv] == 0) ++piv;
      if (piv == k) {
        minpoly = std::move(coeff);  // monic, degree d
        krylov.pop_back();
        break;
      }
      Residue s = f.inv(r[piv]);
      for (Residue& z : r) z = f.mul(z, s);
      for (Residue& z : coeff) z = f.mul(z, s);
      reduced.push_back(std::move(r));
      pivot_of.push_back(piv);
      coeff_of.push_back(std::move(coeff));
      v = a.apply(f, v);
    }

    const std::size_t degree = minpoly.size() - 1;
    std::vector<Residue> roots;
    for (Residue lambda = 0; lambda < f.prime() && roots.size() < degree; ++lambda)
      if (eval_poly(f, minpoly, lambda) == 0) roots.push_back(lambda);
    if (roots.size() != degree)
      throw Error(ErrorKind::InternalInconsistency, "class-algebra element is not split semisimple over GF(p)");

    // Component of x in each eigenspace: q(A)x with q = minpoly / (t - lambda).
    for (Residue lambda : roots) {
      std::vector<Residue> q(degree, 0);
      Residue carry = 0;
      for (std::size_t i = degree; i-- > 0;) {
        carry = f.add(minpoly[i + 1], f.mul(carry, lambda));
        q[i] = carry;
      }
      std::vector<Residue> y = combine(f, krylov, q, k);
      Subspace& span = spans[lambda];
      std::vector<std::vector<Residue>> vecs = span.vectors;
      vecs.push_back(std::move(y));
      span = reduce_span(f, std::move(vecs));
    }

    std::size_t total = 0;
    for (const auto& [lambda, span] : spans) total += span.dim();
    if (total > k) throw Error(ErrorKind::InternalInconsistency, "eigenspaces overlap");
    if (total == k) {
      std::vector<Subspace> out;
      for (const auto& [lambda, span] : spans) {
        std::vector<std::vector<Residue>> full;
        for (const auto& coords : span.vectors) full.push_back(combine(f, w.vectors, coords, n));
        out.push_back(reduce_span(f, std::move(full)));
      }
      return out;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "eigenspace splitting did not converge");
}

}  // namespace sglab
