#ifndef SGLAB_MODP_HPP
#define SGLAB_MODP_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace sglab {

using Residue = std::uint32_t;

// Arithmetic in GF(p) for a prime p < 2^31.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  Residue reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  // Throws Error(InternalInconsistency) on zero.
  Residue inv(Residue a) const;

  // Smallest element of multiplicative order exactly m (m | p - 1).
  Residue primitive_root_of_unity(std::uint64_t m) const;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Smallest prime p with p = 1 (mod exponent) and p > 2 * order.
std::uint32_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

// Dense row-major matrix over GF(p).
class ModMatrix {
public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Residue> apply(const PrimeField& f, const std::vector<Residue>& x) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

// Basis of a subspace of GF(p)^n in reduced form: vectors[t][pivots[s]] is 1
// when s == t and 0 otherwise.
struct Subspace {
  std::vector<std::vector<Residue>> vectors;
  std::vector<std::size_t> pivots;
  std::size_t dim() const noexcept { return vectors.size(); }
};

// Row-reduces a spanning set; dependent vectors are dropped.
Subspace reduce_span(const PrimeField& f, std::vector<std::vector<Residue>> vectors);

Subspace whole_space(std::size_t n);

// Null space of m, as a reduced basis.
Subspace null_space(const PrimeField& f, const ModMatrix& m);

std::size_t rank(const PrimeField& f, ModMatrix m);

// Splits the m-invariant subspace w into the eigenspaces of m restricted to
// it. m must act diagonalizably on w with all eigenvalues in GF(p); a
// violation throws Error(InternalInconsistency). Eigenvectors come from
// Krylov projections of random vectors, so the cost stays cubic in dim(w)
// however many eigenvalues there are.
std::vector<Subspace> split_eigenspaces(const PrimeField& f, const ModMatrix& m, const Subspace& w,
                                        std::mt19937_64& rng);

}  // namespace sglab

#endif
