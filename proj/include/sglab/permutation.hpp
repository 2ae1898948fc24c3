#ifndef SGLAB_PERMUTATION_HPP
#define SGLAB_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sglab {

using Point = std::uint32_t;

// 1-based cycle, e.g. {1, 2, 3} for (1 2 3).
using Cycle = std::vector<std::size_t>;
// One permutation written as a product of disjoint cycles.
using CycleWord = std::vector<Cycle>;

// Bijection on {0, ..., degree-1}. Products compose left to right:
// (a * b)(i) = b(a(i)), the convention used by GAP and most CGT texts.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Throws Error(MalformedSpec) on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree, const CycleWord& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  CycleWord cycles() const;
  // "(1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sglab

#endif
