#include "sglab/permutation.hpp"

#include <numeric>

#include "sglab/error.hpp"

namespace sglab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(ErrorKind::MalformedSpec, "image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const CycleWord& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const Cycle& cycle : cycles) {
    for (std::size_t point : cycle) {
      if (point < 1 || point > degree)
        throw Error(ErrorKind::MalformedSpec,
                    "cycle point " + std::to_string(point) + " outside [1, " +
                        std::to_string(degree) + "]");
      if (used[point - 1])
        throw Error(ErrorKind::MalformedSpec,
                    "point " + std::to_string(point) + " repeated within one generator");
      used[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i] - 1;
      std::size_t to = cycle[(i + 1) % cycle.size()] - 1;
      p.images_[from] = static_cast<Point>(to);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

CycleWord Permutation::cycles() const {
  CycleWord out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    Cycle c;
    for (std::size_t i = start; !done[i]; i = images_[i]) {
      done[i] = true;
      c.push_back(i + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  CycleWord cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const Cycle& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace sglab
