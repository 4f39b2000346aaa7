#include "kstat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace kstat::oracle {

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(n, std::move(image));
}

Permutation::Permutation(int n, std::vector<int> image)
    : n_(n), image_(std::move(image)) {
  if (n_ < 1) throw std::invalid_argument("permutation degree must be >= 1");
  if (static_cast<int>(image_.size()) != n_)
    throw std::invalid_argument("permutation image must list all of 1..n");
  std::vector<char> seen(n_, 0);
  for (int v : image_) {
    if (v < 1 || v > n_ || seen[v - 1])
      throw std::invalid_argument("permutation image is not a bijection of 1..n");
    seen[v - 1] = 1;
  }
}

bool Permutation::is_even() const {
  int inversions = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions % 2 == 0;
}

std::vector<Permutation> enumerate_group(int n, GroupKind kind) {
  if (n < 1) throw std::invalid_argument("group degree must be >= 1");
  if (n > kMaxEnumerationPoints)
    throw ResourceLimitError("group enumeration guarded at n <= " +
                             std::to_string(kMaxEnumerationPoints));
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(n, image);
    if (kind == GroupKind::Sym || p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

long long stab_order_by_enumeration(const SetFamily& family, GroupKind kind) {
  const int n = family.n();
  if (n > kMaxEnumerationPoints)
    throw ResourceLimitError("enumeration oracle guarded at n <= " +
                             std::to_string(kMaxEnumerationPoints));
  std::vector<std::uint32_t> masks;
  masks.reserve(family.size());
  for (const Subset& m : family.members()) {
    std::uint32_t mask = 0;
    for (int e : m.elements()) mask |= 1u << (e - 1);
    masks.push_back(mask);
  }
  long long count = 0;
  for (const Permutation& g : enumerate_group(n, kind)) {
    bool fixes_all = true;
    for (std::size_t i = 0; i < masks.size() && fixes_all; ++i) {
      std::uint32_t image = 0;
      for (int e : family.member(static_cast<int>(i)).elements())
        image |= 1u << (g.image_of(e) - 1);
      fixes_all = (image == masks[i]);
    }
    if (fixes_all) ++count;
  }
  return count;
}

}  // namespace kstat::oracle
