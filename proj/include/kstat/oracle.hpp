#ifndef KSTAT_ORACLE_HPP_
#define KSTAT_ORACLE_HPP_

#include "kstat/types.hpp"

namespace kstat::oracle {

/// Hard guard on direct enumeration; 8! = 40320 elements.
inline constexpr int kMaxEnumerationPoints = 8;

/// Permutation of {1..n}, stored as the image list of 1, 2, ..., n.
class Permutation {
 public:
  static Permutation identity(int n);
  Permutation(int n, std::vector<int> image);  // must be a bijection of 1..n

  int n() const { return n_; }
  int image_of(int point) const { return image_[point - 1]; }
  const std::vector<int>& image() const { return image_; }
  bool is_even() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int n_;
  std::vector<int> image_;
};

/// All elements of S_n, or its even half for Alt. Throws ResourceLimitError
/// beyond kMaxEnumerationPoints.
std::vector<Permutation> enumerate_group(int n, GroupKind kind);

/// Number of group elements mapping every member of the family to itself
/// setwise. Brute force by full enumeration; exists to cross-check the
/// partition calculus, never to serve search.
long long stab_order_by_enumeration(const SetFamily& family, GroupKind kind);

}  // namespace kstat::oracle

#endif  // KSTAT_ORACLE_HPP_
