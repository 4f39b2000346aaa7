#ifndef KSTAT_FORMULAS_HPP_
#define KSTAT_FORMULAS_HPP_

#include "kstat/types.hpp"

namespace kstat::formulas {

/// Either an exact predicted value or a two-sided range for values the
/// closed forms leave open.
struct ValueOrRange {
  bool exact = true;
  long long value = 0;            // meaningful when exact
  long long lower = 0, upper = 0; // meaningful when !exact

  static ValueOrRange exactly(long long v);
  static ValueOrRange open_range(long long lo, long long hi);
  bool contains(long long v) const;
  std::string str() const;  // "4" or "[5,6]"
};

/// Maximum irredundant-base length for S_n on k-sets.
int predicted_I_sym(int n, int k);

/// Maximum minimal-base size and height for S_n on k-sets (the two agree).
int predicted_BH_sym(int n, int k);

/// Maximum irredundant-base length for A_n on k-sets.
int predicted_I_alt(int n, int k);

/// Maximum minimal-base size / height for A_n on k-sets. Exact for k <= 2
/// and for k = 3 away from n = 8; otherwise a two-value range that exact
/// search has to settle.
ValueOrRange alt_BH_value(int n, int k);

/// Maximum length of any subgroup chain in S_n; an upper bound for the
/// irredundant statistics of every faithful S_n action.
int max_chain_length_sym(int n);

/// Upper bound d + s - r on the size of a family extending a strict
/// stabilizer chain from r blocks (after d sets) to s blocks.
int strict_chain_length_bound(int d, int r, int s);

/// Every block of every partition in a one-more-block-per-step chain has
/// size divisible by g. Input chains violating the step shape are rejected.
bool chain_divisibility_holds(const std::vector<Partition>& chain, int g);

/// Unified lookup used by the CLI: exact where a closed form exists, a
/// sanity range otherwise (for the minimum base size only the trivial
/// bracket [0, max minimal base] is available).
ValueOrRange predicted_value(Stat stat, GroupKind kind, int n, int k);

}  // namespace kstat::formulas

#endif  // KSTAT_FORMULAS_HPP_
