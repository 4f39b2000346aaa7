#ifndef KSTAT_CONSTRUCTIONS_HPP_
#define KSTAT_CONSTRUCTIONS_HPP_

#include <variant>

#include "kstat/types.hpp"

namespace kstat::constructions {

enum class Claim { minimal_base, irredundant_base, independent };

const char* claim_name(Claim claim);  // "minimal-base", ...

/// An explicit family or chain together with the predicate it promises to
/// satisfy. Every constructor re-checks its own claim before returning;
/// emitting a non-verifying witness is an internal error.
struct Witness {
  GroundParams params{};
  GroupKind kind = GroupKind::Sym;
  Claim claim = Claim::minimal_base;
  int claimed_length = 0;
  std::variant<SetFamily, SetSequence> payload{SetFamily(1)};

  bool is_sequence() const;
  const SetFamily& family() const;
  const SetSequence& sequence() const;
  bool verify() const;
};

/// {{1,2},{1,3},...,{1,n-1}}: minimal base of size n-2 for S_n on 2-sets.
Witness star_base_k2(int n);

/// Minimal base of size n-3 for S_n on k-sets (k >= 3, n >= 2k): a row of
/// sets sharing the prefix {1..k-1} plus k-2 sets sharing the suffix
/// {n-k+1..n-1}.
Witness prefix_suffix_family(int n, int k);

/// Minimal base of size 2k for S_{2k+2} on k-sets (k >= 3): all k-subsets of
/// {1..k+1} missing one of 1..k, plus the mirrored block on {k+2..2k+2}.
Witness two_block_family(int k);

/// Irredundant base of length n-1 for S_n on k-sets when gcd(n,k) = 1,
/// built by blocking {1..n} into k-intervals and recursing inside each block.
Witness coprime_irredundant_chain(int n, int k);

/// Irredundant base of length n-2 for S_n on k-sets, valid for every
/// 2 <= k <= n/2 regardless of gcd.
Witness general_irredundant_chain(int n, int k);

/// Minimal base for A_n obtained by dropping one member from the matching
/// S_n witness; one shorter than its parent.
Witness alt_excised_base(int n, int k);

/// {{1,2,3},{1,2,4},...,{1,2,n-1}}: minimal base of size n-3 for A_n on
/// 3-sets (n >= 6).
Witness alt_star_base_k3(int n);

}  // namespace kstat::constructions

#endif  // KSTAT_CONSTRUCTIONS_HPP_
