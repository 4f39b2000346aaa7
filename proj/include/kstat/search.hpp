#ifndef KSTAT_SEARCH_HPP_
#define KSTAT_SEARCH_HPP_

#include <variant>

#include "kstat/types.hpp"

namespace kstat::search {

struct SearchConfig {
  GroundParams params{};
  GroupKind kind = GroupKind::Sym;
  Stat stat = Stat::max_irredundant;
  long long node_budget = 100'000'000;  // attempted child expansions
  bool fix_first = true;   // anchor the first chosen set at {1..k}
  bool deterministic = true;
  int threads = 1;
};

/// Result of one exact run. With exhausted=false the value is only the best
/// bound realized by the witness: a lower bound for I/H/B, an upper bound
/// for b when a base was found at all.
struct StatReport {
  SearchConfig config{};
  int value = 0;
  std::variant<SetFamily, SetSequence> witness{SetFamily(1)};
  long long nodes_explored = 0;
  double elapsed_seconds = 0.0;
  bool exhausted = true;
  bool witness_verified = false;

  bool witness_is_sequence() const;
  const SetFamily& witness_family() const;
  const SetSequence& witness_sequence() const;
};

/// Maximum irredundant-base length. Depth-first over stabilizer descriptors,
/// memoized on the canonical partition: the chain steps available from a
/// state depend only on its partition, so the longest-suffix length is a
/// function of the state and the whole reachable sublattice is walked once.
StatReport compute_I(SearchConfig config);

/// Height: maximum size of an independent family. Members are added in
/// ascending order; each addition must strictly shrink the stabilizer and
/// must leave every earlier member necessary, so every node of the tree is
/// an independent family and the deepest node is the height.
StatReport compute_H(SearchConfig config);

/// Maximum minimal-base size: the height engine restricted to recording
/// nodes whose stabilizer is trivial.
StatReport compute_B(SearchConfig config);

/// Minimum base size by iterative deepening on the family size, with a
/// block-count feasibility bound (one added set can split at most
/// min(k, n-k) blocks).
StatReport compute_b(SearchConfig config);

/// Dispatch on config.stat.
StatReport compute_stat(const SearchConfig& config);

}  // namespace kstat::search

#endif  // KSTAT_SEARCH_HPP_
