#ifndef KSTAT_CORE_HPP_
#define KSTAT_CORE_HPP_

#include <optional>

#include "kstat/types.hpp"

namespace kstat {

/// Membership-pattern partition of {1..n} induced by a family: two points
/// share a block exactly when every member contains both or neither. The
/// empty family gives the single-block partition.
Partition partition_of(const SetFamily& family);

/// Common refinement of `p` with {omega, complement of omega}.
Partition refine(const Partition& p, const Subset& omega);

/// True when omega contains exactly one of the two distinct points i, j.
bool splits(const Subset& omega, int i, int j);

/// Exact order of the described pointwise stabilizer. For Sym this is the
/// product of block-size factorials; for Alt it is half of that, except that
/// block types 1^n and 1^{n-2}2^1 both give the trivial group.
StabOrder stab_order(const StabDescriptor& descriptor);
StabOrder stab_order(GroupKind kind, const Partition& p);

bool is_base(const SetFamily& family, GroupKind kind);
bool is_independent(const SetFamily& family, GroupKind kind);
bool is_minimal_base(const SetFamily& family, GroupKind kind);

/// True when the prefix stabilizer chain of `seq` is strictly decreasing at
/// every step; with require_base, the final stabilizer must also be trivial.
bool is_irredundant(const SetSequence& seq, GroupKind kind, bool require_base);

/// Acyclicity of the graph whose edges are the members of a 2-uniform family.
bool is_forest(const SetFamily& family);

/// Family with member `index` (1-based) replaced by its complement. The
/// induced partition is unchanged.
SetFamily complement_member(const SetFamily& family, int index);

/// First member whose removal leaves the pointwise stabilizer unchanged,
/// i.e. the certificate that the family is not independent.
std::optional<Subset> find_redundant_member(const SetFamily& family,
                                            GroupKind kind);

/// 1-based index of the first chain step that fails to shrink the
/// stabilizer, or nullopt when every step is strict.
std::optional<int> first_non_strict_step(const SetSequence& seq,
                                         GroupKind kind);

namespace detail {

// In-place refinement of first-occurrence-normalized labels by a membership
// mask; returns the new block count. old_parts must match the labels.
int refine_labels(std::vector<std::uint8_t>& labels,
                  const std::vector<char>& in_set, int old_parts);

StabOrder order_of_labels(GroupKind kind,
                          const std::vector<std::uint8_t>& labels,
                          int part_count);

std::vector<char> membership(int n, const Subset& omega);

}  // namespace detail

}  // namespace kstat

#endif  // KSTAT_CORE_HPP_
