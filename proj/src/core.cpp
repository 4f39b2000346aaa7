#include "kstat/core.hpp"

#include <algorithm>
#include <numeric>

namespace kstat {

namespace detail {

int refine_labels(std::vector<std::uint8_t>& labels,
                  const std::vector<char>& in_set, int old_parts) {
  static thread_local std::vector<std::int16_t> remap;
  remap.assign(2 * old_parts, -1);
  int next = 0;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    const int key = 2 * labels[i] + (in_set[i] ? 1 : 0);
    if (remap[key] < 0) remap[key] = static_cast<std::int16_t>(next++);
    labels[i] = static_cast<std::uint8_t>(remap[key]);
  }
  return next;
}

StabOrder order_of_labels(GroupKind kind,
                          const std::vector<std::uint8_t>& labels,
                          int part_count) {
  static thread_local std::vector<int> sizes;
  sizes.assign(part_count, 0);
  for (std::uint8_t l : labels) ++sizes[l];
  StabOrder product = 1;
  for (int b = 0; b < part_count; ++b) product *= factorial(sizes[b]);
  // For Alt the stabilizer is the even half, except that a product of 1 or 2
  // (types 1^n and 1^{n-2}2^1) already means the trivial group.
  if (kind == GroupKind::Alt && product > 1) product /= 2;
  return product;
}

std::vector<char> membership(int n, const Subset& omega) {
  std::vector<char> in_set(n, 0);
  for (int e : omega.elements()) in_set[e - 1] = 1;
  return in_set;
}

}  // namespace detail

Partition partition_of(const SetFamily& family) {
  std::vector<std::uint8_t> labels(family.n(), 0);
  int parts = 1;
  for (const Subset& member : family.members())
    parts = detail::refine_labels(labels, detail::membership(family.n(), member),
                                  parts);
  return Partition::from_labels(family.n(), std::move(labels));
}

Partition refine(const Partition& p, const Subset& omega) {
  if (p.n() != omega.n())
    throw std::invalid_argument("refine: partition and subset ambient sizes differ");
  std::vector<std::uint8_t> labels = p.labels();
  detail::refine_labels(labels, detail::membership(p.n(), omega), p.part_count());
  return Partition::from_labels(p.n(), std::move(labels));
}

bool splits(const Subset& omega, int i, int j) {
  if (i == j) throw std::invalid_argument("splits: points must be distinct");
  if (i < 1 || i > omega.n() || j < 1 || j > omega.n())
    throw std::invalid_argument("splits: point out of range 1.." +
                                std::to_string(omega.n()));
  return omega.contains(i) != omega.contains(j);
}

StabOrder stab_order(GroupKind kind, const Partition& p) {
  if (p.n() > kMaxOrderPoints)
    throw std::domain_error("stab_order: exact orders supported for n <= " +
                            std::to_string(kMaxOrderPoints));
  return detail::order_of_labels(kind, p.labels(), p.part_count());
}

StabOrder stab_order(const StabDescriptor& descriptor) {
  return stab_order(descriptor.kind, descriptor.partition);
}

bool is_base(const SetFamily& family, GroupKind kind) {
  return stab_order(kind, partition_of(family)) == 1;
}

std::optional<Subset> find_redundant_member(const SetFamily& family,
                                            GroupKind kind) {
  const StabOrder full = stab_order(kind, partition_of(family));
  for (int i = 0; i < family.size(); ++i) {
    // The two stabilizers are nested, so equal order means equal group.
    if (stab_order(kind, partition_of(family.erased(i))) == full)
      return family.member(i);
  }
  return std::nullopt;
}

bool is_independent(const SetFamily& family, GroupKind kind) {
  return !find_redundant_member(family, kind).has_value();
}

bool is_minimal_base(const SetFamily& family, GroupKind kind) {
  return is_base(family, kind) && is_independent(family, kind);
}

std::optional<int> first_non_strict_step(const SetSequence& seq,
                                         GroupKind kind) {
  if (seq.n() > kMaxOrderPoints)
    throw std::domain_error("exact orders supported for n <= " +
                            std::to_string(kMaxOrderPoints));
  std::vector<std::uint8_t> labels(seq.n(), 0);
  int parts = 1;
  StabOrder order = detail::order_of_labels(kind, labels, parts);
  for (int i = 0; i < seq.size(); ++i) {
    parts = detail::refine_labels(
        labels, detail::membership(seq.n(), seq.member(i)), parts);
    const StabOrder next = detail::order_of_labels(kind, labels, parts);
    if (next >= order) return i + 1;
    order = next;
  }
  return std::nullopt;
}

bool is_irredundant(const SetSequence& seq, GroupKind kind, bool require_base) {
  if (first_non_strict_step(seq, kind).has_value()) return false;
  if (!require_base) return true;
  std::vector<std::uint8_t> labels(seq.n(), 0);
  int parts = 1;
  for (int i = 0; i < seq.size(); ++i)
    parts = detail::refine_labels(
        labels, detail::membership(seq.n(), seq.member(i)), parts);
  return detail::order_of_labels(kind, labels, parts) == 1;
}

bool is_forest(const SetFamily& family) {
  for (const Subset& m : family.members())
    if (m.size() != 2)
      throw std::invalid_argument("is_forest requires a 2-uniform family (got " +
                                  m.str() + ")");
  std::vector<int> root(family.n());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Subset& m : family.members()) {
    const int a = find(m.elements()[0] - 1);
    const int b = find(m.elements()[1] - 1);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

SetFamily complement_member(const SetFamily& family, int index) {
  if (index < 1 || index > family.size())
    throw std::invalid_argument("complement_member: index out of range 1.." +
                                std::to_string(family.size()));
  const Subset& target = family.member(index - 1);
  if (target.size() == family.n())
    throw std::invalid_argument(
        "complement_member: complement of the full set would be empty");
  std::vector<Subset> members = family.members();
  members[index - 1] = target.complement();
  return SetFamily(family.n(), std::move(members));
}

}  // namespace kstat
