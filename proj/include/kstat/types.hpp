#ifndef KSTAT_TYPES_HPP_
#define KSTAT_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kstat {

/// Exact stabilizer orders are products of factorials. 33! still fits in
/// 128 bits; larger ambient sets are rejected instead of silently wrapping.
using StabOrder = unsigned __int128;

inline constexpr int kMaxOrderPoints = 33;
inline constexpr int kMaxAmbient = 255;

StabOrder factorial(int m);
std::string to_string(StabOrder value);

/// Thrown when a computation would exceed a hard resource guard.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class GroupKind { Sym, Alt };

const char* group_code(GroupKind kind);  // "S" or "A"
std::optional<GroupKind> group_from_code(const std::string& code);

/// The four statistics handled by the search engines: minimum and maximum
/// minimal-base size, height (maximum independent family), and maximum
/// irredundant-base length.
enum class Stat { min_base, max_minimal_base, height, max_irredundant };

char stat_letter(Stat stat);  // 'b', 'B', 'H', 'I'
std::optional<Stat> stat_from_letter(const std::string& letter);

/// Ambient parameters for the action on k-subsets of {1..n}.
struct GroundParams {
  int n = 1;
  int k = 1;
};

/// Throws std::domain_error unless 1 <= k <= n/2.
void require_k_uniform(int n, int k);

/// Nonempty subset of {1..n}. Elements are stored strictly increasing, so
/// subsets compare lexicographically on their element lists.
class Subset {
 public:
  Subset(int n, std::vector<int> elements);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int point) const;
  Subset complement() const;  // throws std::invalid_argument when full

  std::string str() const;  // "{1,2,5}"

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

/// Unordered family of pairwise-distinct subsets over a shared ambient set.
/// Members are kept sorted, which makes the stored form canonical.
class SetFamily {
 public:
  explicit SetFamily(int n);
  SetFamily(int n, std::vector<Subset> members);

  int n() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subset>& members() const { return members_; }
  const Subset& member(int index) const;  // 0-based

  SetFamily inserted(const Subset& extra) const;
  SetFamily erased(int index) const;  // 0-based
  bool contains(const Subset& candidate) const;

  std::string str() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::vector<Subset> members_;
};

/// Ordered list of subsets. Duplicates are allowed syntactically; they can
/// never form a strictly decreasing stabilizer chain.
class SetSequence {
 public:
  explicit SetSequence(int n);
  SetSequence(int n, std::vector<Subset> members);

  int n() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subset>& members() const { return members_; }
  const Subset& member(int index) const;  // 0-based

  void push_back(const Subset& next);
  SetFamily as_family() const;  // throws on duplicate members

  std::string str() const;

  friend bool operator==(const SetSequence&, const SetSequence&) = default;

 private:
  int n_;
  std::vector<Subset> members_;
};

/// Partition of {1..n} in canonical form: blocks sorted ascending and
/// ordered by least element. Stored as per-point block labels normalized by
/// first occurrence, which makes the canonical form unique, equality a flat
/// byte comparison, and refinement a single linear pass.
class Partition {
 public:
  static Partition single_part(int n);
  static Partition from_parts(int n, const std::vector<std::vector<int>>& parts);
  /// Labels must already be first-occurrence normalized (validated).
  static Partition from_labels(int n, std::vector<std::uint8_t> labels);

  int n() const { return n_; }
  int part_count() const { return part_count_; }
  int part_of(int point) const;  // 0-based block index
  std::vector<std::vector<int>> parts() const;
  std::vector<int> part_sizes() const;  // indexed by block
  std::vector<int> type() const;        // multiset of sizes, ascending
  bool is_discrete() const { return part_count_ == n_; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  std::string str() const;  // "{1,2,3|4,5}"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(int n, std::vector<std::uint8_t> labels, int part_count);

  int n_;
  int part_count_;
  std::vector<std::uint8_t> labels_;
};

/// A pointwise stabilizer, represented by the group it lives in and the
/// partition whose blocks it fixes setwise. No permutations are stored; the
/// exact order is computable from the block sizes alone.
struct StabDescriptor {
  GroupKind kind = GroupKind::Sym;
  Partition partition = Partition::single_part(1);
};

}  // namespace kstat

#endif  // KSTAT_TYPES_HPP_
