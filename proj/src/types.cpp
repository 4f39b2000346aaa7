#include "kstat/types.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace kstat {

StabOrder factorial(int m) {
  if (m < 0 || m > kMaxOrderPoints)
    throw std::domain_error("factorial: argument outside 0.." +
                            std::to_string(kMaxOrderPoints));
  static const std::array<StabOrder, kMaxOrderPoints + 1> table = [] {
    std::array<StabOrder, kMaxOrderPoints + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxOrderPoints; ++i) t[i] = t[i - 1] * StabOrder(i);
    return t;
  }();
  return table[m];
}

std::string to_string(StabOrder value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(char('0' + int(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

const char* group_code(GroupKind kind) {
  return kind == GroupKind::Sym ? "S" : "A";
}

std::optional<GroupKind> group_from_code(const std::string& code) {
  if (code == "S") return GroupKind::Sym;
  if (code == "A") return GroupKind::Alt;
  return std::nullopt;
}

char stat_letter(Stat stat) {
  switch (stat) {
    case Stat::min_base: return 'b';
    case Stat::max_minimal_base: return 'B';
    case Stat::height: return 'H';
    case Stat::max_irredundant: return 'I';
  }
  return '?';
}

std::optional<Stat> stat_from_letter(const std::string& letter) {
  if (letter == "b") return Stat::min_base;
  if (letter == "B") return Stat::max_minimal_base;
  if (letter == "H") return Stat::height;
  if (letter == "I") return Stat::max_irredundant;
  return std::nullopt;
}

void require_k_uniform(int n, int k) {
  if (n < 1) throw std::domain_error("ambient size n must be >= 1");
  if (k < 1 || 2 * k > n)
    throw std::domain_error("k-uniform action requires 1 <= k <= n/2 (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

// ---------------------------------------------------------------- Subset

Subset::Subset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1 || n_ > kMaxAmbient)
    throw std::invalid_argument("subset: ambient size out of range 1.." +
                                std::to_string(kMaxAmbient));
  if (elements_.empty()) throw std::invalid_argument("subset must be nonempty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 1 || e > n_)
      throw std::invalid_argument("subset element " + std::to_string(e) +
                                  " out of range 1.." + std::to_string(n_));
    if (i > 0 && elements_[i - 1] >= e)
      throw std::invalid_argument("subset elements must be strictly increasing");
  }
}

bool Subset::contains(int point) const {
  return std::binary_search(elements_.begin(), elements_.end(), point);
}

Subset Subset::complement() const {
  if (size() == n_)
    throw std::invalid_argument("complement of the full set is empty");
  std::vector<int> rest;
  rest.reserve(n_ - size());
  for (int p = 1; p <= n_; ++p)
    if (!contains(p)) rest.push_back(p);
  return Subset(n_, std::move(rest));
}

std::string Subset::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------------- SetFamily

SetFamily::SetFamily(int n) : n_(n) {
  if (n_ < 1 || n_ > kMaxAmbient)
    throw std::invalid_argument("family: ambient size out of range");
}

SetFamily::SetFamily(int n, std::vector<Subset> members)
    : n_(n), members_(std::move(members)) {
  if (n_ < 1 || n_ > kMaxAmbient)
    throw std::invalid_argument("family: ambient size out of range");
  for (const Subset& m : members_)
    if (m.n() != n_)
      throw std::invalid_argument("family member has mismatched ambient size");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 1; i < members_.size(); ++i)
    if (members_[i - 1] == members_[i])
      throw std::invalid_argument("family members must be distinct (duplicate " +
                                  members_[i].str() + ")");
}

const Subset& SetFamily::member(int index) const {
  if (index < 0 || index >= size())
    throw std::invalid_argument("family member index out of range");
  return members_[index];
}

SetFamily SetFamily::inserted(const Subset& extra) const {
  std::vector<Subset> next = members_;
  next.push_back(extra);
  return SetFamily(n_, std::move(next));
}

SetFamily SetFamily::erased(int index) const {
  if (index < 0 || index >= size())
    throw std::invalid_argument("family member index out of range");
  std::vector<Subset> next = members_;
  next.erase(next.begin() + index);
  return SetFamily(n_, std::move(next));
}

bool SetFamily::contains(const Subset& candidate) const {
  return std::binary_search(members_.begin(), members_.end(), candidate);
}

std::string SetFamily::str() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << members_[i].str();
  }
  os << '}';
  return os.str();
}

// ----------------------------------------------------------- SetSequence

SetSequence::SetSequence(int n) : n_(n) {
  if (n_ < 1 || n_ > kMaxAmbient)
    throw std::invalid_argument("sequence: ambient size out of range");
}

SetSequence::SetSequence(int n, std::vector<Subset> members)
    : n_(n), members_(std::move(members)) {
  if (n_ < 1 || n_ > kMaxAmbient)
    throw std::invalid_argument("sequence: ambient size out of range");
  for (const Subset& m : members_)
    if (m.n() != n_)
      throw std::invalid_argument("sequence member has mismatched ambient size");
}

const Subset& SetSequence::member(int index) const {
  if (index < 0 || index >= size())
    throw std::invalid_argument("sequence member index out of range");
  return members_[index];
}

void SetSequence::push_back(const Subset& next) {
  if (next.n() != n_)
    throw std::invalid_argument("sequence member has mismatched ambient size");
  members_.push_back(next);
}

SetFamily SetSequence::as_family() const { return SetFamily(n_, members_); }

std::string SetSequence::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << members_[i].str();
  }
  os << ']';
  return os.str();
}

// -------------------------------------------------------------- Partition

Partition::Partition(int n, std::vector<std::uint8_t> labels, int part_count)
    : n_(n), part_count_(part_count), labels_(std::move(labels)) {}

Partition Partition::single_part(int n) {
  if (n < 1 || n > kMaxAmbient)
    throw std::invalid_argument("partition: ambient size out of range");
  return Partition(n, std::vector<std::uint8_t>(n, 0), 1);
}

Partition Partition::from_labels(int n, std::vector<std::uint8_t> labels) {
  if (n < 1 || n > kMaxAmbient)
    throw std::invalid_argument("partition: ambient size out of range");
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("partition labels must cover 1..n");
  int seen = 0;
  for (std::uint8_t l : labels) {
    if (l > seen)
      throw std::invalid_argument("partition labels not first-occurrence normalized");
    if (l == seen) ++seen;
  }
  return Partition(n, std::move(labels), seen);
}

Partition Partition::from_parts(int n,
                                const std::vector<std::vector<int>>& parts) {
  if (n < 1 || n > kMaxAmbient)
    throw std::invalid_argument("partition: ambient size out of range");
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (parts[b].empty())
      throw std::invalid_argument("partition blocks must be nonempty");
    for (int p : parts[b]) {
      if (p < 1 || p > n)
        throw std::invalid_argument("partition point " + std::to_string(p) +
                                    " out of range 1.." + std::to_string(n));
      if (owner[p - 1] != -1)
        throw std::invalid_argument("partition blocks must be disjoint (point " +
                                    std::to_string(p) + " repeated)");
      owner[p - 1] = static_cast<int>(b);
    }
  }
  for (int p = 1; p <= n; ++p)
    if (owner[p - 1] == -1)
      throw std::invalid_argument("partition blocks must cover 1..n (point " +
                                  std::to_string(p) + " missing)");
  // Renumber by first occurrence; this yields blocks ordered by least element.
  std::vector<int> remap(parts.size(), -1);
  std::vector<std::uint8_t> labels(n);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    int& id = remap[owner[p]];
    if (id == -1) id = next++;
    labels[p] = static_cast<std::uint8_t>(id);
  }
  return Partition(n, std::move(labels), next);
}

int Partition::part_of(int point) const {
  if (point < 1 || point > n_)
    throw std::invalid_argument("point out of range 1.." + std::to_string(n_));
  return labels_[point - 1];
}

std::vector<std::vector<int>> Partition::parts() const {
  std::vector<std::vector<int>> out(part_count_);
  for (int p = 0; p < n_; ++p) out[labels_[p]].push_back(p + 1);
  return out;
}

std::vector<int> Partition::part_sizes() const {
  std::vector<int> sizes(part_count_, 0);
  for (int p = 0; p < n_; ++p) ++sizes[labels_[p]];
  return sizes;
}

std::vector<int> Partition::type() const {
  std::vector<int> sizes = part_sizes();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_) return false;
  std::vector<int> image(part_count_, -1);
  for (int p = 0; p < n_; ++p) {
    int& img = image[labels_[p]];
    if (img == -1)
      img = coarser.labels_[p];
    else if (img != coarser.labels_[p])
      return false;
  }
  return true;
}

std::string Partition::str() const {
  const auto blocks = parts();
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ',';
      os << blocks[b][i];
    }
  }
  os << '}';
  return os.str();
}

}  // namespace kstat
