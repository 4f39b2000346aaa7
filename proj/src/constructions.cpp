#include "kstat/constructions.hpp"

#include <numeric>

#include "kstat/core.hpp"

namespace kstat::constructions {

const char* claim_name(Claim claim) {
  switch (claim) {
    case Claim::minimal_base: return "minimal-base";
    case Claim::irredundant_base: return "irredundant-base";
    case Claim::independent: return "independent";
  }
  return "?";
}

bool Witness::is_sequence() const {
  return std::holds_alternative<SetSequence>(payload);
}

const SetFamily& Witness::family() const { return std::get<SetFamily>(payload); }

const SetSequence& Witness::sequence() const {
  return std::get<SetSequence>(payload);
}

bool Witness::verify() const {
  switch (claim) {
    case Claim::minimal_base:
      return family().size() == claimed_length && is_minimal_base(family(), kind);
    case Claim::irredundant_base:
      return sequence().size() == claimed_length &&
             is_irredundant(sequence(), kind, /*require_base=*/true);
    case Claim::independent:
      return family().size() == claimed_length && is_independent(family(), kind);
  }
  return false;
}

namespace {

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Witness checked(Witness w, const char* what) {
  if (!w.verify())
    throw std::logic_error(std::string(what) + ": emitted witness fails its claim");
  return w;
}

Witness family_witness(int n, int k, GroupKind kind, Claim claim,
                       std::vector<Subset> members, const char* what) {
  Witness w;
  w.params = {n, k};
  w.kind = kind;
  w.claim = claim;
  w.claimed_length = static_cast<int>(members.size());
  w.payload = SetFamily(n, std::move(members));
  return checked(std::move(w), what);
}

Witness sequence_witness(int n, int k, GroupKind kind, std::vector<Subset> members,
                         const char* what) {
  Witness w;
  w.params = {n, k};
  w.kind = kind;
  w.claim = Claim::irredundant_base;
  w.claimed_length = static_cast<int>(members.size());
  w.payload = SetSequence(n, std::move(members));
  return checked(std::move(w), what);
}

std::vector<Subset> star_members(int n, int last) {
  std::vector<Subset> members;
  for (int j = 2; j <= last; ++j) members.emplace_back(n, std::vector<int>{1, j});
  return members;
}

// Row of sets {1..k-1, j} for j = k..row1_last, then {i} + {n-k+1..n-1} for
// i = 1..k-2.
std::vector<Subset> prefix_suffix_members(int n, int k, int row1_last) {
  std::vector<Subset> members;
  for (int j = k; j <= row1_last; ++j) {
    std::vector<int> e = range_inclusive(1, k - 1);
    e.push_back(j);
    members.emplace_back(n, std::move(e));
  }
  for (int i = 1; i <= k - 2; ++i) {
    std::vector<int> e{i};
    for (int v = n - k + 1; v <= n - 1; ++v) e.push_back(v);
    members.emplace_back(n, std::move(e));
  }
  return members;
}

// Both blocks of the n = 2k+2 witness; drop_last removes the final set of
// the second block ({k+2..2k+2} minus 2k+1).
std::vector<Subset> two_block_members(int k, bool drop_last) {
  const int n = 2 * k + 2;
  std::vector<Subset> members;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> e;
    for (int v = 1; v <= k + 1; ++v)
      if (v != i) e.push_back(v);
    members.emplace_back(n, std::move(e));
  }
  const int second_last = drop_last ? 2 * k : 2 * k + 1;
  for (int i = k + 2; i <= second_last; ++i) {
    std::vector<int> e;
    for (int v = k + 2; v <= 2 * k + 2; ++v)
      if (v != i) e.push_back(v);
    members.emplace_back(n, std::move(e));
  }
  return members;
}

// Chain of n-1 k-sets over {1..n} whose prefix partitions gain exactly one
// block per step; valid for any 1 <= k < n with gcd(n,k) = 1. The public
// entry point restricts to k <= n/2, the recursion does not need to.
std::vector<std::vector<int>> coprime_chain_elements(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 1) {
    for (int i = 1; i <= n - 1; ++i) out.push_back({i});
    return out;
  }
  const int d = n / k;
  const int r = n % k;  // >= 1 because gcd(n,k)=1 and k >= 2
  for (int j = 1; j <= d; ++j)
    out.push_back(range_inclusive((j - 1) * k + 1, j * k));
  const std::vector<int> tail = range_inclusive(d * k + 1, n);
  const auto inner = coprime_chain_elements(k, k - r);
  for (int j = 1; j <= d; ++j) {
    const int base = (j - 1) * k;
    for (const auto& s : inner) {
      std::vector<int> e;
      e.reserve(s.size() + tail.size());
      for (int x : s) e.push_back(base + x);
      e.insert(e.end(), tail.begin(), tail.end());
      out.push_back(std::move(e));
    }
  }
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<int> e = range_inclusive(1, k - 1);
    e.push_back(d * k + i);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Witness star_base_k2(int n) {
  // n = 3 has no witness: {{1,2}} is fixed setwise by the transposition
  // (1 2), and 2-sets only live under the k <= n/2 action from n = 4 up.
  if (n < 4) throw std::domain_error("star_base_k2 requires n >= 4");
  return family_witness(n, 2, GroupKind::Sym, Claim::minimal_base,
                        star_members(n, n - 1), "star_base_k2");
}

Witness prefix_suffix_family(int n, int k) {
  if (k < 3) throw std::domain_error("prefix_suffix_family requires k >= 3");
  if (n < 2 * k) throw std::domain_error("prefix_suffix_family requires n >= 2k");
  return family_witness(n, k, GroupKind::Sym, Claim::minimal_base,
                        prefix_suffix_members(n, k, n - 2),
                        "prefix_suffix_family");
}

Witness two_block_family(int k) {
  if (k < 3) throw std::domain_error("two_block_family requires k >= 3");
  return family_witness(2 * k + 2, k, GroupKind::Sym, Claim::minimal_base,
                        two_block_members(k, /*drop_last=*/false),
                        "two_block_family");
}

Witness coprime_irredundant_chain(int n, int k) {
  require_k_uniform(n, k);
  if (std::gcd(n, k) != 1)
    throw std::domain_error("coprime_irredundant_chain requires gcd(n,k) = 1");
  std::vector<Subset> members;
  for (auto& elems : coprime_chain_elements(n, k))
    members.emplace_back(n, std::move(elems));
  return sequence_witness(n, k, GroupKind::Sym, std::move(members),
                          "coprime_irredundant_chain");
}

Witness general_irredundant_chain(int n, int k) {
  require_k_uniform(n, k);
  if (k < 2)
    throw std::domain_error(
        "general_irredundant_chain requires k >= 2; a chain of n-2 singletons "
        "ends at a transposition stabilizer, not at the identity");
  std::vector<Subset> members;
  for (int i = 1; i <= n - 2; ++i) {
    std::vector<int> e;
    if (i <= n - k) {
      e = range_inclusive(1, k - 1);
      e.push_back(k + i - 1);
    } else {
      e.push_back(i - (n - k));
      for (int v = k + 1; v <= 2 * k - 1; ++v) e.push_back(v);
    }
    members.emplace_back(n, std::move(e));
  }
  return sequence_witness(n, k, GroupKind::Sym, std::move(members),
                          "general_irredundant_chain");
}

Witness alt_excised_base(int n, int k) {
  require_k_uniform(n, k);
  if (k == 1)
    throw std::domain_error("alt_excised_base requires k >= 2");
  std::vector<Subset> members;
  if (k == 2) {
    // Star minus its last member. For n = 4 no witness of size n-3 exists:
    // a single 2-set leaves two blocks of size 2, an even involution.
    if (n < 5)
      throw std::domain_error("alt_excised_base with k = 2 requires n >= 5");
    members = star_members(n, n - 2);
  } else if (n == 2 * k + 2) {
    members = two_block_members(k, /*drop_last=*/true);
  } else {
    // Drop the final prefix-row set {1..k-1, n-2}. Removing it merges n-2
    // with n-1 into the single non-trivial block, so the alternating
    // stabilizer stays trivial. At (n,k) = (6,3) the excised family would
    // have 2 members and at most 4 blocks, short of the n-1 needed.
    if (n == 6 && k == 3)
      throw std::domain_error(
          "alt_excised_base is undefined at n=6, k=3: two 3-sets induce at "
          "most 4 blocks, but a trivial A_6 stabilizer needs at least 5");
    members = prefix_suffix_members(n, k, n - 3);
  }
  return family_witness(n, k, GroupKind::Alt, Claim::minimal_base,
                        std::move(members), "alt_excised_base");
}

Witness alt_star_base_k3(int n) {
  if (n < 6) throw std::domain_error("alt_star_base_k3 requires n >= 6");
  std::vector<Subset> members;
  for (int j = 3; j <= n - 1; ++j)
    members.emplace_back(n, std::vector<int>{1, 2, j});
  return family_witness(n, 3, GroupKind::Alt, Claim::minimal_base,
                        std::move(members), "alt_star_base_k3");
}

}  // namespace kstat::constructions
