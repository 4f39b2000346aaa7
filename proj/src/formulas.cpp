#include "kstat/formulas.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace kstat::formulas {

ValueOrRange ValueOrRange::exactly(long long v) {
  ValueOrRange out;
  out.exact = true;
  out.value = v;
  out.lower = out.upper = v;
  return out;
}

ValueOrRange ValueOrRange::open_range(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("range lower bound exceeds upper");
  ValueOrRange out;
  out.exact = false;
  out.lower = lo;
  out.upper = hi;
  return out;
}

bool ValueOrRange::contains(long long v) const {
  return exact ? v == value : (lower <= v && v <= upper);
}

std::string ValueOrRange::str() const {
  if (exact) return std::to_string(value);
  return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

int predicted_I_sym(int n, int k) {
  require_k_uniform(n, k);
  return std::gcd(n, k) == 1 ? n - 1 : n - 2;
}

int predicted_BH_sym(int n, int k) {
  require_k_uniform(n, k);
  if (k == 1) return n - 1;
  if (k == 2 || n == 2 * k + 2) return n - 2;
  return n - 3;
}

int predicted_I_alt(int n, int k) {
  require_k_uniform(n, k);
  return std::gcd(n, k) == 1 ? n - 2 : std::max(2, n - 3);
}

ValueOrRange alt_BH_value(int n, int k) {
  require_k_uniform(n, k);
  if (k == 1) return ValueOrRange::exactly(n - 2);
  if (k == 2) return ValueOrRange::exactly(n == 4 ? 2 : n - 3);
  if (k == 3 && n != 8) return ValueOrRange::exactly(n - 3);
  const int sym = predicted_BH_sym(n, k);
  return ValueOrRange::open_range(sym - 1, sym);
}

int max_chain_length_sym(int n) {
  if (n < 1) throw std::domain_error("max_chain_length_sym requires n >= 1");
  return (3 * n - 1) / 2 - std::popcount(static_cast<unsigned>(n));
}

int strict_chain_length_bound(int d, int r, int s) {
  if (d < 0 || r < 1 || r > s)
    throw std::domain_error("strict_chain_length_bound requires d >= 0 and 1 <= r <= s");
  return d + s - r;
}

bool chain_divisibility_holds(const std::vector<Partition>& chain, int g) {
  if (g < 1) throw std::domain_error("divisor g must be >= 1");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i].part_count() != chain[i - 1].part_count() + 1)
      throw std::invalid_argument(
          "chain step " + std::to_string(i + 1) +
          " must add exactly one block to its predecessor");
  for (const Partition& p : chain)
    for (int size : p.part_sizes())
      if (size % g != 0) return false;
  return true;
}

ValueOrRange predicted_value(Stat stat, GroupKind kind, int n, int k) {
  switch (stat) {
    case Stat::max_irredundant:
      return ValueOrRange::exactly(kind == GroupKind::Sym ? predicted_I_sym(n, k)
                                                          : predicted_I_alt(n, k));
    case Stat::height:
    case Stat::max_minimal_base:
      if (kind == GroupKind::Sym)
        return ValueOrRange::exactly(predicted_BH_sym(n, k));
      return alt_BH_value(n, k);
    case Stat::min_base: {
      // No closed form; b <= B gives the only honest bracket.
      const ValueOrRange bh = kind == GroupKind::Sym
                                  ? ValueOrRange::exactly(predicted_BH_sym(n, k))
                                  : alt_BH_value(n, k);
      return ValueOrRange::open_range(0, bh.exact ? bh.value : bh.upper);
    }
  }
  throw std::logic_error("unreachable statistic");
}

}  // namespace kstat::formulas
