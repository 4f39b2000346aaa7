#include <doctest.h>

#include <random>

#include "kstat/core.hpp"
#include "kstat/oracle.hpp"

using namespace kstat;

namespace {

SetFamily fam(int n, std::vector<std::vector<int>> members) {
  std::vector<Subset> subs;
  for (auto& m : members) subs.emplace_back(n, std::move(m));
  return SetFamily(n, std::move(subs));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumerate_group sizes") {
  CHECK(oracle::enumerate_group(3, GroupKind::Sym).size() == 6);
  CHECK(oracle::enumerate_group(4, GroupKind::Alt).size() == 12);
  CHECK(oracle::enumerate_group(1, GroupKind::Alt).size() == 1);
  for (int n = 2; n <= 6; ++n)
    CHECK(oracle::enumerate_group(n, GroupKind::Alt).size() * 2 ==
          oracle::enumerate_group(n, GroupKind::Sym).size());
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(oracle::enumerate_group(9, GroupKind::Sym),
                  ResourceLimitError);
  CHECK_THROWS_AS(oracle::stab_order_by_enumeration(fam(9, {{1, 2}}),
                                                    GroupKind::Sym),
                  ResourceLimitError);
}

TEST_CASE("parity") {
  CHECK(oracle::Permutation::identity(4).is_even());
  CHECK_FALSE(oracle::Permutation(4, {2, 1, 3, 4}).is_even());
  CHECK(oracle::Permutation(4, {2, 1, 4, 3}).is_even());
  CHECK_THROWS_AS(oracle::Permutation(3, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("stab_order_by_enumeration") {
  CHECK(oracle::stab_order_by_enumeration(fam(5, {{1, 2, 3}}), GroupKind::Sym) ==
        12);
  CHECK(oracle::stab_order_by_enumeration(fam(4, {{1, 2}}), GroupKind::Alt) ==
        2);
  CHECK(oracle::stab_order_by_enumeration(fam(4, {{1, 2}, {1, 3}}),
                                          GroupKind::Alt) == 1);
  // the even permutations fixing {1,2,3} and {4,5} setwise
  CHECK(oracle::stab_order_by_enumeration(fam(5, {{1, 2, 3}}), GroupKind::Alt) ==
        6);
}

TEST_CASE("agreement with the partition calculus, exhaustive small") {
  // every family of at most 3 edges over n <= 5
  for (int n = 3; n <= 5; ++n) {
    std::vector<Subset> pool;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        pool.emplace_back(n, std::vector<int>{a, b});
    const int m = static_cast<int>(pool.size());
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        for (int z = y; z < m; ++z) {
          std::vector<Subset> members{pool[x]};
          if (y > x) members.push_back(pool[y]);
          if (z > y) members.push_back(pool[z]);
          const SetFamily family(n, members);
          for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt})
            CHECK(StabOrder(oracle::stab_order_by_enumeration(family, kind)) ==
                  stab_order(kind, partition_of(family)));
        }
  }
}

TEST_CASE("agreement with the partition calculus, sampled mixed sizes") {
  std::mt19937_64 rng(20250808);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6;
    std::vector<Subset> members;
    const int target = int(rng() % 4);
    while (static_cast<int>(members.size()) < target) {
      std::vector<int> e;
      for (int p = 1; p <= n; ++p)
        if (rng() % 2) e.push_back(p);
      if (e.empty() || static_cast<int>(e.size()) == n) continue;
      Subset s(n, e);
      if (std::find(members.begin(), members.end(), s) == members.end())
        members.push_back(s);
    }
    const SetFamily family(n, members);
    for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt})
      CHECK(StabOrder(oracle::stab_order_by_enumeration(family, kind)) ==
            stab_order(kind, partition_of(family)));
  }
}

}  // TEST_SUITE
