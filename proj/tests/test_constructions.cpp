#include <doctest.h>

#include <numeric>

#include "kstat/constructions.hpp"
#include "kstat/core.hpp"

using namespace kstat;
using namespace kstat::constructions;

namespace {

SetFamily fam(int n, std::vector<std::vector<int>> members) {
  std::vector<Subset> subs;
  for (auto& m : members) subs.emplace_back(n, std::move(m));
  return SetFamily(n, std::move(subs));
}

SetSequence seq(int n, std::vector<std::vector<int>> members) {
  std::vector<Subset> subs;
  for (auto& m : members) subs.emplace_back(n, std::move(m));
  return SetSequence(n, std::move(subs));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("star_base_k2") {
  CHECK(star_base_k2(5).family() == fam(5, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(star_base_k2(4).family() == fam(4, {{1, 2}, {1, 3}}));
  CHECK(star_base_k2(9).verify());
  CHECK(star_base_k2(9).family().size() == 7);
  // {{1,2}} is not a base of S_3: the transposition (1 2) fixes it setwise
  CHECK_THROWS_AS(star_base_k2(3), std::domain_error);
  CHECK_THROWS_AS(star_base_k2(2), std::domain_error);
}

TEST_CASE("prefix_suffix_family") {
  CHECK(prefix_suffix_family(7, 3).family() ==
        fam(7, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 5, 6}}));
  CHECK(prefix_suffix_family(8, 4).family().size() == 5);
  CHECK(prefix_suffix_family(9, 3).verify());
  CHECK_THROWS_AS(prefix_suffix_family(7, 2), std::domain_error);
  CHECK_THROWS_AS(prefix_suffix_family(5, 3), std::domain_error);
}

TEST_CASE("two_block_family") {
  CHECK(two_block_family(3).family() ==
        fam(8, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {6, 7, 8}, {5, 7, 8}, {5, 6, 8}}));
  const Witness w4 = two_block_family(4);
  CHECK(w4.params.n == 10);
  CHECK(w4.family().size() == 8);
  CHECK(two_block_family(5).verify());
  CHECK_THROWS_AS(two_block_family(2), std::domain_error);
}

TEST_CASE("coprime_irredundant_chain") {
  CHECK(coprime_irredundant_chain(5, 2).sequence() ==
        seq(5, {{1, 2}, {3, 4}, {1, 5}, {3, 5}}));
  CHECK(coprime_irredundant_chain(6, 1).sequence() ==
        seq(6, {{1}, {2}, {3}, {4}, {5}}));
  const Witness w73 = coprime_irredundant_chain(7, 3);
  CHECK(w73.sequence().size() == 6);
  CHECK(is_irredundant(w73.sequence(), GroupKind::Sym, true));
  CHECK_THROWS_AS(coprime_irredundant_chain(6, 2), std::domain_error);
  CHECK_THROWS_AS(coprime_irredundant_chain(9, 5), std::domain_error);
}

TEST_CASE("coprime chain adds exactly one block per step") {
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const SetSequence chain = coprime_irredundant_chain(n, k).sequence();
      Partition p = Partition::single_part(n);
      for (int i = 0; i < chain.size(); ++i) {
        const Partition next = refine(p, chain.member(i));
        CHECK(next.part_count() == p.part_count() + 1);
        p = next;
      }
      CHECK(p.is_discrete());
    }
}

TEST_CASE("general_irredundant_chain") {
  CHECK(general_irredundant_chain(5, 2).sequence() ==
        seq(5, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(general_irredundant_chain(6, 2).sequence() ==
        seq(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  const Witness w84 = general_irredundant_chain(8, 4);
  CHECK(w84.sequence().size() == 6);
  CHECK(is_irredundant(w84.sequence(), GroupKind::Sym, true));
  CHECK_THROWS_AS(general_irredundant_chain(6, 1), std::domain_error);
  CHECK_THROWS_AS(general_irredundant_chain(5, 3), std::domain_error);
}

TEST_CASE("alt_excised_base") {
  CHECK(alt_excised_base(7, 3).family() ==
        fam(7, {{1, 2, 3}, {1, 2, 4}, {1, 5, 6}}));
  const Witness w83 = alt_excised_base(8, 3);
  CHECK(w83.family() ==
        fam(8, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {6, 7, 8}, {5, 7, 8}}));
  CHECK(w83.family().size() == 5);
  CHECK(alt_excised_base(9, 3).verify());
  CHECK(alt_excised_base(5, 2).family() == fam(5, {{1, 2}, {1, 3}}));

  // impossible corners: a single 2-set fixes an even involution at n=4, and
  // two 3-sets cannot cut {1..6} into 5 blocks
  CHECK_THROWS_AS(alt_excised_base(4, 2), std::domain_error);
  CHECK_THROWS_AS(alt_excised_base(6, 3), std::domain_error);
  CHECK_THROWS_AS(alt_excised_base(6, 1), std::domain_error);
}

TEST_CASE("alt_star_base_k3") {
  CHECK(alt_star_base_k3(7).family() ==
        fam(7, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}}));
  CHECK(alt_star_base_k3(6).family() == fam(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
  CHECK(alt_star_base_k3(9).verify());
  CHECK(alt_star_base_k3(8).verify());  // still a minimal base at n=8
  CHECK_THROWS_AS(alt_star_base_k3(5), std::domain_error);
}

TEST_CASE("witness sizes match their defining formulas") {
  for (int n = 4; n <= 12; ++n) CHECK(star_base_k2(n).family().size() == n - 2);
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k; n <= 14; ++n)
      CHECK(prefix_suffix_family(n, k).family().size() == n - 3);
  for (int k = 3; k <= 6; ++k)
    CHECK(two_block_family(k).family().size() == 2 * k);
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      if (std::gcd(n, k) == 1)
        CHECK(coprime_irredundant_chain(n, k).sequence().size() == n - 1);
      if (k >= 2)
        CHECK(general_irredundant_chain(n, k).sequence().size() == n - 2);
    }
}

}  // TEST_SUITE
