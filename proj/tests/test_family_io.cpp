#include <doctest.h>

#include <random>

#include "kstat/constructions.hpp"
#include "kstat/family_io.hpp"

using namespace kstat;
using namespace kstat::io;

TEST_SUITE("family_io") {

TEST_CASE("parse the documented record") {
  const FamilyFile file = FamilyFile::parse(
      R"({"n":7,"k":3,"group":"S","ordered":false,"family":[[1,2,3],[1,2,4],[1,2,5],[1,5,6]]})");
  CHECK(file.n == 7);
  CHECK(file.k == 3);
  CHECK(file.group == GroupKind::Sym);
  CHECK_FALSE(file.ordered);
  CHECK(file.to_family().size() == 4);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_WITH_AS(FamilyFile::parse("not json"),
                       doctest::Contains("invalid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FamilyFile::parse(R"({"n":4,"group":"X","ordered":false,"family":[]})"),
      doctest::Contains("group"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FamilyFile::parse(R"({"n":4,"group":"S","ordered":false,"family":[[2,1]]})"),
      doctest::Contains("family[0]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FamilyFile::parse(
          R"({"n":4,"group":"S","ordered":false,"family":[[1,2],[1,2]]})"),
      doctest::Contains("distinct"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FamilyFile::parse(
          R"({"n":4,"k":2,"group":"S","ordered":false,"family":[[1,2,3]]})"),
      doctest::Contains("size != k"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FamilyFile::parse(R"({"n":4,"group":"S","family":[[1,2]]})"),
      doctest::Contains("ordered"), std::invalid_argument);
}

TEST_CASE("ordered files keep duplicates and order") {
  const FamilyFile file = FamilyFile::parse(
      R"({"n":4,"k":2,"group":"A","ordered":true,"family":[[1,3],[1,2],[1,3]]})");
  const SetSequence seq = file.to_sequence();
  CHECK(seq.size() == 3);
  CHECK(seq.member(0).elements() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(seq.as_family(), std::invalid_argument);
}

TEST_CASE("mixed member sizes serialize with null k") {
  const SetFamily family(5, {Subset(5, {1, 2}), Subset(5, {1, 2, 3})});
  const FamilyFile file = FamilyFile::from_family(family, GroupKind::Sym);
  CHECK_FALSE(file.k.has_value());
  const FamilyFile back = FamilyFile::parse(file.to_json());
  CHECK(back.to_family() == family);
}

TEST_CASE("round trip over random witnesses") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + int(rng() % 6);
    const auto witness = (trial % 2 == 0)
                             ? constructions::star_base_k2(n)
                             : constructions::general_irredundant_chain(n, 2);
    const FamilyFile file = FamilyFile::from_witness(witness);
    const FamilyFile back = FamilyFile::parse(file.to_json());
    CHECK(back.n == file.n);
    CHECK(back.ordered == file.ordered);
    CHECK(back.members == file.members);
    CHECK(file.to_json() == back.to_json());
  }
}

}  // TEST_SUITE
