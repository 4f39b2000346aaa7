#include <doctest.h>

#include "brute_force.hpp"
#include "kstat/core.hpp"
#include "kstat/search.hpp"

using namespace kstat;
using namespace kstat::search;

namespace {

SearchConfig config(int n, int k, GroupKind kind) {
  SearchConfig cfg;
  cfg.params = {n, k};
  cfg.kind = kind;
  return cfg;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("compute_I on known instances") {
  CHECK(compute_I(config(5, 2, GroupKind::Sym)).value == 4);
  CHECK(compute_I(config(4, 2, GroupKind::Alt)).value == 2);
  CHECK(compute_I(config(6, 3, GroupKind::Sym)).value == 4);
  CHECK(compute_I(config(6, 2, GroupKind::Sym)).value == 4);
  CHECK(compute_I(config(7, 2, GroupKind::Alt)).value == 5);
}

TEST_CASE("compute_H and compute_B on known instances") {
  CHECK(compute_H(config(5, 2, GroupKind::Sym)).value == 3);
  CHECK(compute_B(config(5, 2, GroupKind::Sym)).value == 3);
  CHECK(compute_H(config(7, 2, GroupKind::Alt)).value == 4);
  CHECK(compute_B(config(7, 3, GroupKind::Sym)).value == 4);
  CHECK(compute_H(config(7, 3, GroupKind::Sym)).value == 4);
  CHECK(compute_H(config(8, 3, GroupKind::Sym)).value == 6);
  CHECK(compute_B(config(8, 3, GroupKind::Alt)).value == 5);
  CHECK(compute_H(config(8, 3, GroupKind::Alt)).value == 5);
}

TEST_CASE("compute_b on known instances") {
  CHECK(compute_b(config(5, 1, GroupKind::Sym)).value == 4);
  CHECK(compute_b(config(5, 2, GroupKind::Sym)).value == 3);
  CHECK(compute_b(config(4, 2, GroupKind::Alt)).value == 2);
}

TEST_CASE("trivial group edge") {
  for (Stat stat : {Stat::min_base, Stat::max_minimal_base, Stat::height,
                    Stat::max_irredundant}) {
    SearchConfig cfg = config(2, 1, GroupKind::Alt);
    cfg.stat = stat;
    const StatReport report = compute_stat(cfg);
    CHECK(report.value == 0);
    CHECK(report.exhausted);
    CHECK(report.witness_verified);
  }
}

TEST_CASE("witnesses verify under the core predicates") {
  for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt}) {
    const auto i_report = compute_I(config(6, 2, kind));
    CHECK(i_report.witness_verified);
    CHECK(is_irredundant(i_report.witness_sequence(), kind, true));
    const auto h_report = compute_H(config(6, 2, kind));
    CHECK(h_report.witness_verified);
    CHECK(is_independent(h_report.witness_family(), kind));
    const auto b_report = compute_B(config(6, 2, kind));
    CHECK(b_report.witness_verified);
    CHECK(is_minimal_base(b_report.witness_family(), kind));
    const auto min_report = compute_b(config(6, 2, kind));
    CHECK(min_report.witness_verified);
    CHECK(is_minimal_base(min_report.witness_family(), kind));
  }
}

TEST_CASE("fix_first does not change values") {
  for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt})
    for (int n = 4; n <= 6; ++n)
      for (int k = 1; 2 * k <= n; ++k)
        for (Stat stat : {Stat::min_base, Stat::max_minimal_base, Stat::height,
                          Stat::max_irredundant}) {
          SearchConfig anchored = config(n, k, kind);
          anchored.stat = stat;
          SearchConfig free = anchored;
          free.fix_first = false;
          CHECK(compute_stat(anchored).value == compute_stat(free).value);
        }
}

TEST_CASE("deterministic reruns are identical") {
  for (Stat stat : {Stat::max_irredundant, Stat::height}) {
    SearchConfig cfg = config(6, 2, GroupKind::Sym);
    cfg.stat = stat;
    const StatReport a = compute_stat(cfg);
    const StatReport b = compute_stat(cfg);
    CHECK(a.value == b.value);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("threads do not change values") {
  for (Stat stat : {Stat::height, Stat::max_minimal_base}) {
    for (auto [n, k] : {std::pair{7, 2}, std::pair{8, 3}, std::pair{8, 4}}) {
      SearchConfig cfg = config(n, k, GroupKind::Sym);
      cfg.stat = stat;
      const StatReport sequential = compute_stat(cfg);
      cfg.deterministic = false;
      cfg.threads = 4;
      const StatReport parallel = compute_stat(cfg);
      CHECK(parallel.value == sequential.value);
      CHECK(parallel.witness_verified);
    }
  }
}

TEST_CASE("budget exhaustion reports a bound") {
  SearchConfig cfg = config(7, 2, GroupKind::Sym);
  cfg.node_budget = 30;
  const StatReport i_report = compute_I(cfg);
  CHECK_FALSE(i_report.exhausted);
  CHECK(i_report.value == i_report.witness_sequence().size());
  CHECK(is_irredundant(i_report.witness_sequence(), GroupKind::Sym, false));

  const StatReport h_report = compute_H(cfg);
  CHECK_FALSE(h_report.exhausted);
  CHECK(is_independent(h_report.witness_family(), GroupKind::Sym));
}

TEST_CASE("domain and budget validation") {
  CHECK_THROWS_AS(compute_I(config(7, 4, GroupKind::Sym)), std::domain_error);
  SearchConfig cfg = config(5, 2, GroupKind::Sym);
  cfg.node_budget = 0;
  CHECK_THROWS_AS(compute_I(cfg), std::invalid_argument);
  // candidate enumeration is size-guarded before allocating
  CHECK_THROWS_AS(compute_I(config(33, 16, GroupKind::Sym)),
                  ResourceLimitError);
}

TEST_CASE("agreement with the unpruned reference on tiny instances") {
  for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt}) {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}}) {
      CHECK(compute_I(config(n, k, kind)).value ==
            testing::brute_max_irredundant(n, k, kind));
      const auto stats = testing::brute_family_stats(n, k, kind);
      CHECK(compute_H(config(n, k, kind)).value == stats.height);
      CHECK(compute_B(config(n, k, kind)).value == stats.max_minimal_base);
      CHECK(compute_b(config(n, k, kind)).value == stats.min_base);
    }
  }
}

}  // TEST_SUITE
