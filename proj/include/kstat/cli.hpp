#ifndef KSTAT_CLI_HPP_
#define KSTAT_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "kstat/types.hpp"

namespace kstat::cli {

// Exit statuses: 0 success/match, 1 mismatch or failed check, 2 usage or
// domain error, 3 inconclusive (search budget exhausted).
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

struct SearchFlags {
  long long budget = 100'000'000;
  int threads = 1;
  bool fix_first = true;
};

struct TableOptions {
  Stat stat = Stat::max_irredundant;
  GroupKind group = GroupKind::Sym;
  int n_max = 2;
  std::optional<int> k;      // restrict to a fixed k
  bool with_search = false;  // also run the exact search per row
  std::optional<int> guard;  // override the per-stat n guard
  SearchFlags search;
};

struct VerifyOptions {
  Stat stat = Stat::max_irredundant;
  GroupKind group = GroupKind::Sym;
  int n = 2;
  int k = 1;
  std::optional<int> guard;
  SearchFlags search;
};

struct ConstructOptions {
  std::string kind;  // star-k2 | eq1 | eq2 | coprime-chain | general-chain |
                     // alt-excised | alt-star-k3
  std::optional<int> n;
  std::optional<int> k;
  std::string out_path;  // empty or "-" prints to stdout
};

struct CheckOptions {
  std::string path;
  std::string claim;  // base | minimal-base | independent | irredundant |
                      // irredundant-base
};

struct SelfcheckOptions {
  int n = 6;
  int count = 200;
  std::uint64_t seed = 20250808;
  int max_members = 4;
};

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_construct(const ConstructOptions& opt, std::ostream& out,
                  std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& out,
                  std::ostream& err);

/// Parses argv and dispatches to one of the subcommands.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kstat::cli

#endif  // KSTAT_CLI_HPP_
