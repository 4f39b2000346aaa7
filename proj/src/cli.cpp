#include "kstat/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "kstat/constructions.hpp"
#include "kstat/core.hpp"
#include "kstat/family_io.hpp"
#include "kstat/formulas.hpp"
#include "kstat/oracle.hpp"
#include "kstat/search.hpp"

namespace kstat::cli {

namespace {

int default_guard(Stat stat) {
  return stat == Stat::max_irredundant ? 12 : 9;
}

search::SearchConfig make_config(Stat stat, GroupKind group, int n, int k,
                                 const SearchFlags& flags) {
  search::SearchConfig config;
  config.params = {n, k};
  config.kind = group;
  config.stat = stat;
  config.node_budget = flags.budget;
  config.fix_first = flags.fix_first;
  config.threads = flags.threads;
  config.deterministic = flags.threads <= 1;
  return config;
}

std::string search_column(const search::StatReport& report, Stat stat) {
  if (report.exhausted) return std::to_string(report.value);
  if (stat == Stat::min_base)
    return report.value > 0 ? "<=" + std::to_string(report.value) : "?";
  return ">=" + std::to_string(report.value);
}

std::string witness_json(const search::StatReport& report, GroupKind group) {
  const io::FamilyFile file =
      report.witness_is_sequence()
          ? io::FamilyFile::from_sequence(report.witness_sequence(), group)
          : io::FamilyFile::from_family(report.witness_family(), group);
  return file.to_json();
}

int guard_violation(std::ostream& err, Stat stat, int n, int effective) {
  err << "error: search for stat " << stat_letter(stat) << " is guarded at n <= "
      << effective << " by default (requested n=" << n
      << "); raise it explicitly with --guard\n";
  return kExitUsage;
}

}  // namespace

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.n_max < 2) {
      err << "error: --n-max must be at least 2\n";
      return kExitUsage;
    }
    if (opt.k && *opt.k < 1) {
      err << "error: --k must be at least 1\n";
      return kExitUsage;
    }
    if (opt.with_search) {
      const int effective = opt.guard.value_or(default_guard(opt.stat));
      if (opt.n_max > effective)
        return guard_violation(err, opt.stat, opt.n_max, effective);
    }
    out << "n\tk\tgroup\tstat\tformula\tsearch\tstatus\n";
    bool mismatch = false, inconclusive = false;
    for (int n = 2; n <= opt.n_max; ++n) {
      const int k_lo = opt.k ? *opt.k : 1;
      const int k_hi = opt.k ? *opt.k : n / 2;
      for (int k = k_lo; k <= k_hi && 2 * k <= n; ++k) {
        const formulas::ValueOrRange formula =
            formulas::predicted_value(opt.stat, opt.group, n, k);
        std::string search_cell = "-";
        std::string status = formula.exact ? "-" : "unknown";
        if (opt.with_search) {
          const search::StatReport report =
              search::compute_stat(make_config(opt.stat, opt.group, n, k, opt.search));
          search_cell = search_column(report, opt.stat);
          if (!report.exhausted) {
            status = "inconclusive";
            inconclusive = true;
          } else if (formula.contains(report.value)) {
            status = formula.exact ? "match" : "resolved";
          } else {
            status = "MISMATCH";
            mismatch = true;
          }
        }
        out << n << '\t' << k << '\t' << group_code(opt.group) << '\t'
            << stat_letter(opt.stat) << '\t' << formula.str() << '\t'
            << search_cell << '\t' << status << '\n';
      }
    }
    if (mismatch) return kExitMismatch;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const int effective = opt.guard.value_or(default_guard(opt.stat));
    if (opt.n > effective)
      return guard_violation(err, opt.stat, opt.n, effective);
    const formulas::ValueOrRange formula =
        formulas::predicted_value(opt.stat, opt.group, opt.n, opt.k);
    const search::StatReport report = search::compute_stat(
        make_config(opt.stat, opt.group, opt.n, opt.k, opt.search));
    out << "n: " << opt.n << "\n";
    out << "k: " << opt.k << "\n";
    out << "group: " << group_code(opt.group) << "\n";
    out << "stat: " << stat_letter(opt.stat) << "\n";
    out << "formula: " << formula.str() << "\n";
    out << "search: " << search_column(report, opt.stat) << "\n";
    out << "nodes: " << report.nodes_explored << "\n";
    out << "exhausted: " << (report.exhausted ? "yes" : "no") << "\n";
    out << "witness: " << witness_json(report, opt.group) << "\n";
    err << "elapsed: " << report.elapsed_seconds << "s\n";
    if (!report.exhausted) {
      out << "verdict: INCONCLUSIVE\n";
      return kExitInconclusive;
    }
    if (!formula.contains(report.value)) {
      out << "verdict: MISMATCH\n";
      return kExitMismatch;
    }
    out << "verdict: " << (formula.exact ? "MATCH" : "RESOLVED") << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out,
                  std::ostream& err) {
  try {
    constructions::Witness witness;
    const std::string& kind = opt.kind;
    auto need = [&](const char* flag, const std::optional<int>& v) -> int {
      if (!v)
        throw std::invalid_argument("construction \"" + kind + "\" requires " +
                                    flag);
      return *v;
    };
    if (kind == "star-k2") {
      witness = constructions::star_base_k2(need("--n", opt.n));
    } else if (kind == "eq1") {
      witness = constructions::prefix_suffix_family(need("--n", opt.n),
                                                    need("--k", opt.k));
    } else if (kind == "eq2") {
      const int k = need("--k", opt.k);
      if (opt.n && *opt.n != 2 * k + 2)
        throw std::invalid_argument("eq2 lives on n = 2k+2; omit --n or pass " +
                                    std::to_string(2 * k + 2));
      witness = constructions::two_block_family(k);
    } else if (kind == "coprime-chain") {
      witness = constructions::coprime_irredundant_chain(need("--n", opt.n),
                                                         need("--k", opt.k));
    } else if (kind == "general-chain") {
      witness = constructions::general_irredundant_chain(need("--n", opt.n),
                                                         need("--k", opt.k));
    } else if (kind == "alt-excised") {
      witness = constructions::alt_excised_base(need("--n", opt.n),
                                                need("--k", opt.k));
    } else if (kind == "alt-star-k3") {
      witness = constructions::alt_star_base_k3(need("--n", opt.n));
    } else {
      err << "error: unknown construction kind \"" << kind
          << "\" (expected star-k2, eq1, eq2, coprime-chain, general-chain, "
             "alt-excised or alt-star-k3)\n";
      return kExitUsage;
    }

    const io::FamilyFile file = io::FamilyFile::from_witness(witness);
    out << "kind: " << kind << "\n";
    out << "n: " << witness.params.n << "\n";
    out << "k: " << witness.params.k << "\n";
    out << "group: " << group_code(witness.kind) << "\n";
    out << "claim: " << constructions::claim_name(witness.claim) << "\n";
    out << "members: " << witness.claimed_length << "\n";
    out << "verified: " << (witness.verify() ? "PASS" : "FAIL") << "\n";
    if (opt.out_path.empty() || opt.out_path == "-") {
      out << file.to_json() << "\n";
    } else {
      file.save(opt.out_path);
      out << "wrote: " << opt.out_path << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  io::FamilyFile file;
  try {
    file = io::FamilyFile::load(opt.path);
  } catch (const std::exception& e) {
    err << "error: " << opt.path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const GroupKind kind = file.group;
    out << "file: " << opt.path << "\n";
    out << "claim: " << opt.claim << "\n";
    out << "group: " << group_code(kind) << "\n";

    const bool wants_sequence =
        opt.claim == "irredundant" || opt.claim == "irredundant-base";
    if (wants_sequence && !file.ordered) {
      err << "error: claim \"" << opt.claim
          << "\" needs an ordered file (\"ordered\": true)\n";
      return kExitUsage;
    }

    auto pass = [&](bool ok) {
      out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? kExitOk : kExitMismatch;
    };

    if (wants_sequence) {
      const SetSequence seq = file.to_sequence();
      const auto bad_step = first_non_strict_step(seq, kind);
      if (bad_step) {
        out << "certificate: step " << *bad_step
            << " does not shrink the stabilizer\n";
        return pass(false);
      }
      if (opt.claim == "irredundant-base") {
        const StabOrder tail = stab_order(kind, partition_of(seq.as_family()));
        if (tail != 1) {
          out << "certificate: final stabilizer has order " << to_string(tail)
              << "\n";
          return pass(false);
        }
      }
      return pass(true);
    }

    const SetFamily family =
        file.ordered ? file.to_sequence().as_family() : file.to_family();
    if (opt.claim == "independent") {
      const auto redundant = find_redundant_member(family, kind);
      if (redundant) {
        out << "certificate: redundant member " << redundant->str() << "\n";
        return pass(false);
      }
      return pass(true);
    }
    if (opt.claim == "base" || opt.claim == "minimal-base") {
      const Partition p = partition_of(family);
      const StabOrder order = stab_order(kind, p);
      if (order != 1) {
        out << "certificate: stabilizer of " << p.str() << " has order "
            << to_string(order) << "\n";
        return pass(false);
      }
      if (opt.claim == "minimal-base") {
        const auto redundant = find_redundant_member(family, kind);
        if (redundant) {
          out << "certificate: redundant member " << redundant->str() << "\n";
          return pass(false);
        }
      }
      return pass(true);
    }
    err << "error: unknown claim \"" << opt.claim
        << "\" (expected base, minimal-base, independent, irredundant or "
           "irredundant-base)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& out,
                  std::ostream& err) {
  try {
    if (opt.n < 2 || opt.n > oracle::kMaxEnumerationPoints) {
      err << "error: selfcheck needs 2 <= n <= "
          << oracle::kMaxEnumerationPoints << "\n";
      return kExitUsage;
    }
    std::mt19937_64 rng(opt.seed);
    out << "selfcheck: n=" << opt.n << " families=" << opt.count
        << " seed=" << opt.seed << "\n";
    for (int trial = 0; trial < opt.count; ++trial) {
      std::uniform_int_distribution<int> member_count(0, opt.max_members);
      std::set<std::vector<int>> chosen;
      const int target = member_count(rng);
      while (static_cast<int>(chosen.size()) < target) {
        std::uniform_int_distribution<int> size_dist(1, opt.n - 1);
        const int size = size_dist(rng);
        std::vector<int> points(opt.n);
        for (int i = 0; i < opt.n; ++i) points[i] = i + 1;
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<int> member(points.begin(), points.begin() + size);
        std::sort(member.begin(), member.end());
        chosen.insert(member);
      }
      std::vector<Subset> members;
      for (const auto& m : chosen) members.emplace_back(opt.n, m);
      const SetFamily family(opt.n, std::move(members));
      for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt}) {
        const StabOrder calculus = stab_order(kind, partition_of(family));
        const long long enumerated =
            oracle::stab_order_by_enumeration(family, kind);
        if (calculus != StabOrder(enumerated)) {
          out << "DISAGREEMENT on " << family.str() << " (group "
              << group_code(kind) << "): partition calculus "
              << to_string(calculus) << ", enumeration " << enumerated << "\n";
          return kExitMismatch;
        }
      }
    }
    out << "all families agree\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "exact base, height and irredundant-base statistics for the symmetric "
      "and alternating groups acting on k-subsets of {1..n}"};
  app.require_subcommand(1);

  std::string stat_str = "I", group_str = "S";
  SearchFlags flags;
  bool no_fix_first = false;

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", flags.budget, "search node budget")
        ->capture_default_str();
    sub->add_option("--threads", flags.threads,
                    "worker threads for the family searches");
    sub->add_flag("--no-fix-first", no_fix_first,
                  "disable anchoring the first chosen set at {1..k}");
  };

  TableOptions table;
  int table_k = 0, table_guard = 0;
  auto* table_cmd = app.add_subcommand("table", "tabulate statistics as TSV");
  table_cmd->add_option("--stat", stat_str, "statistic: b, B, H or I")
      ->required();
  table_cmd->add_option("--group", group_str, "group: S or A")->required();
  table_cmd->add_option("--n-max", table.n_max, "largest ambient size")
      ->required();
  table_cmd->add_option("--k", table_k, "restrict rows to a fixed k");
  table_cmd->add_flag("--with-search", table.with_search,
                      "also run the exact search per row");
  table_cmd->add_option("--guard", table_guard,
                        "override the per-stat search guard on n");
  add_search_flags(table_cmd);

  VerifyOptions verify;
  int verify_guard = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "compare one search value against the formula");
  verify_cmd->add_option("--stat", stat_str, "statistic: b, B, H or I")
      ->required();
  verify_cmd->add_option("--group", group_str, "group: S or A")->required();
  verify_cmd->add_option("--n", verify.n, "ambient size")->required();
  verify_cmd->add_option("--k", verify.k, "subset size")->required();
  verify_cmd->add_option("--guard", verify_guard,
                         "override the per-stat search guard on n");
  add_search_flags(verify_cmd);

  ConstructOptions construct;
  int construct_n = 0, construct_k = 0;
  auto* construct_cmd =
      app.add_subcommand("construct", "emit an explicit witness family");
  construct_cmd
      ->add_option("--kind", construct.kind,
                   "star-k2 | eq1 | eq2 | coprime-chain | general-chain | "
                   "alt-excised | alt-star-k3")
      ->required();
  construct_cmd->add_option("--n", construct_n, "ambient size");
  construct_cmd->add_option("--k", construct_k, "subset size");
  construct_cmd->add_option("--out", construct.out_path,
                            "output path (default: stdout)");

  CheckOptions check;
  auto* check_cmd =
      app.add_subcommand("check", "check a family file against a claim");
  check_cmd->add_option("file", check.path, "family JSON file")->required();
  check_cmd
      ->add_option("--claim", check.claim,
                   "base | minimal-base | independent | irredundant | "
                   "irredundant-base")
      ->required();

  SelfcheckOptions selfcheck;
  auto* selfcheck_cmd = app.add_subcommand(
      "selfcheck", "cross-check the partition calculus against brute-force "
                   "group enumeration on random families");
  selfcheck_cmd->add_option("--n", selfcheck.n, "ambient size (<= 8)")
      ->capture_default_str();
  selfcheck_cmd->add_option("--count", selfcheck.count, "number of families")
      ->capture_default_str();
  selfcheck_cmd->add_option("--seed", selfcheck.seed, "sampling seed")
      ->capture_default_str();
  selfcheck_cmd
      ->add_option("--max-members", selfcheck.max_members,
                   "largest family size sampled")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  flags.fix_first = !no_fix_first;
  const auto stat = stat_from_letter(stat_str);
  const auto group = group_from_code(group_str);

  if (app.got_subcommand(table_cmd)) {
    if (!stat || !group) {
      err << "error: --stat must be one of b,B,H,I and --group one of S,A\n";
      return kExitUsage;
    }
    table.stat = *stat;
    table.group = *group;
    if (table_cmd->count("--k")) table.k = table_k;
    if (table_cmd->count("--guard")) table.guard = table_guard;
    table.search = flags;
    return cmd_table(table, out, err);
  }
  if (app.got_subcommand(verify_cmd)) {
    if (!stat || !group) {
      err << "error: --stat must be one of b,B,H,I and --group one of S,A\n";
      return kExitUsage;
    }
    verify.stat = *stat;
    verify.group = *group;
    if (verify_cmd->count("--guard")) verify.guard = verify_guard;
    verify.search = flags;
    return cmd_verify(verify, out, err);
  }
  if (app.got_subcommand(construct_cmd)) {
    if (construct_cmd->count("--n")) construct.n = construct_n;
    if (construct_cmd->count("--k")) construct.k = construct_k;
    return cmd_construct(construct, out, err);
  }
  if (app.got_subcommand(check_cmd)) return cmd_check(check, out, err);
  if (app.got_subcommand(selfcheck_cmd))
    return cmd_selfcheck(selfcheck, out, err);
  err << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace kstat::cli
