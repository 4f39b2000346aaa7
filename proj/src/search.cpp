#include "kstat/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "kstat/core.hpp"

namespace kstat::search {

bool StatReport::witness_is_sequence() const {
  return std::holds_alternative<SetSequence>(witness);
}

const SetFamily& StatReport::witness_family() const {
  return std::get<SetFamily>(witness);
}

const SetSequence& StatReport::witness_sequence() const {
  return std::get<SetSequence>(witness);
}

namespace {

constexpr long long kMaxCandidates = 2'000'000;

struct CandidateSet {
  int n = 0, k = 0;
  std::vector<std::vector<int>> elems;    // ascending, lex order
  std::vector<std::vector<char>> member;  // [ci][point-1]
};

long long binomial_capped(int n, int k, long long cap) {
  long long value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return value;
}

CandidateSet make_candidates(int n, int k) {
  if (binomial_capped(n, k, kMaxCandidates) > kMaxCandidates)
    throw ResourceLimitError("too many k-sets to enumerate (n=" +
                             std::to_string(n) + ", k=" + std::to_string(k) +
                             ")");
  CandidateSet out;
  out.n = n;
  out.k = k;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    out.elems.push_back(comb);
    std::vector<char> in_set(n, 0);
    for (int e : comb) in_set[e - 1] = 1;
    out.member.push_back(std::move(in_set));
    int i = k - 1;
    while (i >= 0 && comb[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

struct LabelState {
  std::vector<std::uint8_t> labels;
  int parts = 1;
  StabOrder order = 1;
};

LabelState root_state(int n, GroupKind kind) {
  LabelState s;
  s.labels.assign(n, 0);
  s.parts = 1;
  s.order = detail::order_of_labels(kind, s.labels, 1);
  return s;
}

SearchConfig normalized(SearchConfig cfg, Stat stat) {
  cfg.stat = stat;
  require_k_uniform(cfg.params.n, cfg.params.k);
  if (cfg.params.n > kMaxOrderPoints)
    throw std::domain_error("search supports n <= " +
                            std::to_string(kMaxOrderPoints));
  if (cfg.node_budget <= 0)
    throw std::invalid_argument("node budget must be positive");
  if (cfg.threads < 1) cfg.threads = 1;
  if (cfg.deterministic) cfg.threads = 1;
  return cfg;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

// ------------------------------------------------------------------ I

class IrredundantEngine {
 public:
  explicit IrredundantEngine(const SearchConfig& cfg)
      : cfg_(cfg),
        n_(cfg.params.n),
        cands_(make_candidates(cfg.params.n, cfg.params.k)) {}

  StatReport run() {
    Timer timer;
    StatReport report;
    report.config = cfg_;
    const LabelState root = root_state(n_, cfg_.kind);
    std::vector<int> chain;
    int value = 0;
    if (root.order > 1) {
      if (cfg_.fix_first) {
        LabelState first;
        if (!refine_state(root, 0, first))
          throw std::logic_error("first k-set must shrink a nontrivial group");
        path_.push_back(0);
        incumbent_ = path_;
        const int sub = dfs(first);
        if (!aborted_) {
          value = 1 + sub;
          chain = reconstruct(first, {0});
        }
      } else {
        const int sub = dfs(root);
        if (!aborted_) {
          value = sub;
          chain = reconstruct(root, {});
        }
      }
      if (aborted_) {
        value = static_cast<int>(incumbent_.size());
        chain = incumbent_;
      }
    }
    SetSequence seq(n_);
    for (int ci : chain) seq.push_back(Subset(n_, cands_.elems[ci]));
    report.value = value;
    report.nodes_explored = nodes_;
    report.exhausted = !aborted_;
    report.witness_verified =
        is_irredundant(seq, cfg_.kind, /*require_base=*/!aborted_) &&
        seq.size() == value;
    report.witness = std::move(seq);
    report.elapsed_seconds = timer.seconds();
    return report;
  }

 private:
  bool refine_state(const LabelState& s, int ci, LabelState& child) const {
    child.labels = s.labels;
    child.parts = detail::refine_labels(child.labels, cands_.member[ci], s.parts);
    if (child.parts == s.parts) return false;  // stabilizer unchanged
    child.order = detail::order_of_labels(cfg_.kind, child.labels, child.parts);
    // A strict refinement always shrinks the Sym stabilizer; for Alt the
    // order can survive a refinement (types 1^n and 1^{n-2}2^1).
    return cfg_.kind == GroupKind::Sym || child.order < s.order;
  }

  // Longest strict suffix from this state; memoized together with the
  // first candidate attaining it.
  int dfs(const LabelState& s) {
    if (s.order == 1) return 0;
    std::string key(s.labels.begin(), s.labels.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.first;
    int best = 0, arg = -1;
    bool complete = true;
    const int numc = static_cast<int>(cands_.elems.size());
    LabelState child;
    for (int ci = 0; ci < numc; ++ci) {
      if (nodes_ >= cfg_.node_budget) aborted_ = true;
      if (aborted_) {
        complete = false;
        break;
      }
      ++nodes_;
      if (!refine_state(s, ci, child)) continue;
      // Each further step adds at least one block, so the suffix through
      // this child is at most 1 + (n - parts).
      if (1 + (n_ - child.parts) <= best) continue;
      path_.push_back(ci);
      if (path_.size() > incumbent_.size()) incumbent_ = path_;
      const int sub = dfs(child);
      path_.pop_back();
      if (1 + sub > best) {
        best = 1 + sub;
        arg = ci;
      }
      if (aborted_) {
        complete = false;
        break;
      }
    }
    if (complete) memo_.emplace(std::move(key), std::pair<int, int>{best, arg});
    return best;
  }

  std::vector<int> reconstruct(LabelState state, std::vector<int> prefix) const {
    while (state.order > 1) {
      const std::string key(state.labels.begin(), state.labels.end());
      const auto it = memo_.find(key);
      if (it == memo_.end())
        throw std::logic_error("chain reconstruction hit an unvisited state");
      const int arg = it->second.second;
      if (arg < 0) break;
      prefix.push_back(arg);
      LabelState child;
      refine_state(state, arg, child);
      state = std::move(child);
    }
    return prefix;
  }

  const SearchConfig cfg_;
  const int n_;
  const CandidateSet cands_;
  std::unordered_map<std::string, std::pair<int, int>> memo_;
  std::vector<int> path_, incumbent_;
  long long nodes_ = 0;
  bool aborted_ = false;
};

// ------------------------------------------------------------- H, B, b

class FamilyEngine {
 public:
  explicit FamilyEngine(const SearchConfig& cfg)
      : cfg_(cfg),
        n_(cfg.params.n),
        k_(cfg.params.k),
        cands_(make_candidates(cfg.params.n, cfg.params.k)),
        numc_(static_cast<int>(cands_.elems.size())),
        parallel_(cfg.threads > 1 && cfg.stat != Stat::min_base) {}

  StatReport run() {
    Timer timer;
    StatReport report;
    report.config = cfg_;
    const Node root = make_root();
    if (cfg_.stat == Stat::min_base) {
      run_min_base(root);
    } else if (parallel_) {
      run_parallel(root);
    } else {
      dfs_max(root);
    }
    report.value = best_;
    report.nodes_explored = nodes_.load();
    report.exhausted = !aborted_.load();
    SetFamily family(n_);
    if (best_ >= 0) {
      std::vector<Subset> members;
      for (int ci : best_members_) members.emplace_back(n_, cands_.elems[ci]);
      family = SetFamily(n_, std::move(members));
    } else {
      report.value = 0;  // inconclusive minimum-base run, nothing found
    }
    report.witness_verified = verified(family, report);
    report.witness = std::move(family);
    report.elapsed_seconds = timer.seconds();
    return report;
  }

 private:
  struct Node {
    std::vector<int> members;  // candidate indices, ascending
    std::vector<std::uint8_t> labels;
    int parts = 1;
    StabOrder order = 1;
    std::vector<std::vector<std::uint8_t>> rem_labels;  // family minus member i
    std::vector<int> rem_parts;
  };

  Node make_root() const {
    Node root;
    root.labels.assign(n_, 0);
    root.parts = 1;
    root.order = detail::order_of_labels(cfg_.kind, root.labels, 1);
    return root;
  }

  // Extends the family by candidate ci when the stabilizer strictly drops
  // and every earlier member stays necessary, i.e. the child family is
  // independent again. Subsets of independent families are independent, so
  // rejecting dependent children loses no candidate above them.
  bool make_child(const Node& p, int ci, Node& c) const {
    c.labels = p.labels;
    c.parts = detail::refine_labels(c.labels, cands_.member[ci], p.parts);
    if (c.parts == p.parts) return false;
    c.order = detail::order_of_labels(cfg_.kind, c.labels, c.parts);
    if (cfg_.kind == GroupKind::Alt && c.order >= p.order) return false;
    const int d = static_cast<int>(p.members.size());
    c.rem_labels.assign(d + 1, {});
    c.rem_parts.assign(d + 1, 0);
    for (int i = 0; i < d; ++i) {
      c.rem_labels[i] = p.rem_labels[i];
      c.rem_parts[i] =
          detail::refine_labels(c.rem_labels[i], cands_.member[ci], p.rem_parts[i]);
      // Nested stabilizers: equal order means member i adds nothing.
      if (detail::order_of_labels(cfg_.kind, c.rem_labels[i], c.rem_parts[i]) ==
          c.order)
        return false;
    }
    c.rem_labels[d] = p.labels;
    c.rem_parts[d] = p.parts;
    c.members = p.members;
    c.members.push_back(ci);
    return true;
  }

  bool count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cfg_.node_budget) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  int best_now() const {
    return parallel_ ? shared_best_.load(std::memory_order_relaxed) : best_;
  }

  void record(const Node& node) {
    const int d = static_cast<int>(node.members.size());
    if (parallel_) {
      std::lock_guard<std::mutex> lock(best_mu_);
      if (d > best_) {
        best_ = d;
        best_members_ = node.members;
        shared_best_.store(d, std::memory_order_relaxed);
      }
    } else if (d > best_) {
      best_ = d;
      best_members_ = node.members;
    }
  }

  bool is_candidate(const Node& node) const {
    return cfg_.stat == Stat::height || node.order == 1;
  }

  void dfs_max(const Node& node) {
    const int d = static_cast<int>(node.members.size());
    if (is_candidate(node) && d > best_now()) record(node);
    if (node.order == 1) return;  // nothing can shrink further
    const int start = d == 0 ? 0 : node.members.back() + 1;
    const int end = (d == 0 && cfg_.fix_first) ? 1 : numc_;
    Node child;
    for (int ci = start; ci < end; ++ci) {
      if (d + (numc_ - ci) <= best_now()) break;
      if (!count_node()) return;
      if (!make_child(node, ci, child)) continue;
      if (d + 1 + (n_ - child.parts) <= best_now()) continue;
      dfs_max(child);
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
  }

  // Same walk as dfs_max down to frontier_depth, where nodes are handed to
  // the worker pool instead of being expanded inline.
  void collect_frontier(const Node& node, int depth, int frontier_depth,
                        std::vector<Node>& out) {
    const int d = static_cast<int>(node.members.size());
    if (is_candidate(node) && d > best_now()) record(node);
    if (node.order == 1) return;
    const int start = d == 0 ? 0 : node.members.back() + 1;
    const int end = (d == 0 && cfg_.fix_first) ? 1 : numc_;
    Node child;
    for (int ci = start; ci < end; ++ci) {
      if (!count_node()) return;
      if (!make_child(node, ci, child)) continue;
      if (depth + 1 == frontier_depth)
        out.push_back(child);
      else
        collect_frontier(child, depth + 1, frontier_depth, out);
    }
  }

  void run_parallel(const Node& root) {
    shared_best_.store(best_, std::memory_order_relaxed);
    std::vector<Node> frontier;
    collect_frontier(root, 0, cfg_.fix_first ? 2 : 1, frontier);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= frontier.size() || aborted_.load(std::memory_order_relaxed))
          return;
        dfs_max(frontier[i]);
      }
    };
    std::vector<std::thread> pool;
    const int nthreads =
        std::max(1, std::min(cfg_.threads, static_cast<int>(frontier.size())));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Minimum base: iterative deepening on the family size. A minimum base is
  // a minimal base, hence independent, so the independence-pruned tree still
  // contains it.
  void run_min_base(const Node& root) {
    best_ = -1;
    if (root.order == 1) {
      best_ = 0;
      best_members_.clear();
      return;
    }
    const int need = cfg_.kind == GroupKind::Sym ? n_ : n_ - 1;
    const int max_split = std::min(k_, n_ - k_);
    int lower = 1;
    if (need > 2) lower = 1 + (need - 2 + max_split - 1) / max_split;
    for (int limit = lower; limit <= n_; ++limit) {
      if (dfs_min(root, limit)) return;
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
    throw std::logic_error("no base found up to size n");
  }

  bool dfs_min(const Node& node, int limit) {
    const int d = static_cast<int>(node.members.size());
    if (node.order == 1) {
      best_ = d;
      best_members_ = node.members;
      return true;
    }
    if (d == limit) return false;
    const int max_split = std::min(k_, n_ - k_);
    const int need = cfg_.kind == GroupKind::Sym ? n_ : n_ - 1;
    if (node.parts + (limit - d) * max_split < need) return false;
    const int start = d == 0 ? 0 : node.members.back() + 1;
    const int end = (d == 0 && cfg_.fix_first) ? 1 : numc_;
    Node child;
    for (int ci = start; ci < end; ++ci) {
      if (!count_node()) return false;
      if (!make_child(node, ci, child)) continue;
      if (dfs_min(child, limit)) return true;
      if (aborted_.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  bool verified(const SetFamily& family, const StatReport& report) const {
    switch (cfg_.stat) {
      case Stat::height:
        return is_independent(family, cfg_.kind) && family.size() == report.value;
      case Stat::max_minimal_base:
        return is_minimal_base(family, cfg_.kind) && family.size() == report.value;
      case Stat::min_base:
        if (best_ < 0) return false;
        return is_minimal_base(family, cfg_.kind) && family.size() == report.value;
      default:
        return false;
    }
  }

  const SearchConfig cfg_;
  const int n_, k_;
  const CandidateSet cands_;
  const int numc_;
  const bool parallel_;
  int best_ = -1;
  std::vector<int> best_members_;
  std::atomic<int> shared_best_{-1};
  std::mutex best_mu_;
  std::atomic<long long> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace

StatReport compute_I(SearchConfig config) {
  return IrredundantEngine(normalized(config, Stat::max_irredundant)).run();
}

StatReport compute_H(SearchConfig config) {
  SearchConfig cfg = normalized(config, Stat::height);
  FamilyEngine engine(cfg);
  return engine.run();
}

StatReport compute_B(SearchConfig config) {
  SearchConfig cfg = normalized(config, Stat::max_minimal_base);
  FamilyEngine engine(cfg);
  return engine.run();
}

StatReport compute_b(SearchConfig config) {
  SearchConfig cfg = normalized(config, Stat::min_base);
  FamilyEngine engine(cfg);
  return engine.run();
}

StatReport compute_stat(const SearchConfig& config) {
  switch (config.stat) {
    case Stat::max_irredundant: return compute_I(config);
    case Stat::height: return compute_H(config);
    case Stat::max_minimal_base: return compute_B(config);
    case Stat::min_base: return compute_b(config);
  }
  throw std::logic_error("unreachable statistic");
}

}  // namespace kstat::search
