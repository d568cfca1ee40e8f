#pragma once

// Backtracking search for t-fold blocking sets, (k,n)-arcs and maximal arcs.
//
// Subtrees at a fixed split depth become tasks; tasks run on a worker pool and
// results are merged in task order, then canonically sorted, so the output
// does not depend on the number of workers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fingeo/arcs.hpp"
#include "fingeo/bitset.hpp"
#include "fingeo/blocking.hpp"
#include "fingeo/error.hpp"
#include "fingeo/plane.hpp"

namespace fingeo {

inline constexpr const char* kEngineVersion = "fingeo-search 1.0";

enum class SearchKind { TFoldBlocking, KnArc, MaximalArc };
enum class SearchMode { Exists, EnumerateAll, EnumerateUpToIso };

/// Root-level symmetry breaking. `Root` forces a configuration every
/// solution contains up to collineation:
///  - blocking, t = 1, nontrivial: a tangent flag (P, l), a point Q off l and
///    a point R off l and PQ;
///  - blocking otherwise: two points, plus a third off their line when t >= 2;
///  - (k,2)-arcs with k >= 4: a frame;
///  - maximal arcs, n >= 3: three points of one line and a point off it.
/// With `Root`, EnumerateAll lists the solutions containing that configuration.
enum class Symmetry { None, Root };

inline const char* kind_name(SearchKind k) {
  switch (k) {
    case SearchKind::TFoldBlocking: return "t_fold_blocking";
    case SearchKind::KnArc: return "kn_arc";
    case SearchKind::MaximalArc: return "maximal_arc";
  }
  return "?";
}

inline const char* mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::Exists: return "exists";
    case SearchMode::EnumerateAll: return "enumerate_all";
    case SearchMode::EnumerateUpToIso: return "enumerate_up_to_iso";
  }
  return "?";
}

struct SearchProblem {
  Field field;
  SearchKind kind = SearchKind::TFoldBlocking;
  int param = 1;           // t for blocking sets, n for arcs
  int min_size = 0;
  int size_bound = 0;      // maximal cardinality
  SearchMode mode = SearchMode::Exists;
  bool nontrivial = false; // blocking sets: no full line
  Symmetry symmetry = Symmetry::None;
  std::uint64_t node_budget = 1'000'000'000ull;
  std::int64_t time_limit_ms = 0;  // 0: none
  int workers = 1;
  int split_depth = 2;
};

struct RootCase {
  std::vector<int> prefix;  // points of the task's root node
  std::uint64_t nodes = 0;
};

struct SearchOutcome {
  std::vector<PointSet> witnesses;  // sorted
  bool exhausted = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
  std::optional<int> iso_classes;
  std::vector<RootCase> root_cases;
};

namespace detail {

struct Node {
  Bitset in;
  Bitset forb;
  std::vector<int> counts;
  int size = 0;
  int next = 0;  // first candidate index (point-combination search)
};

class Solver {
 public:
  Solver(const Plane& P, const SearchProblem& pr) : P_(P), pr_(pr), N_(P.size()), q_(P.q()) {}

  Node empty() const { return Node{Bitset(N_), Bitset(N_), std::vector<int>(N_, 0), 0, 0}; }

  void add(Node& nd, int pnt) const {
    nd.in.set(pnt);
    ++nd.size;
    for (int l : P_.lines_through(pnt)) ++nd.counts[l];
  }

  /// Forced and forbidden points of the root, or nullopt when the forced
  /// configuration is infeasible.
  std::optional<Node> root() const {
    Node nd = empty();
    if (pr_.symmetry == Symmetry::None) return nd;
    const Field& F = P_.field();
    const Elem o = F.zero(), e = F.one();
    auto pt = [&](Elem x, Elem y, Elem z) { return P_.index_of({x, y, z}); };
    std::vector<int> forced;
    switch (pr_.kind) {
      case SearchKind::TFoldBlocking:
        if (pr_.param == 1 && pr_.nontrivial) {
          // tangent z = 0 at (1:0:0); Q = (0:0:1); R = (0:1:1)
          const int l = P_.index_of({o, o, e});
          const int Pp = pt(e, o, o);
          for (int x : P_.points_on(l))
            if (x != Pp) nd.forb.set(x);
          forced = {Pp, pt(o, o, e), pt(o, e, e)};
        } else if (pr_.param >= 2) {
          forced = {pt(e, o, o), pt(o, e, o), pt(o, o, e)};
        } else {
          forced = {pt(e, o, o), pt(o, e, o)};
        }
        break;
      case SearchKind::KnArc:
        if (pr_.param == 2 && pr_.min_size >= 4) forced = {pt(e, o, o), pt(o, e, o), pt(o, o, e), pt(e, e, e)};
        break;
      case SearchKind::MaximalArc:
        if (pr_.param == 2) forced = {pt(e, o, o), pt(o, e, o), pt(o, o, e), pt(e, e, e)};
        else forced = {pt(e, o, o), pt(o, e, o), pt(e, e, o), pt(o, o, e)};
        break;
    }
    for (int f : forced) {
      if (nd.forb.test(f)) return std::nullopt;
      add(nd, f);
    }
    if (nd.size > pr_.size_bound) return std::nullopt;
    return nd;
  }

  /// Propagates nd, appends its children in DFS order and returns the
  /// solution it represents, if any.
  std::optional<PointSet> visit(Node nd, std::vector<Node>& kids) const {
    switch (pr_.kind) {
      case SearchKind::TFoldBlocking: return visit_blocking(std::move(nd), kids);
      case SearchKind::KnArc: return visit_arc(std::move(nd), kids);
      case SearchKind::MaximalArc: return visit_maximal(std::move(nd), kids);
    }
    return std::nullopt;
  }

 private:
  Bitset available(const Node& nd) const {
    Bitset a(N_);
    for (int i = 0; i < N_; ++i) a.set(i);
    a.and_not(nd.in);
    a.and_not(nd.forb);
    return a;
  }

  // a point of B all of whose lines carry more than t points can never be essential
  bool has_dead_point(const Node& nd, int t) const {
    bool dead = false;
    nd.in.for_each([&](int pnt) {
      if (dead) return;
      for (int l : P_.lines_through(pnt))
        if (nd.counts[l] <= t) return;
      dead = true;
    });
    return dead;
  }

  std::optional<PointSet> visit_blocking(Node nd, std::vector<Node>& kids) const {
    const int t = pr_.param;
    for (bool changed = true; changed;) {
      changed = false;
      const Bitset avail = available(nd);
      for (int l = 0; l < N_ && !changed; ++l) {
        const int c = nd.counts[l];
        if (pr_.nontrivial) {
          if (c == q_ + 1) return std::nullopt;
          if (c == q_) {
            for (int x : P_.points_on(l))
              if (avail.test(x)) {
                nd.forb.set(x);
                changed = true;
              }
            if (changed) break;
          }
        }
        if (c >= t) continue;
        const int av = P_.line_mask(l).count_and(avail);
        if (av < t - c) return std::nullopt;
        if (av == t - c) {
          for (int x : P_.points_on(l))
            if (avail.test(x)) add(nd, x);
          if (nd.size > pr_.size_bound) return std::nullopt;
          changed = true;
        }
      }
    }
    if (has_dead_point(nd, t)) return std::nullopt;

    int deficit = 0;
    std::vector<int> deficient;
    for (int l = 0; l < N_; ++l)
      if (nd.counts[l] < t) {
        deficit += t - nd.counts[l];
        deficient.push_back(l);
      }
    if (deficient.empty()) {
      if (nd.size < pr_.min_size) return std::nullopt;
      return PointSet(nd.in.to_vector());
    }
    const int room = pr_.size_bound - nd.size;
    if (room <= 0) return std::nullopt;
    // each new point lowers the deficit by at most the number of deficient lines through it
    const Bitset avail = available(nd);
    std::vector<int> cover(N_, 0);
    for (int l : deficient)
      for (int x : P_.points_on(l))
        if (avail.test(x)) ++cover[x];
    std::vector<int> top;
    avail.for_each([&](int x) { top.push_back(cover[x]); });
    std::sort(top.rbegin(), top.rend());
    int reach = 0;
    for (int i = 0; i < room && i < static_cast<int>(top.size()); ++i) reach += top[i];
    if (reach < deficit) return std::nullopt;

    int best = -1, best_av = 1 << 30;
    for (int l : deficient) {
      const int av = P_.line_mask(l).count_and(avail);
      if (av < best_av) {
        best_av = av;
        best = l;
      }
    }
    std::vector<int> cand;
    for (int x : P_.points_on(best))
      if (avail.test(x)) cand.push_back(x);
    const int need = t - nd.counts[best];
    std::sort(cand.begin(), cand.end());
    for (int i = 0; i + need <= static_cast<int>(cand.size()); ++i) {
      Node ch = nd;
      for (int j = 0; j < i; ++j) ch.forb.set(cand[j]);
      add(ch, cand[i]);
      kids.push_back(std::move(ch));
    }
    return std::nullopt;
  }

  std::optional<PointSet> visit_arc(Node nd, std::vector<Node>& kids) const {
    const int n = pr_.param;
    std::optional<PointSet> sol;
    if (nd.size >= pr_.min_size) sol = PointSet(nd.in.to_vector());
    if (nd.size < pr_.size_bound) {
      for (int x = nd.next; x < N_; ++x) {
        if (N_ - x < pr_.min_size - nd.size) break;
        if (nd.in.test(x) || nd.forb.test(x)) continue;
        bool ok = true;
        for (int l : P_.lines_through(x))
          if (nd.counts[l] >= n) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Node ch = nd;
        add(ch, x);
        ch.next = x + 1;
        kids.push_back(std::move(ch));
      }
    }
    return sol;
  }

  std::optional<PointSet> visit_maximal(Node nd, std::vector<Node>& kids) const {
    const int n = pr_.param;
    const int K = pr_.size_bound;
    for (bool changed = true; changed;) {
      changed = false;
      const Bitset avail = available(nd);
      for (int l = 0; l < N_; ++l) {
        const int c = nd.counts[l];
        if (c > n) return std::nullopt;
        const int av = P_.line_mask(l).count_and(avail);
        if (av == 0) {
          if (c != 0 && c != n) return std::nullopt;
          continue;
        }
        if (c == n || (c == 0 && av < n)) {
          for (int x : P_.points_on(l))
            if (avail.test(x)) nd.forb.set(x);
          changed = true;
          break;
        }
        if (c > 0 && av < n - c) return std::nullopt;
        if (c > 0 && av == n - c) {
          for (int x : P_.points_on(l))
            if (avail.test(x)) add(nd, x);
          if (nd.size > K) return std::nullopt;
          changed = true;
          break;
        }
      }
    }
    if (nd.size > K) return std::nullopt;
    const Bitset avail = available(nd);
    if (nd.size == K) {
      for (int c : nd.counts)
        if (c != 0 && c != n) return std::nullopt;
      return PointSet(nd.in.to_vector());
    }
    if (avail.count() < K - nd.size) return std::nullopt;
    int best = -1, best_av = 1 << 30;
    for (int l = 0; l < N_; ++l) {
      const int c = nd.counts[l];
      if (c == 0 || c == n) continue;
      const int av = P_.line_mask(l).count_and(avail);
      if (av < best_av) {
        best_av = av;
        best = l;
      }
    }
    if (best < 0) {
      const int x = avail.first();
      Node with = nd, without = nd;
      add(with, x);
      without.forb.set(x);
      kids.push_back(std::move(with));
      kids.push_back(std::move(without));
      return std::nullopt;
    }
    std::vector<int> cand;
    for (int x : P_.points_on(best))
      if (avail.test(x)) cand.push_back(x);
    const int need = n - nd.counts[best];
    for (int i = 0; i + need <= static_cast<int>(cand.size()); ++i) {
      Node ch = nd;
      for (int j = 0; j < i; ++j) ch.forb.set(cand[j]);
      add(ch, cand[i]);
      kids.push_back(std::move(ch));
    }
    return std::nullopt;
  }

  const Plane& P_;
  const SearchProblem& pr_;
  int N_;
  int q_;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<long long> first_hit{-1};  // lowest task index with a witness in Exists mode
  std::uint64_t budget = 0;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
};

struct TaskResult {
  std::vector<PointSet> found;
  std::uint64_t nodes = 0;
  bool complete = true;
};

inline void dfs(const Solver& S, Node root, bool exists, Shared& sh, TaskResult& out, long long task_id) {
  std::vector<std::vector<Node>> stack;
  std::uint64_t local = 0;
  auto over_budget = [&]() {
    if (sh.stop.load(std::memory_order_relaxed)) return true;
    if (sh.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > sh.budget) {
      sh.stop = true;
      return true;
    }
    if (sh.has_deadline && (local & 1023) == 0 && std::chrono::steady_clock::now() > sh.deadline) {
      sh.stop = true;
      return true;
    }
    return false;
  };
  auto skip = [&]() {
    if (!exists) return false;
    const long long h = sh.first_hit.load();
    return h >= 0 && h < task_id;
  };
  std::vector<Node> level{std::move(root)};
  stack.push_back(std::move(level));
  while (!stack.empty()) {
    if (stack.back().empty()) {
      stack.pop_back();
      continue;
    }
    Node nd = std::move(stack.back().back());
    stack.back().pop_back();
    if (skip()) {
      out.complete = false;
      return;
    }
    if (over_budget()) {
      out.complete = false;
      return;
    }
    ++local;
    ++out.nodes;
    std::vector<Node> kids;
    if (auto w = S.visit(std::move(nd), kids)) {
      out.found.push_back(std::move(*w));
      if (exists) {
        long long cur = sh.first_hit.load();
        while ((cur < 0 || cur > task_id) && !sh.first_hit.compare_exchange_weak(cur, task_id)) {
        }
        return;
      }
    }
    // children in reverse so the first child is explored first
    std::reverse(kids.begin(), kids.end());
    if (!kids.empty()) stack.push_back(std::move(kids));
  }
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

inline std::vector<std::int64_t> set_fingerprint(const Plane& P, const PointSet& S) {
  const auto counts = P.line_counts(S);
  std::vector<std::int64_t> fp;
  std::vector<int> spec(counts.begin(), counts.end());
  std::sort(spec.begin(), spec.end());
  fp.push_back(S.size());
  fp.insert(fp.end(), spec.begin(), spec.end());
  std::vector<std::vector<int>> per;
  for (int x : S) {
    std::vector<int> m;
    for (int l : P.lines_through(x)) m.push_back(counts[l]);
    std::sort(m.begin(), m.end());
    per.push_back(std::move(m));
  }
  std::sort(per.begin(), per.end());
  for (const auto& m : per) fp.insert(fp.end(), m.begin(), m.end());
  return fp;
}

/// One representative per collineation class, in order of first appearance.
inline std::vector<PointSet> isomorph_reduce(const Plane& P, const std::vector<PointSet>& sets) {
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets;  // fingerprint -> rep indices
  std::vector<PointSet> reps;
  for (const auto& S : sets) {
    auto& b = buckets[set_fingerprint(P, S)];
    bool seen = false;
    for (std::size_t r : b)
      if (are_isomorphic(P, reps[r], S)) {
        seen = true;
        break;
      }
    if (!seen) {
      b.push_back(reps.size());
      reps.push_back(S);
    }
  }
  return reps;
}

inline void validate(const SearchProblem& pr) {
  const std::int64_t q = pr.field.q();
  if (pr.size_bound < 0 || pr.size_bound > q * q + q + 1)
    throw Error(Errc::PreconditionViolated, "size bound must lie in [0, q^2+q+1]");
  if (pr.param < 1) throw Error(Errc::PreconditionViolated, "t and n must be positive");
  if (pr.kind != SearchKind::TFoldBlocking && pr.param < 2) throw Error(Errc::PreconditionViolated, "arcs need n >= 2");
  if (pr.kind == SearchKind::MaximalArc) {
    if (pr.param > q) throw Error(Errc::PreconditionViolated, "maximal arcs need n <= q");
    if (pr.size_bound != (pr.param - 1) * (q + 1) + 1)
      throw Error(Errc::PreconditionViolated, "maximal arcs have exactly (n-1)(q+1)+1 points");
  }
  if (pr.workers < 1) throw Error(Errc::PreconditionViolated, "workers must be >= 1");
}

inline SearchOutcome run(const SearchProblem& pr) {
  validate(pr);
  const Plane P(pr.field);
  detail::Solver S(P, pr);
  const bool exists = pr.mode == SearchMode::Exists;
  SearchOutcome out;

  detail::Shared sh;
  sh.budget = pr.node_budget;
  if (pr.time_limit_ms > 0) {
    sh.has_deadline = true;
    sh.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(pr.time_limit_ms);
  }

  auto root = S.root();
  if (!root) {
    out.exhausted = true;
    return out;
  }

  // breadth expansion to the split depth; solutions above it go first
  std::vector<PointSet> prefix_found;
  std::vector<detail::Node> tasks{*root};
  std::uint64_t prefix_nodes = 0;
  for (int depth = 0; depth < pr.split_depth && !tasks.empty(); ++depth) {
    std::vector<detail::Node> next;
    for (auto& nd : tasks) {
      ++prefix_nodes;
      std::vector<detail::Node> kids;
      if (auto w = S.visit(nd, kids)) prefix_found.push_back(std::move(*w));
      for (auto& k : kids) next.push_back(std::move(k));
    }
    tasks = std::move(next);
    if (exists && !prefix_found.empty()) break;
  }
  sh.nodes = prefix_nodes;

  std::vector<detail::TaskResult> results(tasks.size());
  if (!(exists && !prefix_found.empty())) {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    auto work = [&]() {
      for (std::size_t i; (i = cursor.fetch_add(1)) < tasks.size();)
        detail::dfs(S, tasks[i], exists, sh, results[i], static_cast<long long>(i));
    };
    const int w = std::max(1, std::min<int>(pr.workers, static_cast<int>(tasks.size())));
    if (w == 1) {
      work();
    } else {
      for (int i = 0; i < w; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }

  out.nodes = sh.nodes.load();
  out.budget_exceeded = sh.stop.load();
  bool all_complete = !out.budget_exceeded;
  out.root_cases.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    out.root_cases.push_back({tasks[i].in.to_vector(), results[i].nodes});
    if (!results[i].complete) all_complete = false;
  }
  if (exists) {
    if (!prefix_found.empty()) {
      out.witnesses = {prefix_found.front()};
    } else {
      for (auto& r : results)
        if (!r.found.empty()) {
          out.witnesses = {r.found.front()};
          break;
        }
    }
    // a found witness settles the question; otherwise every task must have finished
    out.exhausted = out.witnesses.empty() ? all_complete : false;
  } else {
    out.witnesses = std::move(prefix_found);
    for (auto& r : results) out.witnesses.insert(out.witnesses.end(), r.found.begin(), r.found.end());
    std::sort(out.witnesses.begin(), out.witnesses.end());
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
    out.exhausted = all_complete;
    if (pr.mode == SearchMode::EnumerateUpToIso) {
      out.witnesses = isomorph_reduce(P, out.witnesses);
      std::sort(out.witnesses.begin(), out.witnesses.end());
      out.iso_classes = static_cast<int>(out.witnesses.size());
    }
  }
  return out;
}

inline std::string problem_key(const SearchProblem& pr) {
  std::ostringstream os;
  os << kEngineVersion << '|' << pr.field.to_string() << '|' << kind_name(pr.kind) << '|' << pr.param << '|'
     << pr.min_size << '|' << pr.size_bound << '|' << pr.nontrivial << '|' << (pr.symmetry == Symmetry::Root);
  return os.str();
}

struct Certificate {
  std::string engine = kEngineVersion;
  std::uint64_t problem_hash = 0;
  std::string problem;
  std::uint64_t nodes = 0;
  std::vector<RootCase> root_cases;
};

/// Runs an Exists search and certifies that it found nothing after covering
/// the whole space.
inline Certificate certify_nonexistence(SearchProblem pr) {
  pr.mode = SearchMode::Exists;
  const auto outcome = run(pr);
  if (!outcome.witnesses.empty()) throw Error(Errc::WitnessFound, "a witness exists");
  if (!outcome.exhausted) throw Error(Errc::NotExhausted, "search was truncated by its budget");
  Certificate c;
  c.problem = problem_key(pr);
  c.problem_hash = detail::fnv1a(c.problem);
  c.nodes = outcome.nodes;
  c.root_cases = outcome.root_cases;
  return c;
}

/// Verifier-side check of a witness against the problem.
inline bool verify_witness(const Plane& P, const SearchProblem& pr, const PointSet& W) {
  if (W.size() > pr.size_bound || W.size() < pr.min_size) return false;
  switch (pr.kind) {
    case SearchKind::TFoldBlocking: {
      const auto r = analyze(P, W, pr.param);
      return r.t_max >= pr.param && r.minimal && (!pr.nontrivial || !r.contains_line);
    }
    case SearchKind::KnArc: return arc_analyze(P, W, pr.param).is_arc;
    case SearchKind::MaximalArc: return arc_analyze(P, W, pr.param).is_maximal;
  }
  return false;
}

}  // namespace fingeo
