#pragma once

// Acceptance batteries. Each criterion reports pass/fail with a one-line
// detail; parts marked long only run with allow_long.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fingeo/arcs.hpp"
#include "fingeo/blocking.hpp"
#include "fingeo/directions.hpp"
#include "fingeo/linearsets.hpp"
#include "fingeo/plane.hpp"
#include "fingeo/poly.hpp"
#include "fingeo/redei.hpp"
#include "fingeo/search.hpp"

namespace fingeo {

inline constexpr std::uint64_t kSuiteSeed = 20240601;

struct SuiteOptions {
  bool allow_long = false;
  int workers = 1;
  std::uint64_t seed = kSuiteSeed;
  std::set<int> only;  // empty: all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool long_skipped = false;  // some long part did not run
  std::string detail;
  double ms = 0;
};

namespace suite_detail {

class Log {
 public:
  void fail(const std::string& what) {
    ok_ = false;
    if (fails_++ < 3) os_ << "FAIL[" << what << "] ";
  }
  void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void note(const std::string& s) { os_ << s << "; "; }
  bool ok() const { return ok_; }
  std::string str() const { return os_.str(); }

 private:
  bool ok_ = true;
  int fails_ = 0;
  std::ostringstream os_;
};

inline FieldFn random_fn(const Field& F, std::mt19937_64& rng, bool zero_at_zero) {
  std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
  std::vector<Elem> t(F.q());
  for (auto& x : t) x = Elem{d(rng)};
  if (zero_at_zero) t[0] = F.zero();
  return FieldFn(F, std::move(t));
}

/// Calls fn on every table with f(0) = 0.
template <class Fn>
void for_each_fn(const Field& F, Fn&& fn) {
  const std::uint32_t q = F.q();
  std::vector<Elem> t(q, F.zero());
  while (true) {
    fn(FieldFn(F, t));
    std::uint32_t i = 1;
    while (i < q && ++t[i].rep == q) t[i++].rep = 0;
    if (i == q) break;
  }
}

template <class Fn>
void sweep(const SuiteOptions& o, Fn&& fn) {
  for (int q : {4, 5, 7}) {
    const Field F = field_of_order(q);
    for_each_fn(F, [&](const FieldFn& f) { fn(f); });
  }
  for (int q : {8, 9}) {
    const Field F = field_of_order(q);
    std::mt19937_64 rng(o.seed + q);
    for (int i = 0; i < 100000; ++i) fn(random_fn(F, rng, true));
  }
}

inline std::string spectrum_str(const std::map<int, int>& sp) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : sp) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

inline SearchProblem blocking_problem(int q, int t, int lo, int hi, SearchMode mode, bool nontrivial, Symmetry sym,
                                      const SuiteOptions& o) {
  SearchProblem pr{field_of_order(q)};
  pr.kind = SearchKind::TFoldBlocking;
  pr.param = t;
  pr.min_size = lo;
  pr.size_bound = hi;
  pr.mode = mode;
  pr.nontrivial = nontrivial;
  pr.symmetry = sym;
  pr.workers = o.workers;
  return pr;
}

inline SearchProblem arc_problem(int q, int n, int lo, int hi, SearchMode mode, Symmetry sym, const SuiteOptions& o) {
  SearchProblem pr{field_of_order(q)};
  pr.kind = SearchKind::KnArc;
  pr.param = n;
  pr.min_size = lo;
  pr.size_bound = hi;
  pr.mode = mode;
  pr.symmetry = sym;
  pr.workers = o.workers;
  return pr;
}

inline SearchProblem maximal_problem(int q, int n, SearchMode mode, const SuiteOptions& o) {
  SearchProblem pr{field_of_order(q)};
  pr.kind = SearchKind::MaximalArc;
  pr.param = n;
  pr.size_bound = (n - 1) * (q + 1) + 1;
  pr.min_size = pr.size_bound;
  pr.mode = mode;
  pr.symmetry = Symmetry::Root;
  pr.workers = o.workers;
  return pr;
}

/// Certificate of nonexistence; false (with a note) when refused.
inline bool certify(Log& log, const SearchProblem& pr, const std::string& label) {
  try {
    const auto c = certify_nonexistence(pr);
    log.note(label + ": none, " + std::to_string(c.nodes) + " nodes");
    return true;
  } catch (const Error& e) {
    log.fail(label + ": " + e.what());
    return false;
  }
}

// Minimal t-fold blocking sets and (k,n)-arcs by subset enumeration, with
// incidence recomputed from coordinates.
struct NaiveResult {
  std::vector<PointSet> blocking;
  std::vector<PointSet> arcs;
};

inline NaiveResult naive_enumerate(const Plane& P, int t, bool nontrivial, int n) {
  const Field& F = P.field();
  const int N = P.size();
  std::vector<std::vector<int>> on(N);
  for (int l = 0; l < N; ++l)
    for (int x = 0; x < N; ++x) {
      const auto& a = P.point(x);
      const auto& b = P.line(l);
      const Elem d = F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
      if (d.is_zero()) on[l].push_back(x);
    }
  NaiveResult r;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    std::vector<int> cnt(N, 0);
    for (int l = 0; l < N; ++l)
      for (int x : on[l])
        if (mask >> x & 1u) ++cnt[l];
    bool blocks = true, full = false, arc = true;
    for (int l = 0; l < N; ++l) {
      if (cnt[l] < t) blocks = false;
      if (cnt[l] == P.q() + 1) full = true;
      if (cnt[l] > n) arc = false;
    }
    std::vector<int> pts;
    for (int x = 0; x < N; ++x)
      if (mask >> x & 1u) pts.push_back(x);
    if (arc) r.arcs.emplace_back(pts);
    if (!blocks || (nontrivial && full)) continue;
    bool minimal = true;
    for (int x : pts) {
      bool essential = false;
      for (int l = 0; l < N && !essential; ++l)
        if (cnt[l] == t && std::find(on[l].begin(), on[l].end(), x) != on[l].end()) essential = true;
      if (!essential) minimal = false;
    }
    if (minimal) r.blocking.emplace_back(pts);
  }
  std::sort(r.blocking.begin(), r.blocking.end());
  std::sort(r.arcs.begin(), r.arcs.end());
  return r;
}

// ---------------------------------------------------------------- criteria

inline void c1(const SuiteOptions&, Log& log) {
  int checked = 0;
  for (int q : {5, 7, 9, 25, 27}) {
    const Field F = field_of_order(q);
    const int N = directions_of(example_function(ExampleKind::HalfPower, F)).N;
    log.check(N == (q + 3) / 2, "half power q=" + std::to_string(q) + " N=" + std::to_string(N));
    ++checked;
  }
  for (auto [q, e] : std::vector<std::pair<int, int>>{{9, 1}, {16, 2}, {27, 1}}) {
    const Field F = field_of_order(q);
    const int N = directions_of(example_function(ExampleKind::FrobPower, F, e)).N;
    const auto pe = nt::ipow(F.p(), e);
    log.check(N == (q - 1) / (pe - 1), "frobenius q=" + std::to_string(q) + " N=" + std::to_string(N));
    ++checked;
  }
  for (auto [q, e] : std::vector<std::pair<int, int>>{{4, 1}, {8, 1}, {9, 1}, {16, 2}}) {
    const Field F = field_of_order(q);
    const int N = directions_of(example_function(ExampleKind::SubfieldTrace, F, e)).N;
    const auto pe = nt::ipow(F.p(), e);
    log.check(N == q / pe + 1, "trace q=" + std::to_string(q) + " N=" + std::to_string(N));
    ++checked;
  }
  log.note(std::to_string(checked) + " formulas checked");
}

inline void c2(const SuiteOptions& o, Log& log) {
  std::uint64_t total = 0, nonlinear = 0, bad = 0;
  sweep(o, [&](const FieldFn& f) {
    ++total;
    const auto rep = directions_of(f);
    if (rep.N < 2) return;
    ++nonlinear;
    if (check_redei_intervals(f.field, rep.N).empty()) {
      ++bad;
      log.fail("q=" + std::to_string(f.field.q()) + " N=" + std::to_string(rep.N) + " f=" + f.to_string());
    }
  });
  log.note(std::to_string(total) + " functions, " + std::to_string(nonlinear) + " nonlinear, " + std::to_string(bad) +
           " violations");
}

inline void c3(const SuiteOptions& o, Log& log) {
  std::uint64_t total = 0, overlaps = 0, lin_checked = 0, bad = 0;
  sweep(o, [&](const FieldFn& f) {
    ++total;
    const auto v = linearity_verdict(f);
    if (v.report.cases.empty()) {
      ++bad;
      log.fail("no case q=" + std::to_string(f.field.q()) + " f=" + f.to_string());
    }
    if (v.report.cases.size() > 1) ++overlaps;
    if (v.linearity_hypothesis) {
      ++lin_checked;
      if (!v.linearity_holds) {
        ++bad;
        log.fail("not linear q=" + std::to_string(f.field.q()) + " f=" + f.to_string());
      }
    }
  });
  log.note(std::to_string(total) + " functions, " + std::to_string(overlaps) + " overlaps, " +
           std::to_string(lin_checked) + " linearity checks, " + std::to_string(bad) + " violations");
}

inline void c4(const SuiteOptions& o, Log& log) {
  std::uint64_t funcs = 0, t6_checked = 0, t6_skipped = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field F = field_of_order(q);
    std::vector<FieldFn> corpus;
    if (F.p() != 2) corpus.push_back(example_function(ExampleKind::HalfPower, F));
    for (int e = 1; e < F.n(); ++e)
      if (F.n() % e == 0) {
        corpus.push_back(example_function(ExampleKind::FrobPower, F, e));
        corpus.push_back(example_function(ExampleKind::SubfieldTrace, F, e));
      }
    std::mt19937_64 rng(o.seed + 100 + q);
    for (int i = 0; i < 1000; ++i) corpus.push_back(random_fn(F, rng, false));
    const Poly xq_x = Poly::field_poly(F);
    for (const auto& f : corpus) {
      ++funcs;
      const auto rep = directions_of(f);
      const RedeiPoly R = redei_poly_of_function(f);
      std::vector<char> in(F.q(), 0);
      for (Elem d : rep.dirs) in[d.rep] = 1;
      for (Elem y : F.elements()) {
        const Poly s = R.specialize(y);
        if (!in[y.rep]) {
          log.check(s == xq_x, "R(X,y) != X^q - X q=" + std::to_string(q));
        } else if (s.coeff(q - 1).is_zero()) {
          ++t6_checked;
          log.check(!classify_xq_plus_g(s).empty(), "trichotomy q=" + std::to_string(q));
        } else {
          ++t6_skipped;  // only when D_f is all of GF(q)
          log.check(rep.N == q, "nonzero X^(q-1) coefficient with N < q");
        }
      }
      const auto vp = vanishing_profile(R, rep.dirs);
      log.check(vp.complement_range_holds, "vanishing range q=" + std::to_string(q) + " f=" + f.to_string());
      log.check(vp.degree_drop, "deg r_i >= i q=" + std::to_string(q));
      log.check(vp.max_g_degree <= vp.g_degree_bound, "deg g bound q=" + std::to_string(q));
    }
  }
  log.note(std::to_string(funcs) + " functions, " + std::to_string(t6_checked) + " specializations classified, " +
           std::to_string(t6_skipped) + " with N = q");
}

inline void c5(const SuiteOptions&, Log& log) {
  for (int q : {4, 5, 7, 8, 9}) {
    const Field F = field_of_order(q);
    std::uint64_t count = 0;
    std::vector<Elem> roots;
    std::function<void(std::uint32_t, Elem)> rec = [&](std::uint32_t from, Elem sum) {
      if (static_cast<int>(roots.size()) == q) {
        if (!sum.is_zero()) return;  // X^(q-1) coefficient is minus the root sum
        ++count;
        const Poly f = Poly::from_roots(F, roots);
        if (classify_xq_plus_g(f).empty()) log.fail("q=" + std::to_string(q) + " f=" + f.to_string());
        return;
      }
      for (std::uint32_t r = from; r < F.q(); ++r) {
        roots.push_back(Elem{r});
        rec(r, F.add(sum, Elem{r}));
        roots.pop_back();
      }
    };
    rec(0, F.zero());
    log.note("q=" + std::to_string(q) + ": " + std::to_string(count));
  }
}

inline void c6(const SuiteOptions& o, Log& log) {
  for (int q : {4, 8, 9}) {
    const Field F = field_of_order(q);
    std::mt19937_64 rng(o.seed + 200 + q);
    std::uniform_int_distribution<std::uint32_t> el(0, F.q() - 1);
    std::uniform_int_distribution<int> deg(q, 2 * q - 1);
    std::map<int, int> hist;
    int done = 0;
    while (done < 10000) {
      std::vector<Elem> roots(deg(rng));
      for (auto& r : roots) r = Elem{el(rng)};
      const Poly f = Poly::from_roots(F, roots);
      const auto prof = lacunary_split(f);
      if (!prof.coprime) continue;
      ++done;
      const auto res = classify_lacunary(f);
      if (res.cases.empty()) log.fail("q=" + std::to_string(q) + " f=" + f.to_string());
      for (int c : res.cases) ++hist[c];
    }
    log.note("q=" + std::to_string(q) + " cases " + spectrum_str(hist));
  }
}

inline void c7(const SuiteOptions& o, Log& log) {
  certify(log, blocking_problem(4, 1, 0, 6, SearchMode::Exists, true, Symmetry::Root, o), "PG(2,4) size<=6");
  const auto out = run(blocking_problem(4, 1, 7, 7, SearchMode::EnumerateAll, true, Symmetry::None, o));
  const Plane P4(field_of_order(4));
  const auto reps = isomorph_reduce(P4, out.witnesses);
  log.check(out.exhausted, "7-point enumeration truncated");
  log.check(reps.size() == 1, "7-point classes = " + std::to_string(reps.size()));
  log.check(!reps.empty() && are_isomorphic(P4, reps[0], baer_subplane(P4)).has_value(), "not a Baer subplane");
  log.note(std::to_string(out.witnesses.size()) + " seven-point sets, " + std::to_string(reps.size()) + " class");

  const Plane P9(field_of_order(9));
  const auto r = analyze(P9, baer_subplane(P9));
  const std::map<int, int> want{{1, 78}, {4, 13}};
  log.check(r.spectrum == want, "PG(2,9) Baer spectrum " + spectrum_str(r.spectrum));
  log.check(r.minimal && r.redei_type, "PG(2,9) Baer subplane minimal/Redei");
  log.note("PG(2,9) Baer " + spectrum_str(r.spectrum));
}

inline void c8(const SuiteOptions& o, Log& log, bool& skipped) {
  certify(log, blocking_problem(5, 1, 0, 8, SearchMode::Exists, true, Symmetry::Root, o), "PG(2,5) size<=8");
  const auto ex = run(blocking_problem(5, 1, 9, 9, SearchMode::Exists, true, Symmetry::Root, o));
  log.check(ex.witnesses.size() == 1, "no size-9 witness in PG(2,5)");
  const Plane P5(field_of_order(5));
  const auto all9 = run(blocking_problem(5, 1, 9, 9, SearchMode::EnumerateUpToIso, true, Symmetry::Root, o));
  log.check(all9.exhausted, "size-9 enumeration truncated");
  for (const auto& B : all9.witnesses)
    for (const auto& [pnt, t] : tangent_profile(P5, B)) log.check(t == 2, "size-9 point with " + std::to_string(t) + " tangents");
  log.note("PG(2,5) size 9: " + std::to_string(all9.witnesses.size()) + " classes");

  if (!o.allow_long) {
    skipped = true;
    return;
  }
  const Plane P7(field_of_order(7));
  const auto all12 = run(blocking_problem(7, 1, 12, 12, SearchMode::EnumerateUpToIso, true, Symmetry::Root, o));
  log.check(all12.exhausted, "PG(2,7) enumeration truncated");
  int redei = 0;
  for (const auto& B : all12.witnesses) {
    if (analyze(P7, B).redei_type) ++redei;
    for (const auto& [pnt, t] : tangent_profile(P7, B)) log.check(t == 3, "PG(2,7) point with " + std::to_string(t) + " tangents");
  }
  log.check(all12.witnesses.size() == 2, "PG(2,7) classes = " + std::to_string(all12.witnesses.size()));
  log.check(redei == 1, "PG(2,7) Redei classes = " + std::to_string(redei));
  log.note("PG(2,7) size 12: " + std::to_string(all12.witnesses.size()) + " classes, " + std::to_string(redei) +
           " Redei, " + std::to_string(all12.nodes) + " nodes");
}

inline void c9(const SuiteOptions& o, Log& log, bool& skipped) {
  // constructions: small minimal blocking sets in PG(2,8) and PG(2,9)
  auto check_small = [&](const Plane& P, const PointSet& B, const std::string& label) {
    const auto r = analyze(P, B);
    if (r.t_max >= 1 && r.minimal && r.small)
      log.check(r.szonyi_ok, label + " spectrum " + spectrum_str(r.spectrum));
    return r.t_max >= 1 && r.minimal && r.small;
  };
  int corpus = 0;
  for (int q : {8, 9}) {
    const Plane P(field_of_order(q));
    const Field& F = P.field();
    std::vector<std::pair<PointSet, std::string>> sets;
    for (int e = 1; e < F.n(); ++e)
      if (F.n() % e == 0) {
        sets.emplace_back(redei_graph(P, example_function(ExampleKind::SubfieldTrace, F, e)), "trace");
        sets.emplace_back(redei_graph(P, example_function(ExampleKind::FrobPower, F, e)), "frobenius");
      }
    if (F.n() % 2 == 0) sets.emplace_back(baer_subplane(P), "baer");
    for (const auto& [B, label] : sets)
      if (check_small(P, B, "q=" + std::to_string(q) + " " + label)) ++corpus;
  }
  log.check(corpus >= 3, "small corpus has " + std::to_string(corpus) + " sets");
  log.note(std::to_string(corpus) + " small constructions");

  if (!o.allow_long) {
    skipped = true;
    return;
  }
  for (auto [q, hi] : std::vector<std::pair<int, int>>{{8, 13}, {9, 14}}) {
    const Plane P(field_of_order(q));
    const auto out = run(blocking_problem(q, 1, 0, hi, SearchMode::EnumerateUpToIso, true, Symmetry::Root, o));
    log.check(out.exhausted, "PG(2," + std::to_string(q) + ") search truncated");
    std::set<int> sizes;
    for (const auto& B : out.witnesses) {
      sizes.insert(B.size());
      check_small(P, B, "search q=" + std::to_string(q));
    }
    if (q == 8) log.check(sizes == std::set<int>{13}, "PG(2,8) small sizes differ from {13}");
    std::ostringstream os;
    for (int s : sizes) os << s << ' ';
    log.note("PG(2," + std::to_string(q) + "): " + std::to_string(out.witnesses.size()) + " classes, sizes " + os.str() +
             std::to_string(out.nodes) + " nodes");
  }
}

inline void c10(const SuiteOptions&, Log& log) {
  const Plane P(field_of_order(9));
  const auto parts = baer_partition(P);
  log.check(parts.size() == 7, "partition has " + std::to_string(parts.size()) + " members");
  std::vector<int> hits(P.size(), 0);
  for (const auto& B : parts) {
    for (int x : B) ++hits[x];
    const auto r = analyze(P, B);
    std::set<int> keys;
    for (const auto& [k, v] : r.spectrum) keys.insert(k);
    log.check(B.size() == 13 && keys == std::set<int>{1, 4}, "member is not a Baer subplane");
  }
  for (int h : hits) log.check(h == 1, "partition overlaps or misses a point");
  const auto U = partition_union(P, 2);
  const auto r = analyze(P, U);
  for (const auto& [k, v] : r.spectrum) log.check(k == 2 || k == 5, "union meets a line in " + std::to_string(k));
  log.check(U.size() == 26, "union size " + std::to_string(U.size()));
  log.note("union of 2: " + spectrum_str(r.spectrum));
  const auto b = lower_bound({3, 3, 2, BoundModel::TFold});
  log.check(b.value - 2 * 28 == 8, "t-fold bound c = " + std::to_string(b.value - 56));
  log.note("q=27 t=2: c >= " + std::to_string(b.value - 56) + " (" + b.basis + ")");
}

inline void c11(const SuiteOptions& o, Log& log, bool& skipped) {
  // corpus: every arc produced by the searches below
  std::int64_t corpus = 0;
  auto barlotti = [&](const Plane& P, const PointSet& S, int n) {
    ++corpus;
    const auto r = arc_analyze(P, S, n);
    log.check(r.k <= r.barlotti_bound, "Barlotti violated");
    if (r.is_maximal) log.check(P.q() % n == 0, "maximal arc with n not dividing q");
  };

  const Plane P4(field_of_order(4));
  const auto hyper = run(maximal_problem(4, 2, SearchMode::EnumerateAll, o));
  log.check(!hyper.witnesses.empty(), "no hyperoval in PG(2,4)");
  for (const auto& H : hyper.witnesses) {
    barlotti(P4, H, 2);
    log.check(H.size() == 6 && arc_analyze(P4, H, 2).is_maximal, "hyperoval report");
  }
  const auto five = run(arc_problem(4, 2, 5, 5, SearchMode::EnumerateAll, Symmetry::None, o));
  for (const auto& S : five.witnesses) {
    barlotti(P4, S, 2);
    try {
      const auto H = extend_to_hyperoval(P4, S);
      log.check(H.size() == 6 && arc_analyze(P4, H, 2).is_maximal, "5-arc extension is not a hyperoval");
    } catch (const Error& e) {
      log.fail(std::string("5-arc: ") + e.what());
    }
  }
  log.note(std::to_string(five.witnesses.size()) + " 5-arcs of PG(2,4) extended");

  for (int q : {5, 7}) {
    const Plane P(field_of_order(q));
    const auto arcs = run(arc_problem(q, 2, q + 1, q + 1, SearchMode::EnumerateAll, Symmetry::Root, o));
    log.check(arcs.exhausted, "Segre enumeration truncated");
    int conics = 0;
    for (const auto& S : arcs.witnesses) {
      barlotti(P, S, 2);
      if (is_conic(P, S)) ++conics;
      else log.fail("non-conic oval in PG(2," + std::to_string(q) + ")");
    }
    log.note("PG(2," + std::to_string(q) + "): " + std::to_string(conics) + "/" + std::to_string(arcs.witnesses.size()) +
             " ovals through the frame are conics");
  }
  // every (k,n)-arc of PG(2,3) and PG(2,4), n = 2, 3
  for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
    const Plane P(field_of_order(q));
    const auto out = run(arc_problem(q, n, 0, P.size(), SearchMode::EnumerateAll, Symmetry::None, o));
    log.check(out.exhausted, "arc enumeration truncated");
    for (const auto& S : out.witnesses) barlotti(P, S, n);
  }
  const Plane P8(field_of_order(8));
  for (int n : {2, 4}) {
    const auto m = run(maximal_problem(8, n, SearchMode::Exists, o));
    log.check(m.witnesses.size() == 1, "no maximal (k," + std::to_string(n) + ")-arc in PG(2,8)");
    for (const auto& S : m.witnesses) barlotti(P8, S, n);
  }
  log.note("Barlotti over " + std::to_string(corpus) + " arcs");

  if (!o.allow_long) {
    skipped = true;
    return;
  }
  certify(log, maximal_problem(9, 3, SearchMode::Exists, o), "PG(2,9) (21,3)-arcs");
}

inline void c12(const SuiteOptions& o, Log& log, bool& skipped) {
  const Reduction R(field_of_order(4), field_of_order(2));
  int count = 0;
  for_each_subspace(R.small(), 6, 3, [&](const Subspace& W) {
    ++count;
    const PointSet B = B_of_W(R, W);
    log.check(B.size() <= 7, "|B(W)| > 7");
    log.check(analyze(R.plane(), B).t_max >= 1, "B(W) does not block");
  });
  log.note(std::to_string(count) + " subspaces of V(6,2)");
  const int d2 = max_scattered_dim(R, 6);
  const int d3 = max_scattered_dim(Reduction(field_of_order(9), field_of_order(3)), 6);
  log.check(d2 == 3, "max scattered dim V(6,2) = " + std::to_string(d2));
  log.check(d3 == 3, "max scattered dim V(6,3) = " + std::to_string(d3));
  log.note("scattered max " + std::to_string(d2) + ", " + std::to_string(d3));

  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 6}, {3, 9}}) {
    certify(log, blocking_problem(q, 2, 0, m - 1, SearchMode::Exists, false, Symmetry::Root, o),
            "2-fold PG(2," + std::to_string(q) + ") size<" + std::to_string(m));
    const auto ex = run(blocking_problem(q, 2, m, m, SearchMode::Exists, false, Symmetry::Root, o));
    log.check(ex.witnesses.size() == 1, "no 2-fold set of size " + std::to_string(m));
  }
  if (!o.allow_long) {
    skipped = true;
    return;
  }
  certify(log, blocking_problem(5, 2, 0, 14, SearchMode::Exists, false, Symmetry::Root, o), "2-fold PG(2,5) size<15");
  const auto ex = run(blocking_problem(5, 2, 15, 15, SearchMode::Exists, false, Symmetry::Root, o));
  log.check(ex.witnesses.size() == 1, "no 2-fold set of size 15 in PG(2,5)");
}

inline void c13(const SuiteOptions& o, Log& log) {
  std::vector<SearchProblem> probs;
  for (int q : {2, 3}) {
    for (int t : {1, 2})
      for (bool nt : {false, true}) probs.push_back(blocking_problem(q, t, 0, q * q + q + 1, SearchMode::EnumerateAll, nt, Symmetry::None, o));
    for (int n : {2, 3}) probs.push_back(arc_problem(q, n, 0, q * q + q + 1, SearchMode::EnumerateAll, Symmetry::None, o));
  }
  probs.push_back(blocking_problem(4, 1, 0, 9, SearchMode::EnumerateUpToIso, true, Symmetry::Root, o));
  probs.push_back(arc_problem(4, 2, 6, 6, SearchMode::EnumerateAll, Symmetry::Root, o));
  std::size_t verified = 0;
  for (auto pr : probs) {
    const Plane P(pr.field);
    pr.workers = 1;
    const auto a = run(pr);
    pr.workers = 3;
    const auto b = run(pr);
    log.check(a.witnesses == b.witnesses, "worker count changes witnesses");
    for (const auto& W : a.witnesses) {
      ++verified;
      log.check(verify_witness(P, pr, W), "witness fails verification");
    }
  }
  for (int q : {2, 3}) {
    const Plane P(field_of_order(q));
    for (int t : {1, 2})
      for (bool nt : {false, true}) {
        const auto naive = naive_enumerate(P, t, nt, 0);
        const auto eng = run(blocking_problem(q, t, 0, P.size(), SearchMode::EnumerateAll, nt, Symmetry::None, o));
        log.check(naive.blocking == eng.witnesses, "blocking oracle mismatch q=" + std::to_string(q) + " t=" + std::to_string(t));
      }
    for (int n : {2, 3}) {
      const auto naive = naive_enumerate(P, 1, false, n);
      const auto eng = run(arc_problem(q, n, 0, P.size(), SearchMode::EnumerateAll, Symmetry::None, o));
      log.check(naive.arcs == eng.witnesses, "arc oracle mismatch q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
  // root symmetry against the unreduced search
  const Plane P4(field_of_order(4));
  for (int size : {7, 8, 9}) {
    const auto with = run(blocking_problem(4, 1, size, size, SearchMode::EnumerateUpToIso, true, Symmetry::Root, o));
    const auto without = run(blocking_problem(4, 1, size, size, SearchMode::EnumerateUpToIso, true, Symmetry::None, o));
    log.check(with.iso_classes == without.iso_classes, "root symmetry changes class count at size " + std::to_string(size));
  }
  const auto h_with = run(maximal_problem(4, 2, SearchMode::EnumerateUpToIso, o));
  auto h_pr = maximal_problem(4, 2, SearchMode::EnumerateUpToIso, o);
  h_pr.symmetry = Symmetry::None;
  log.check(h_with.iso_classes == run(h_pr).iso_classes, "root symmetry changes hyperoval classes");
  log.note(std::to_string(verified) + " witnesses re-verified");
}

}  // namespace suite_detail

inline const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{
      "direction-set formulas",
      "direction intervals",
      "direction classification",
      "Redei polynomial structure",
      "X^q + g trichotomy, exhaustive",
      "lacunary classification, random",
      "Bruen sharpness",
      "prime-plane lower bound sharpness",
      "small blocking sets mod p",
      "Baer partition and t-fold bound",
      "arcs: Barlotti, hyperovals, Segre",
      "linear sets and double blocking minima",
      "search engine soundness"};
  return names;
}

inline CriterionResult run_criterion(int id, const SuiteOptions& o) {
  using namespace suite_detail;
  CriterionResult res;
  res.id = id;
  res.name = criterion_names().at(id - 1);
  Log log;
  bool skipped = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: c1(o, log); break;
      case 2: c2(o, log); break;
      case 3: c3(o, log); break;
      case 4: c4(o, log); break;
      case 5: c5(o, log); break;
      case 6: c6(o, log); break;
      case 7: c7(o, log); break;
      case 8: c8(o, log, skipped); break;
      case 9: c9(o, log, skipped); break;
      case 10: c10(o, log); break;
      case 11: c11(o, log, skipped); break;
      case 12: c12(o, log, skipped); break;
      case 13: c13(o, log); break;
      default: throw Error(Errc::UsageError, "criterion id must be 1..13");
    }
  } catch (const Error& e) {
    log.fail(std::string(errc_name(e.code())) + ": " + e.what());
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  res.pass = log.ok();
  res.long_skipped = skipped;
  res.detail = log.str();
  return res;
}

inline std::vector<CriterionResult> run_suite(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 13; ++id)
    if (o.only.empty() || o.only.count(id)) out.push_back(run_criterion(id, o));
  return out;
}

}  // namespace fingeo
