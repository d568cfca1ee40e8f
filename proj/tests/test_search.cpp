#include <gtest/gtest.h>

#include "fingeo/search.hpp"
#include "oracle.hpp"

using namespace fingeo;

namespace {

SearchProblem blocking(int q, int t, int max_size, SearchMode mode, bool nontrivial = false) {
  SearchProblem pr{field_of_order(q)};
  pr.kind = SearchKind::TFoldBlocking;
  pr.param = t;
  pr.size_bound = max_size;
  pr.mode = mode;
  pr.nontrivial = nontrivial;
  return pr;
}

SearchProblem arcs(int q, int n, int lo, int hi, SearchMode mode) {
  SearchProblem pr{field_of_order(q)};
  pr.kind = SearchKind::KnArc;
  pr.param = n;
  pr.min_size = lo;
  pr.size_bound = hi;
  pr.mode = mode;
  return pr;
}

std::vector<PointSet> from_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<PointSet> out;
  for (auto m : masks) {
    std::vector<int> pts;
    for (int x = 0; x < 64; ++x)
      if (m >> x & 1) pts.push_back(x);
    out.emplace_back(pts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// Witnesses are exactly the minimal t-fold blocking sets of bounded size.
TEST(Search, EnumerationMatchesSubsetOracle) {
  for (int q : {2, 3}) {
    const Plane P(field_of_order(q));
    for (int t : {1, 2})
      for (bool nontrivial : {false, true})
        for (int hi : {q + 2, 2 * q + 2, 3 * q + 1}) {
          const auto res = run(blocking(q, t, hi, SearchMode::EnumerateAll, nontrivial));
          EXPECT_TRUE(res.exhausted);
          EXPECT_EQ(res.witnesses, from_masks(oracle::minimal_blocking(P, t, hi, nontrivial)))
              << "q=" << q << " t=" << t << " hi=" << hi << " nontrivial=" << nontrivial;
        }
  }
}

TEST(Search, ArcEnumerationMatchesSubsetOracle) {
  const Plane P(field_of_order(3));
  for (int k = 3; k <= 4; ++k) {
    const auto res = run(arcs(3, 2, k, k, SearchMode::EnumerateAll));
    EXPECT_EQ(static_cast<std::int64_t>(res.witnesses.size()), oracle::count_arcs(P, k));
  }
}

TEST(Search, SmallestNontrivialBlockingSets) {
  // PG(2,3): 6 points; PG(2,4): the Baer subplane with 7; PG(2,5): 9
  const std::pair<int, int> cases[] = {{3, 6}, {4, 7}, {5, 9}};
  for (auto [q, least] : cases) {
    auto below = blocking(q, 1, least - 1, SearchMode::Exists, true);
    below.symmetry = Symmetry::Root;
    EXPECT_NO_THROW(certify_nonexistence(below)) << q;
    auto at = blocking(q, 1, least, SearchMode::Exists, true);
    at.symmetry = Symmetry::Root;
    const auto res = run(at);
    ASSERT_EQ(res.witnesses.size(), 1u) << q;
    EXPECT_TRUE(verify_witness(Plane(field_of_order(q)), at, res.witnesses[0]));
    EXPECT_THROW(certify_nonexistence(at), Error);
  }
}

TEST(Search, RootSymmetryKeepsEveryClass) {
  const Plane P(field_of_order(4));
  for (auto pr : {blocking(4, 1, 8, SearchMode::EnumerateUpToIso, true), blocking(4, 2, 12, SearchMode::EnumerateUpToIso),
                  arcs(4, 2, 4, 6, SearchMode::EnumerateUpToIso)}) {
    const auto plain = run(pr);
    pr.symmetry = Symmetry::Root;
    const auto reduced = run(pr);
    EXPECT_EQ(plain.iso_classes, reduced.iso_classes) << kind_name(pr.kind);
    EXPECT_LE(reduced.nodes, plain.nodes);
    ASSERT_EQ(plain.witnesses.size(), reduced.witnesses.size());
    for (std::size_t i = 0; i < plain.witnesses.size(); ++i) {
      bool matched = false;
      for (const auto& w : reduced.witnesses) matched = matched || are_isomorphic(P, plain.witnesses[i], w).has_value();
      EXPECT_TRUE(matched);
    }
  }
}

TEST(Search, MaximalArcs) {
  // 168 hyperovals in PG(2,4); no maximal (13,3)-arc in PG(2,5)
  SearchProblem pr{field_of_order(4)};
  pr.kind = SearchKind::MaximalArc;
  pr.param = 2;
  pr.size_bound = pr.min_size = 6;
  pr.mode = SearchMode::EnumerateAll;
  const auto all = run(pr);
  EXPECT_EQ(all.witnesses.size(), 168u);
  pr.mode = SearchMode::EnumerateUpToIso;
  EXPECT_EQ(run(pr).iso_classes, std::optional<int>(1));
  SearchProblem odd{field_of_order(5)};
  odd.kind = SearchKind::MaximalArc;
  odd.param = 3;
  odd.size_bound = odd.min_size = 2 * 6 + 1;
  odd.symmetry = Symmetry::Root;
  EXPECT_NO_THROW(certify_nonexistence(odd));
}

TEST(Search, ResultIndependentOfWorkerCount) {
  for (auto pr : {blocking(4, 1, 9, SearchMode::EnumerateAll, true), blocking(4, 1, 7, SearchMode::Exists, true),
                  blocking(3, 2, 9, SearchMode::EnumerateUpToIso), arcs(5, 2, 6, 6, SearchMode::Exists)}) {
    pr.workers = 1;
    const auto one = run(pr);
    for (int w : {2, 4}) {
      pr.workers = w;
      const auto many = run(pr);
      EXPECT_EQ(one.witnesses, many.witnesses) << mode_name(pr.mode) << " workers=" << w;
      EXPECT_EQ(one.exhausted, many.exhausted);
      EXPECT_EQ(one.iso_classes, many.iso_classes);
      if (pr.mode != SearchMode::Exists) {
        EXPECT_EQ(one.nodes, many.nodes);
      }
    }
  }
}

TEST(Search, CertificateIsReproducible) {
  auto pr = blocking(4, 1, 6, SearchMode::Exists, true);
  pr.symmetry = Symmetry::Root;
  const auto a = certify_nonexistence(pr);
  pr.workers = 3;
  const auto b = certify_nonexistence(pr);
  EXPECT_EQ(a.problem_hash, b.problem_hash);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.engine, kEngineVersion);
  ASSERT_EQ(a.root_cases.size(), b.root_cases.size());
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.root_cases.size(); ++i) {
    EXPECT_EQ(a.root_cases[i].prefix, b.root_cases[i].prefix);
    EXPECT_EQ(a.root_cases[i].nodes, b.root_cases[i].nodes);
    sum += a.root_cases[i].nodes;
  }
  EXPECT_LE(sum, a.nodes);
  // a different problem hashes differently
  auto other = pr;
  other.size_bound = 5;
  EXPECT_NE(certify_nonexistence(other).problem_hash, a.problem_hash);
}

TEST(Search, BudgetTruncationIsReported) {
  auto pr = blocking(5, 1, 8, SearchMode::Exists, true);
  pr.node_budget = 50;
  const auto res = run(pr);
  EXPECT_TRUE(res.budget_exceeded);
  EXPECT_FALSE(res.exhausted);
  EXPECT_TRUE(res.witnesses.empty());
  try {
    certify_nonexistence(pr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotExhausted);
  }
}

TEST(Search, VerifierRejectsBadWitnesses) {
  const Plane P(field_of_order(3));
  const auto pr = blocking(3, 1, 13, SearchMode::Exists, true);
  // a line is excluded in nontrivial mode, a line plus a point is not minimal
  EXPECT_FALSE(verify_witness(P, pr, P.points_of_line(0)));
  auto plain = pr;
  plain.nontrivial = false;
  EXPECT_TRUE(verify_witness(P, plain, P.points_of_line(0)));
  std::vector<int> more(P.points_on(0));
  more.push_back(0);
  EXPECT_FALSE(verify_witness(P, plain, PointSet(more)));
}

TEST(Search, InvalidProblems) {
  EXPECT_THROW(run(blocking(3, 0, 5, SearchMode::Exists)), Error);
  EXPECT_THROW(run(blocking(3, 1, 200, SearchMode::Exists)), Error);
  EXPECT_THROW(run(arcs(3, 1, 0, 4, SearchMode::Exists)), Error);
  SearchProblem pr{field_of_order(4)};
  pr.kind = SearchKind::MaximalArc;
  pr.param = 2;
  pr.size_bound = 5;
  EXPECT_THROW(run(pr), Error);
}

TEST(Search, IsomorphReduction) {
  const Plane P(field_of_order(4));
  // the 168 hyperovals are one class
  SearchProblem pr{field_of_order(4)};
  pr.kind = SearchKind::MaximalArc;
  pr.param = 2;
  pr.size_bound = pr.min_size = 6;
  pr.mode = SearchMode::EnumerateAll;
  const auto all = run(pr).witnesses;
  EXPECT_EQ(isomorph_reduce(P, all).size(), 1u);
  for (const auto& w : all) EXPECT_EQ(set_fingerprint(P, w), set_fingerprint(P, all[0]));
}
