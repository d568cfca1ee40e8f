#pragma once

// (t-fold) blocking sets: analysis, lower bounds and constructions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fingeo/directions.hpp"
#include "fingeo/error.hpp"
#include "fingeo/plane.hpp"
#include "fingeo/poly.hpp"

namespace fingeo {

struct BlockingReport {
  int size = 0;
  int t_max = 0;                 // min over lines of |l ∩ B|
  std::map<int, int> spectrum;   // intersection size -> number of lines
  int t = 0;                     // the t used for minimality
  bool minimal = false;          // every point on a line meeting B in exactly t points
  bool contains_line = false;
  bool redei_type = false;       // some line l with |B| = q + |l ∩ B|
  bool szonyi_ok = false;        // every intersection size is 1 mod p
  bool small = false;            // |B| < 3(q+1)/2
  int d = 0;                     // |B| - q - 1
};

/// Minimality is judged for `t` (default: t_max).
inline BlockingReport analyze(const Plane& P, const PointSet& B, std::optional<int> t = std::nullopt) {
  const int q = P.q();
  const auto counts = P.line_counts(B);
  BlockingReport r;
  r.size = B.size();
  r.t_max = q + 1;
  for (int c : counts) {
    ++r.spectrum[c];
    r.t_max = std::min(r.t_max, c);
    if (c == q + 1) r.contains_line = true;
    if (B.size() == q + c) r.redei_type = true;
  }
  r.t = t.value_or(r.t_max);
  r.minimal = r.t >= 1 && r.t_max >= r.t;
  if (r.minimal) {
    for (int pnt : B) {
      bool has = false;
      for (int l : P.lines_through(pnt))
        if (counts[l] == r.t) {
          has = true;
          break;
        }
      if (!has) {
        r.minimal = false;
        break;
      }
    }
  }
  r.szonyi_ok = true;
  for (const auto& [k, cnt] : r.spectrum)
    if (k % P.field().p() != 1 % P.field().p()) r.szonyi_ok = false;
  r.small = 2 * B.size() < 3 * (q + 1);
  r.d = B.size() - q - 1;
  return r;
}

enum class BoundModel { Bruen, PrimeOrder, TFold, DoublePrime };

struct BoundQuery {
  int p = 0;
  int n = 1;
  int t = 1;
  BoundModel model = BoundModel::Bruen;
};

struct BoundResult {
  std::int64_t value = 0;
  std::string basis;  // which hypothesis produced the value
};

namespace detail {

// Smallest c >= 0 with c >= c_p q^(2/3), c_2 = c_3 = 2^(-1/3), c_p = 1 otherwise.
inline std::int64_t min_c_two_thirds(std::int64_t q, std::int64_t p) {
  std::int64_t c = 0;
  const i128 qq = static_cast<i128>(q) * q;
  if (p <= 3) {
    while (2 * static_cast<i128>(c) * c * c < qq) ++c;
  } else {
    while (static_cast<i128>(c) * c * c < qq) ++c;
  }
  return c;
}

}  // namespace detail

inline BoundResult lower_bound(const BoundQuery& qry) {
  if (!nt::is_prime(qry.p) || qry.n < 1) throw Error(Errc::HypothesisViolated, "p must be prime, n >= 1");
  const std::int64_t p = qry.p, q = nt::ipow(p, qry.n), t = qry.t;
  using detail::i128;
  switch (qry.model) {
    case BoundModel::Bruen: {
      std::int64_t b = q + 1;
      while ((b - q - 1) * (b - q - 1) < q) ++b;
      return {b, "q + sqrt(q) + 1"};
    }
    case BoundModel::PrimeOrder:
      if (qry.n != 1) throw Error(Errc::HypothesisViolated, "needs a prime order plane (n = 1)");
      return {(3 * (p + 1) + 1) / 2, "3(p+1)/2"};
    case BoundModel::DoublePrime:
      if (qry.n != 1) throw Error(Errc::HypothesisViolated, "needs a prime order plane (n = 1)");
      if (qry.t != 2) throw Error(Errc::HypothesisViolated, "double blocking sets only (t = 2)");
      if (p < 5) throw Error(Errc::HypothesisViolated, "p >= 5 required (triangles of size 3p are smaller for p = 2, 3)");
      return {(5 * (p + 1) + 1) / 2, "5(p+1)/2"};
    case BoundModel::TFold: {
      if (t < 1) throw Error(Errc::HypothesisViolated, "t >= 1");
      std::optional<BoundResult> best;
      auto offer = [&](std::int64_t c, const char* basis) {
        const std::int64_t v = t * (q + 1) + c;
        if (!best || v > best->value) best = BoundResult{v, basis};
      };
      // odd exponent: q = p^(2d+1), t < q/2 - c_p q^(2/3)/2
      if (qry.n % 2 == 1 && q - 2 * t > 0) {
        const i128 m = q - 2 * t;
        const i128 lhs = static_cast<i128>(q) * q;
        const bool hyp = p <= 3 ? lhs < 2 * m * m * m : lhs < m * m * m;
        if (hyp) offer(detail::min_c_two_thirds(q, p), "odd exponent, c >= c_p q^(2/3)");
      }
      const bool small_t = 16 * static_cast<i128>(t) * t * t * t < q;
      // square q > 4, t < q^(1/4)/2; c < c_p q^(2/3) forces c >= t sqrt(q)
      if (qry.n % 2 == 0 && q > 4 && small_t) {
        const std::int64_t rq = nt::isqrt(q);
        offer(std::min(t * rq, detail::min_c_two_thirds(q, p)), "square q, c >= min(t sqrt(q), c_p q^(2/3))");
      }
      // q = p^2, t < q^(1/4)/2; c < p ceil(1/4 + sqrt((p+1)/2)) forces c >= t sqrt(q)
      if (qry.n == 2 && small_t) offer(std::min(t * p, p * detail::ceil_quarter_plus_root(p)), "q = p^2, c >= min(t p, p ceil(1/4 + sqrt((p+1)/2)))");
      if (!best) throw Error(Errc::HypothesisViolated, "no case of the t-fold bound applies to (q, t)");
      return *best;
    }
  }
  throw Error(Errc::UsageError, "unknown bound model");
}

/// Points all of whose normalized coordinates lie in GF(sqrt q).
inline PointSet baer_subplane(const Plane& P) {
  const Field& F = P.field();
  if (F.n() % 2 != 0) throw Error(Errc::NotSquare, "q is not a square");
  std::vector<int> pts;
  for (int i = 0; i < P.size(); ++i) {
    const auto& t = P.point(i);
    if (F.in_subfield(F.n() / 2, t[0]) && F.in_subfield(F.n() / 2, t[1]) && F.in_subfield(F.n() / 2, t[2]))
      pts.push_back(i);
  }
  return PointSet(std::move(pts));
}

/// The q - sqrt(q) + 1 orbits of the order-(q + sqrt(q) + 1) subgroup of the
/// Singer group, sorted by least point.
inline std::vector<PointSet> baer_partition(const Plane& P) {
  const Field& F = P.field();
  if (F.n() % 2 != 0) throw Error(Errc::NotSquare, "q is not a square");
  const int q = P.q(), rq = static_cast<int>(nt::isqrt(q));
  const int members = q - rq + 1;
  Collineation sub = singer_cycle(P);
  sub.m = mat::pow(F, sub.m, static_cast<std::uint64_t>(members));
  const auto perm = P.permutation(sub);
  std::vector<char> seen(P.size(), 0);
  std::vector<PointSet> out;
  for (int i = 0; i < P.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      orbit.push_back(j);
    }
    out.emplace_back(std::move(orbit));
  }
  return out;
}

inline PointSet baer_partition_member(const Plane& P, int i) {
  const auto parts = baer_partition(P);
  if (i < 0 || i >= static_cast<int>(parts.size())) throw Error(Errc::BadIndex, "partition member out of range");
  return parts[i];
}

/// Union of the first t partition members.
inline PointSet partition_union(const Plane& P, int t) {
  const auto parts = baer_partition(P);
  if (t < 1 || t > static_cast<int>(parts.size())) throw Error(Errc::BadIndex, "t out of range");
  std::vector<int> pts;
  for (int i = 0; i < t; ++i) pts.insert(pts.end(), parts[i].begin(), parts[i].end());
  return PointSet(std::move(pts));
}

/// Graph {(w, f(w))} plus the points (1:m:0), m in D_f.
inline PointSet redei_graph(const Plane& P, const FieldFn& f) {
  const Field& F = P.field();
  if (!(F == f.field)) throw Error(Errc::SpecMismatch, "function and plane over different fields");
  std::vector<int> pts;
  for (Elem w : F.elements()) pts.push_back(P.index_of({w, f(w), F.one()}));
  for (Elem m : directions_of(f).dirs) pts.push_back(P.index_of({F.one(), m, F.zero()}));
  return PointSet(std::move(pts));
}

/// x = 0, y = 0, z = 0.
inline PointSet three_lines(const Plane& P) {
  const Field& F = P.field();
  std::vector<int> pts;
  for (const Triple& l : {Triple{F.one(), F.zero(), F.zero()}, Triple{F.zero(), F.one(), F.zero()},
                          Triple{F.zero(), F.zero(), F.one()}}) {
    const auto& on = P.points_on(P.index_of(l));
    pts.insert(pts.end(), on.begin(), on.end());
  }
  return PointSet(std::move(pts));
}

/// B(W) from a GF(small_q)-subspace of dimension s+1 must block and have at
/// most (small_q^(s+1) - 1)/(small_q - 1) points.
inline bool linear_blocking_check(const Plane& P, const PointSet& B, int small_q, int s) {
  const std::int64_t bound = (nt::ipow(small_q, s + 1) - 1) / (small_q - 1);
  if (B.size() > bound) throw Error(Errc::SizeBoundViolated, "|B(W)| exceeds (q^(s+1)-1)/(q-1)");
  return analyze(P, B).t_max >= 1;
}

}  // namespace fingeo
