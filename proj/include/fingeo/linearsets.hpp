#pragma once

// Field reduction GF(q^s)^3 -> GF(q)^(3s), the Desarguesian spread and
// linear sets B(W).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "fingeo/blocking.hpp"
#include "fingeo/error.hpp"
#include "fingeo/linalg.hpp"
#include "fingeo/plane.hpp"

namespace fingeo {

/// A GF(q)-subspace stored by its reduced echelon basis, so equal subspaces
/// have equal representations.
class Subspace {
 public:
  Subspace(const Field& F, int ambient, std::vector<Row> rows) : ambient_(ambient), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) != ambient) throw Error(Errc::WrongSize, "row length differs from ambient dimension");
    rref(F, rows_);
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& basis() const { return rows_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.rows_ < b.rows_;
  }

  /// Calls fn on every nonzero vector.
  template <class Fn>
  void for_each_nonzero(const Field& F, Fn&& fn) const {
    const int d = dim();
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    Row v(ambient_);
    for (std::uint64_t code = 1; code < total; ++code) {
      std::fill(v.begin(), v.end(), F.zero());
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i, c /= q) {
        const Elem lam{static_cast<std::uint32_t>(c % q)};
        if (lam.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j) v[j] = F.add(v[j], F.mul(lam, rows_[i][j]));
      }
      fn(v);
    }
  }

 private:
  int ambient_;
  std::vector<Row> rows_;
};

inline Subspace span_with(const Field& F, const Subspace& W, const Row& v) {
  auto rows = W.basis();
  rows.push_back(v);
  return Subspace(F, W.ambient(), std::move(rows));
}

/// dim(A ∩ B) = dim A + dim B - dim(A + B).
inline int intersection_dim(const Field& F, const Subspace& A, const Subspace& B) {
  auto rows = A.basis();
  rows.insert(rows.end(), B.basis().begin(), B.basis().end());
  return A.dim() + B.dim() - rank(F, std::move(rows));
}

/// Calls fn on every k-dimensional subspace of GF(q)^n, in echelon order.
template <class Fn>
void for_each_subspace(const Field& F, int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> piv(k);
  const auto q = F.q();
  // pivot patterns in lexicographic order
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == k) {
      std::vector<std::pair<int, int>> free;  // (row, col) cells that are not forced
      std::vector<char> is_piv(n, 0);
      for (int c : piv) is_piv[c] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free.emplace_back(r, c);
      std::vector<std::uint32_t> val(free.size(), 0);
      while (true) {
        std::vector<Row> rows(k, Row(n, F.zero()));
        for (int r = 0; r < k; ++r) rows[r][piv[r]] = F.one();
        for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = Elem{val[i]};
        fn(Subspace(F, n, std::move(rows)));
        std::size_t i = 0;
        while (i < val.size() && ++val[i] == q) val[i++] = 0;
        if (i == val.size()) break;
      }
      return;
    }
    for (int c = from; c <= n - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
}

/// Identifies GF(q^s)^3 with GF(q)^(3s) through a GF(q)-basis of GF(q^s).
class Reduction {
 public:
  Reduction(Field big, Field small) : big_(std::move(big)), small_(std::move(small)), plane_(big_) {
    if (big_.p() != small_.p() || big_.n() % small_.n() != 0)
      throw Error(Errc::NotAnExtension, "GF(" + std::to_string(big_.q()) + ") is not an extension of GF(" +
                                            std::to_string(small_.q()) + ")");
    s_ = big_.n() / small_.n();
    build_embedding();
    build_basis();
  }

  const Field& big() const { return big_; }
  const Field& small() const { return small_; }
  const Plane& plane() const { return plane_; }
  int s() const { return s_; }
  int dim() const { return 3 * s_; }
  Elem embed(Elem a) const { return embed_[a.rep]; }

  Row to_vector(const Triple& t) const {
    Row v;
    v.reserve(dim());
    for (int i = 0; i < 3; ++i) {
      const auto& c = coords_[t[i].rep];
      v.insert(v.end(), c.begin(), c.end());
    }
    return v;
  }

  Triple to_triple(const Row& v) const {
    Triple t{big_.zero(), big_.zero(), big_.zero()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < s_; ++j) t[i] = big_.add(t[i], big_.mul(embed(v[i * s_ + j]), basis_[j]));
    return t;
  }

  /// The point of PG(2, q^s) whose spread element contains v != 0.
  int point_of(const Row& v) const { return plane_.index_of(to_triple(v)); }

  /// The s-dimensional spread element of a point.
  Subspace spread_element(int pnt) const {
    const Triple& t = plane_.point(pnt);
    std::vector<Row> rows;
    for (Elem w : basis_) rows.push_back(to_vector({big_.mul(w, t[0]), big_.mul(w, t[1]), big_.mul(w, t[2])}));
    return Subspace(small_, dim(), std::move(rows));
  }

  int spread_size() const { return plane_.size(); }

 private:
  void build_embedding() {
    // a root of the small field's defining polynomial inside the big field
    const auto& irr = small_.irr();
    Elem root{0};
    bool found = false;
    for (Elem x : big_.elements()) {
      Elem acc = big_.zero();
      for (int i = static_cast<int>(irr.size()) - 1; i >= 0; --i)
        acc = big_.add(big_.mul(acc, x), big_.from_int(irr[i]));
      if (acc.is_zero()) {
        root = x;
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::NotAnExtension, "no embedding of the subfield");
    embed_.resize(small_.q());
    for (Elem a : small_.elements()) {
      const auto d = small_.digits(a);
      Elem acc = big_.zero();
      for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) acc = big_.add(big_.mul(acc, root), big_.from_int(d[i]));
      embed_[a.rep] = acc;
    }
  }

  void build_basis() {
    // greedy: smallest reps outside the current span
    const auto Q = big_.q();
    std::vector<char> in_span(Q, 0);
    std::vector<std::pair<Elem, Row>> span{{big_.zero(), Row{}}};
    in_span[0] = 1;
    for (std::uint32_t r = 1; r < Q && static_cast<int>(basis_.size()) < s_; ++r) {
      if (in_span[r]) continue;
      const Elem b{r};
      std::vector<std::pair<Elem, Row>> next;
      for (Elem lam : small_.elements())
        for (const auto& [x, cx] : span) {
          Row c = cx;
          c.push_back(lam);
          next.emplace_back(big_.add(x, big_.mul(embed(lam), b)), std::move(c));
        }
      span = std::move(next);
      for (const auto& [x, cx] : span) in_span[x.rep] = 1;
      basis_.push_back(b);
    }
    coords_.assign(Q, Row{});
    for (auto& [x, cx] : span) coords_[x.rep] = cx;
  }

  Field big_;
  Field small_;
  Plane plane_;
  int s_ = 1;
  std::vector<Elem> embed_;
  std::vector<Elem> basis_;
  std::vector<Row> coords_;  // big rep -> GF(q)-coordinates
};

inline Reduction field_reduce(const Field& big, const Field& small) { return Reduction(big, small); }

/// Points whose spread element meets W nontrivially.
inline PointSet B_of_W(const Reduction& R, const Subspace& W) {
  if (W.ambient() != R.dim()) throw Error(Errc::WrongDimension, "W lives in the wrong ambient space");
  std::vector<char> hit(R.plane().size(), 0);
  W.for_each_nonzero(R.small(), [&](const Row& v) { hit[R.point_of(v)] = 1; });
  std::vector<int> pts;
  for (int i = 0; i < R.plane().size(); ++i)
    if (hit[i]) pts.push_back(i);
  return PointSet(std::move(pts));
}

/// Number of nonzero vectors of W in each spread element.
inline std::vector<int> spread_hits(const Reduction& R, const Subspace& W) {
  std::vector<int> cnt(R.plane().size(), 0);
  W.for_each_nonzero(R.small(), [&](const Row& v) { ++cnt[R.point_of(v)]; });
  return cnt;
}

/// Every spread element meets W in dimension <= 1, i.e. in at most q-1 nonzero vectors.
inline bool is_scattered(const Reduction& R, const Subspace& W) {
  const auto lim = static_cast<int>(R.small().q()) - 1;
  for (int c : spread_hits(R, W))
    if (c > lim) return false;
  return true;
}

inline constexpr std::uint64_t kExhaustiveVectors = 1u << 20;

/// Largest d <= limit with a scattered d-subspace. Subspaces through the
/// first unit vector suffice: GL(3, q^s) preserves the spread and is
/// transitive on nonzero vectors.
inline int max_scattered_dim(const Reduction& R, int limit) {
  const Field& F = R.small();
  const int n = R.dim();
  const std::uint64_t total = nt::ipow(F.q(), n);
  if (total > kExhaustiveVectors) throw Error(Errc::TooLarge, "ambient space exceeds the exhaustive gate");
  const int lim_vec = static_cast<int>(F.q()) - 1;
  Row e1(n, F.zero());
  e1[0] = F.one();
  std::set<Subspace> level{Subspace(F, n, {e1})};
  int best = 1;
  // all vectors of the ambient space, decoded once
  std::vector<Row> all;
  all.reserve(total - 1);
  for (std::uint64_t code = 1; code < total; ++code) {
    Row v(n);
    std::uint64_t c = code;
    for (int j = 0; j < n; ++j, c /= F.q()) v[j] = Elem{static_cast<std::uint32_t>(c % F.q())};
    all.push_back(std::move(v));
  }
  while (best < limit && !level.empty()) {
    std::set<Subspace> next;
    for (const auto& W : level) {
      const auto hits = spread_hits(R, W);
      for (const Row& v : all) {
        // v must land in a spread element W avoids, else the meet grows to dimension 2
        if (hits[R.point_of(v)] != 0) continue;
        Subspace U = span_with(F, W, v);
        if (next.count(U)) continue;
        bool ok = true;
        for (int c : spread_hits(R, U))
          if (c > lim_vec) {
            ok = false;
            break;
          }
        if (ok) next.insert(std::move(U));
      }
    }
    if (next.empty()) break;
    ++best;
    level = std::move(next);
  }
  return std::min(best, limit);
}

/// Random greedy extension towards a scattered subspace of dimension `target`.
/// Not authoritative: failure does not prove nonexistence.
inline std::optional<Subspace> random_scattered(const Reduction& R, int target, std::uint64_t seed, int restarts) {
  const Field& F = R.small();
  const int n = R.dim();
  const int lim_vec = static_cast<int>(F.q()) - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, F.q() - 1);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    Subspace W(F, n, {});
    int stale = 0;
    while (W.dim() < target && stale < 4096) {
      Row v(n);
      for (auto& x : v) x = Elem{coord(rng)};
      Subspace U = span_with(F, W, v);
      if (U.dim() == W.dim()) {
        ++stale;
        continue;
      }
      bool ok = true;
      for (int c : spread_hits(R, U))
        if (c > lim_vec) {
          ok = false;
          break;
        }
      if (ok) {
        W = std::move(U);
        stale = 0;
      } else {
        ++stale;
      }
    }
    if (W.dim() == target) return W;
  }
  return std::nullopt;
}

struct TwoIntersection {
  PointSet B;
  BlockingReport report;
  bool fold_ok = false;  // t_max >= q + 1
};

/// B(W) for a scattered (s+2)-space W; every line then carries at least q+1 points.
inline TwoIntersection two_intersection_from_W(const Reduction& R, const Subspace& W) {
  if (W.dim() != R.s() + 2) throw Error(Errc::WrongDimension, "W must have dimension s+2");
  if (!is_scattered(R, W)) throw Error(Errc::NotScattered, "W is not scattered");
  TwoIntersection out{B_of_W(R, W), {}, false};
  out.report = analyze(R.plane(), out.B);
  out.fold_ok = out.report.t_max >= static_cast<int>(R.small().q()) + 1;
  return out;
}

}  // namespace fingeo
