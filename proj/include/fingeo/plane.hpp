#pragma once

// PG(2,q) as an explicit incidence structure.
//
// Points and lines are homogeneous triples normalized so that the last nonzero
// coordinate (scanning z, y, x) is 1. Enumeration order, shared by points and
// lines: (x:y:1) at index x + q*y, then (x:1:0) at q^2 + x, then (1:0:0) at
// q^2 + q. The line z = 0, i.e. line coordinates (0:0:1), is the line at infinity.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fingeo/bitset.hpp"
#include "fingeo/error.hpp"
#include "fingeo/gf.hpp"

namespace fingeo {

using Triple = std::array<Elem, 3>;
using Mat3 = std::array<Elem, 9>;  // row major

/// Sorted, duplicate-free point indices.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<int> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  }

  const std::vector<int>& members() const { return idx_; }
  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  friend auto operator<=>(const PointSet&, const PointSet&) = default;

 private:
  std::vector<int> idx_;
};

namespace mat {

inline Mat3 identity(const Field& F) {
  Mat3 m{};
  m.fill(F.zero());
  m[0] = m[4] = m[8] = F.one();
  return m;
}

inline Mat3 mul(const Field& F, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem acc = F.zero();
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = acc;
    }
  return r;
}

inline Triple apply(const Field& F, const Mat3& m, const Triple& v) {
  Triple r{};
  for (int i = 0; i < 3; ++i) {
    Elem acc = F.zero();
    for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(m[3 * i + k], v[k]));
    r[i] = acc;
  }
  return r;
}

inline Elem det(const Field& F, const Mat3& m) {
  auto t = [&](int a, int b, int c) { return F.mul(m[a], F.mul(m[b], m[c])); };
  Elem pos = F.add(F.add(t(0, 4, 8), t(1, 5, 6)), t(2, 3, 7));
  Elem neg = F.add(F.add(t(2, 4, 6), t(0, 5, 7)), t(1, 3, 8));
  return F.sub(pos, neg);
}

/// Inverse via the adjugate; throws DivisionByZero when singular.
inline Mat3 inverse(const Field& F, const Mat3& m) {
  const Elem di = F.inv(det(F, m));
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(m[3 * r0 + c0], m[3 * r1 + c1]), F.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  Mat3 adj{};
  // adj[j][i] = cofactor(i, j)
  const int rows[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem c = minor(rows[i][0], rows[i][1], rows[j][0], rows[j][1]);
      if ((i + j) % 2) c = F.neg(c);
      adj[3 * j + i] = F.mul(c, di);
    }
  return adj;
}

inline Mat3 from_columns(const Triple& a, const Triple& b, const Triple& c) {
  return {a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]};
}

inline bool is_scalar(const Mat3& m) {
  for (int i = 0; i < 9; ++i)
    if (i % 4 != 0 && !m[i].is_zero()) return false;
  return !m[0].is_zero() && m[0] == m[4] && m[4] == m[8];
}

inline Mat3 pow(const Field& F, Mat3 base, std::uint64_t e) {
  Mat3 r = identity(F);
  while (e > 0) {
    if (e & 1) r = mul(F, r, base);
    base = mul(F, base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace mat

/// Semilinear map P -> M * P^(p^frob).
struct Collineation {
  Mat3 m{};
  int frob = 0;
};

class Plane {
 public:
  explicit Plane(Field f) : F_(std::move(f)), q_(static_cast<int>(F_.q())), size_(q_ * q_ + q_ + 1) {
    coords_.resize(size_);
    for (int i = 0; i < size_; ++i) coords_[i] = triple_at(i);
    line_pts_.resize(size_);
    pt_lines_.resize(size_);
    line_mask_.assign(size_, Bitset(size_));
    for (int l = 0; l < size_; ++l) {
      for (int pnt = 0; pnt < size_; ++pnt) {
        if (dot(coords_[pnt], coords_[l]).is_zero()) {
          line_pts_[l].push_back(pnt);
          pt_lines_[pnt].push_back(l);
          line_mask_[l].set(pnt);
        }
      }
    }
  }

  const Field& field() const { return F_; }
  int q() const { return q_; }
  /// Number of points, equal to the number of lines.
  int size() const { return size_; }

  const Triple& point(int i) const { return coords_[i]; }
  const Triple& line(int i) const { return coords_[i]; }
  const std::vector<int>& points_on(int line) const { return line_pts_[line]; }
  const std::vector<int>& lines_through(int pnt) const { return pt_lines_[pnt]; }
  const Bitset& line_mask(int line) const { return line_mask_[line]; }
  bool incident(int pnt, int line) const { return line_mask_[line].test(pnt); }

  Elem dot(const Triple& a, const Triple& b) const {
    return F_.add(F_.add(F_.mul(a[0], b[0]), F_.mul(a[1], b[1])), F_.mul(a[2], b[2]));
  }

  std::optional<Triple> normalize(Triple v) const {
    for (int c = 2; c >= 0; --c) {
      if (!v[c].is_zero()) {
        const Elem s = F_.inv(v[c]);
        for (auto& x : v) x = F_.mul(x, s);
        return v;
      }
    }
    return std::nullopt;
  }

  /// Index of a nonzero triple (any scaling).
  int index_of(const Triple& raw) const {
    const auto v = normalize(raw);
    if (!v) throw Error(Errc::OutOfRange, "zero vector is not a point");
    const auto& t = *v;
    if (!t[2].is_zero()) return static_cast<int>(t[0].rep + static_cast<std::uint32_t>(q_) * t[1].rep);
    if (!t[1].is_zero()) return q_ * q_ + static_cast<int>(t[0].rep);
    return q_ * q_ + q_;
  }

  Triple cross(const Triple& a, const Triple& b) const {
    return {F_.sub(F_.mul(a[1], b[2]), F_.mul(a[2], b[1])), F_.sub(F_.mul(a[2], b[0]), F_.mul(a[0], b[2])),
            F_.sub(F_.mul(a[0], b[1]), F_.mul(a[1], b[0]))};
  }

  /// Line through two distinct points (indices).
  int line_through(int a, int b) const {
    if (a == b) throw Error(Errc::EqualArguments, "line through a single point");
    return index_of(cross(coords_[a], coords_[b]));
  }
  /// Common point of two distinct lines (indices).
  int intersection(int l, int m) const {
    if (l == m) throw Error(Errc::EqualArguments, "intersection of a line with itself");
    return index_of(cross(coords_[l], coords_[m]));
  }

  bool collinear(int a, int b, int c) const {
    return dot(cross(coords_[a], coords_[b]), coords_[c]).is_zero();
  }

  Bitset mask_of(const PointSet& s) const {
    Bitset b(size_);
    for (int i : s) b.set(i);
    return b;
  }

  /// |l ∩ S| for every line l.
  std::vector<int> line_counts(const PointSet& s) const {
    std::vector<int> c(size_, 0);
    for (int pnt : s)
      for (int l : pt_lines_[pnt]) ++c[l];
    return c;
  }

  PointSet points_of_line(int line) const { return PointSet(line_pts_[line]); }

  Triple frob(const Triple& v, int e) const { return {F_.frob_pow(v[0], e), F_.frob_pow(v[1], e), F_.frob_pow(v[2], e)}; }

  int apply(const Collineation& c, int pnt) const { return index_of(mat::apply(F_, c.m, frob(coords_[pnt], c.frob))); }

  PointSet apply(const Collineation& c, const PointSet& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int pnt : s) out.push_back(apply(c, pnt));
    return PointSet(std::move(out));
  }

  /// Images of all points under c, indexed by point.
  std::vector<int> permutation(const Collineation& c) const {
    std::vector<int> perm(size_);
    for (int i = 0; i < size_; ++i) perm[i] = apply(c, i);
    return perm;
  }

  /// a then b: P -> b(a(P)).
  Collineation compose(const Collineation& a, const Collineation& b) const {
    // b.m * (a.m * P^sa)^sb = b.m * a.m^sb * P^(sa+sb)
    Mat3 am = a.m;
    for (auto& x : am) x = F_.frob_pow(x, b.frob);
    return {mat::mul(F_, b.m, am), (a.frob + b.frob) % F_.n()};
  }

  Collineation identity() const { return {mat::identity(F_), 0}; }

 private:
  Triple triple_at(int i) const {
    const auto q = static_cast<std::uint32_t>(q_);
    const auto u = static_cast<std::uint32_t>(i);
    if (i < q_ * q_) return {Elem{u % q}, Elem{u / q}, F_.one()};
    if (i < q_ * q_ + q_) return {Elem{u - q * q}, F_.one(), F_.zero()};
    return {F_.one(), F_.zero(), F_.zero()};
  }

  Field F_;
  int q_;
  int size_;
  std::vector<Triple> coords_;
  std::vector<std::vector<int>> line_pts_;
  std::vector<std::vector<int>> pt_lines_;
  std::vector<Bitset> line_mask_;
};

/// Index of the line z = 0.
inline int infinity_line(const Plane& P) { return P.index_of({P.field().zero(), P.field().zero(), P.field().one()}); }

/// Collineation of projective order q^2+q+1 from the companion matrix of the
/// first (in coefficient order) monic cubic whose root generates
/// GF(q^3)* / GF(q)*.
inline Collineation singer_cycle(const Plane& P) {
  const Field& F = P.field();
  const auto q = static_cast<std::uint64_t>(F.q());
  const std::uint64_t order = q * q + q + 1;
  const auto factors = nt::prime_factors(static_cast<std::int64_t>(order));
  for (std::uint32_t c0 = 1; c0 < q; ++c0)
    for (std::uint32_t c1 = 0; c1 < q; ++c1)
      for (std::uint32_t c2 = 0; c2 < q; ++c2) {
        // X^3 + c2 X^2 + c1 X + c0, companion acting on column vectors
        bool has_root = false;
        for (Elem x : F.elements()) {
          Elem v = F.add(F.mul(F.add(F.mul(F.add(x, Elem{c2}), x), Elem{c1}), x), Elem{c0});
          if (v.is_zero()) {
            has_root = true;
            break;
          }
        }
        if (has_root) continue;
        const Mat3 comp{F.zero(), F.zero(), F.neg(Elem{c0}), F.one(), F.zero(), F.neg(Elem{c1}),
                        F.zero(), F.one(), F.neg(Elem{c2})};
        if (!mat::is_scalar(mat::pow(F, comp, order))) continue;
        bool ok = true;
        for (auto r : factors) {
          if (mat::is_scalar(mat::pow(F, comp, order / static_cast<std::uint64_t>(r)))) {
            ok = false;
            break;
          }
        }
        if (ok) return {comp, 0};
      }
  throw Error(Errc::PreconditionViolated, "no Singer cycle found");
}

/// Multiset signature of a point relative to S: membership then the sorted
/// intersection sizes of the lines through it.
inline std::vector<int> point_signature(const Plane& P, const PointSet& S, const std::vector<int>& counts, int pnt) {
  std::vector<int> sig;
  sig.reserve(P.q() + 2);
  sig.push_back(S.contains(pnt) ? 1 : 0);
  for (int l : P.lines_through(pnt)) sig.push_back(counts[l]);
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

namespace detail {

// Semilinear map sending frame a (after Frobenius twist) to frame b.
inline std::optional<Mat3> frame_map(const Plane& P, const std::array<Triple, 4>& a, const std::array<Triple, 4>& b) {
  const Field& F = P.field();
  auto frame_matrix = [&](const std::array<Triple, 4>& f) -> std::optional<Mat3> {
    Mat3 a0 = mat::from_columns(f[0], f[1], f[2]);
    if (mat::det(F, a0).is_zero()) return std::nullopt;
    const Triple lam = mat::apply(F, mat::inverse(F, a0), f[3]);
    for (auto x : lam)
      if (x.is_zero()) return std::nullopt;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a0[3 * r + c] = F.mul(a0[3 * r + c], lam[c]);
    return a0;
  };
  auto ma = frame_matrix(a), mb = frame_matrix(b);
  if (!ma || !mb) return std::nullopt;
  return mat::mul(F, *mb, mat::inverse(F, *ma));
}

}  // namespace detail

/// A semilinear collineation mapping S1 onto S2, if one exists.
///
/// Chooses a frame (four points, no three collinear), rarest signature classes
/// first, and backtracks over signature-compatible images of it; every
/// complete frame image together with each Frobenius twist determines a unique
/// candidate map, which is then checked on all of S1.
inline std::optional<Collineation> are_isomorphic(const Plane& P, const PointSet& S1, const PointSet& S2) {
  if (S1.size() != S2.size()) return std::nullopt;
  const int N = P.size();
  const auto c1 = P.line_counts(S1), c2 = P.line_counts(S2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::map<std::vector<int>, int> classes;
  std::vector<int> cls1(N), cls2(N);
  for (int i = 0; i < N; ++i) cls1[i] = classes.emplace(point_signature(P, S1, c1, i), static_cast<int>(classes.size())).first->second;
  for (int i = 0; i < N; ++i) cls2[i] = classes.emplace(point_signature(P, S2, c2, i), static_cast<int>(classes.size())).first->second;
  std::vector<int> size1(classes.size(), 0), size2(classes.size(), 0);
  for (int i = 0; i < N; ++i) {
    ++size1[cls1[i]];
    ++size2[cls2[i]];
  }
  if (size1 != size2) return std::nullopt;

  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return size1[cls1[a]] < size1[cls1[b]]; });
  std::array<int, 4> frame{};
  int got = 0;
  for (int cand : order) {
    bool ok = true;
    for (int i = 0; i < got && ok; ++i)
      if (frame[i] == cand) ok = false;
    for (int i = 0; i < got && ok; ++i)
      for (int j = i + 1; j < got && ok; ++j)
        if (P.collinear(frame[i], frame[j], cand)) ok = false;
    if (ok) frame[got++] = cand;
    if (got == 4) break;
  }

  std::vector<std::vector<int>> candidates(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < N; ++j)
      if (cls2[j] == cls1[frame[i]]) candidates[i].push_back(j);

  const Field& F = P.field();
  std::array<int, 4> img{};
  std::optional<Collineation> found;
  auto check = [&]() {
    std::array<Triple, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = P.point(img[i]);
    for (int s = 0; s < F.n() && !found; ++s) {
      std::array<Triple, 4> a{};
      for (int i = 0; i < 4; ++i) a[i] = P.frob(P.point(frame[i]), s);
      auto m = detail::frame_map(P, a, b);
      if (!m) continue;
      const Collineation col{*m, s};
      bool ok = true;
      for (int pnt : S1) {
        if (!S2.contains(P.apply(col, pnt))) {
          ok = false;
          break;
        }
      }
      if (ok) found = col;
    }
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (found) return;
    if (depth == 4) {
      check();
      return;
    }
    for (int cand : candidates[depth]) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        if (img[i] == cand) ok = false;
      }
      for (int i = 0; i < depth && ok; ++i)
        for (int j = i + 1; j < depth && ok; ++j)
          if (P.collinear(img[i], img[j], cand)) ok = false;
      for (int i = 0; i < depth && ok; ++i)
        if (c1[P.line_through(frame[i], frame[depth])] != c2[P.line_through(img[i], cand)]) ok = false;
      if (!ok) continue;
      img[depth] = cand;
      self(self, depth + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

struct StandardPosition {
  Collineation map;
  int tangent = -1;        // chosen tangent line (index, original coordinates)
  int tangent_point = -1;  // its point of S
  /// Affine pairs of the other |S|-1 image points. For an image point (x:y:1)
  /// the pair is (a, b) = (y, x): lines x = m*y + c run through (m:1:0), so
  /// every slope-m line avoids (1:0:0) and must meet S in an affine point.
  std::vector<std::pair<Elem, Elem>> affine;
};

/// Moves the tangent `line` (meeting S only in one point) to z = 0 and its
/// point of S to (1:0:0).
inline StandardPosition standard_position_at(const Plane& P, const PointSet& S, int line) {
  const Field& F = P.field();
  int on = -1, hits = 0;
  for (int pnt : P.points_on(line))
    if (S.contains(pnt)) {
      on = pnt;
      ++hits;
    }
  if (hits != 1) throw Error(Errc::NoTangent, "line is not a tangent");
  int other = -1;
  for (int pnt : P.points_on(line))
    if (pnt != on) {
      other = pnt;
      break;
    }
  int off = -1;
  for (int pnt = 0; pnt < P.size(); ++pnt)
    if (!P.incident(pnt, line)) {
      off = pnt;
      break;
    }
  const Mat3 back = mat::from_columns(P.point(on), P.point(other), P.point(off));
  StandardPosition sp{{mat::inverse(F, back), 0}, line, on, {}};
  for (int pnt : S) {
    if (pnt == on) continue;
    const Triple img = *P.normalize(mat::apply(F, sp.map.m, P.point(pnt)));
    sp.affine.emplace_back(img[1], img[0]);
  }
  return sp;
}

/// Standard position at the first tangent in line order.
inline StandardPosition standard_position(const Plane& P, const PointSet& S) {
  const auto counts = P.line_counts(S);
  for (int l = 0; l < P.size(); ++l)
    if (counts[l] == 1) return standard_position_at(P, S, l);
  throw Error(Errc::NoTangent, "every line meets the set in 0 or at least 2 points");
}

/// Lines meeting S in exactly one point.
inline std::vector<int> tangent_lines(const Plane& P, const PointSet& S) {
  const auto counts = P.line_counts(S);
  std::vector<int> out;
  for (int l = 0; l < P.size(); ++l)
    if (counts[l] == 1) out.push_back(l);
  return out;
}

}  // namespace fingeo
