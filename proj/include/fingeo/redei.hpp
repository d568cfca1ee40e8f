#pragma once

// Rédei polynomials R(X,Y) = prod (X - a_i Y + b_i) for function graphs and for
// blocking sets in standard position.

#include <map>
#include <utility>
#include <vector>

#include "fingeo/directions.hpp"
#include "fingeo/error.hpp"
#include "fingeo/plane.hpp"
#include "fingeo/poly.hpp"

namespace fingeo {

/// R(X,Y) = X^D + sum_i r_i(Y) X^(D-i).
class RedeiPoly {
 public:
  /// Expands prod over pairs (a, b) of (X - a Y + b).
  static RedeiPoly from_pairs(const Field& F, const std::vector<std::pair<Elem, Elem>>& pairs) {
    std::vector<Poly> c{Poly::constant(F, F.one())};  // c[j]: coefficient of X^j
    for (const auto& [a, b] : pairs) {
      const Poly lin(F, {b, F.neg(a)});
      std::vector<Poly> next(c.size() + 1, Poly(F));
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j + 1] = next[j + 1] + c[j];
        next[j] = next[j] + lin * c[j];
      }
      c = std::move(next);
    }
    return RedeiPoly(F, std::move(c));
  }

  const Field& field() const { return F_; }
  int degree() const { return static_cast<int>(xcoef_.size()) - 1; }
  /// r_i(Y) for 0 <= i <= D (r_0 = 1).
  const Poly& r(int i) const { return xcoef_[degree() - i]; }

  Poly specialize(Elem y) const {
    std::vector<Elem> v(xcoef_.size());
    for (std::size_t j = 0; j < xcoef_.size(); ++j) v[j] = xcoef_[j].eval(y);
    return Poly(F_, std::move(v));
  }

 private:
  RedeiPoly(Field F, std::vector<Poly> c) : F_(std::move(F)), xcoef_(std::move(c)) {}

  Field F_;
  std::vector<Poly> xcoef_;
};

inline RedeiPoly redei_poly_of_function(const FieldFn& f) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem w : f.field.elements()) pairs.emplace_back(w, f(w));
  return RedeiPoly::from_pairs(f.field, pairs);
}

inline Poly specialize(const RedeiPoly& R, Elem y) { return R.specialize(y); }

struct VanishingProfile {
  std::vector<int> identically_zero;   // i with r_i = 0
  std::vector<int> zero_off_dirs;      // i with r_i(y) = 0 for every y outside D_f
  bool degree_drop = true;             // deg r_i < i for all i != q-1
  /// r_i = 0 for every i <= q - N, i != q-1 (follows from vanishing off D_f).
  bool complement_range_holds = false;
  /// r_i = 0 for every i <= N, i != q-1 (the range as literally printed).
  bool printed_range_holds = false;
  int g_degree_bound = 0;              // N - 1
  int max_g_degree = -1;               // max over y in D_f of deg(R(X,y) - X^q)
};

inline VanishingProfile vanishing_profile(const RedeiPoly& R, const std::vector<Elem>& dirs) {
  const Field& F = R.field();
  const int q = static_cast<int>(F.q());
  const int N = static_cast<int>(dirs.size());
  std::vector<char> in_dirs(q, 0);
  for (Elem d : dirs) in_dirs[d.rep] = 1;

  VanishingProfile vp;
  for (int i = 1; i <= R.degree(); ++i) {
    const Poly& ri = R.r(i);
    if (ri.is_zero()) vp.identically_zero.push_back(i);
    if (i != q - 1 && ri.deg() >= i) vp.degree_drop = false;
    bool off = true;
    for (Elem y : F.elements())
      if (!in_dirs[y.rep] && !ri.eval(y).is_zero()) off = false;
    if (off) vp.zero_off_dirs.push_back(i);
  }
  auto range_zero = [&](int upto) {
    for (int i = 1; i <= std::min(upto, R.degree()); ++i)
      if (i != q - 1 && !R.r(i).is_zero()) return false;
    return true;
  };
  vp.complement_range_holds = range_zero(q - N);
  vp.printed_range_holds = range_zero(N);
  vp.g_degree_bound = N - 1;
  const Poly xq = Poly::monomial(F, F.one(), q);
  for (Elem y : dirs) vp.max_g_degree = std::max(vp.max_g_degree, (R.specialize(y) - xq).deg());
  return vp;
}

struct BlockingRedei {
  StandardPosition position;
  int d = 0;  // |B| - q - 1
  RedeiPoly R;
  Poly fx;    // prod (X - a_i)
  LacunaryProfile profile;
  bool divisibility_ok = false;  // X^q - X | R[X,y] for all y
  bool vanishing_ok = false;     // r_i = 0 for i = d+1..q-2
  bool shape_ok = false;         // deg g = d, deg h <= d+1
};

inline BlockingRedei blocking_redei_at(const Plane& P, const PointSet& B, int tangent) {
  const Field& F = P.field();
  const int q = P.q();
  const auto counts = P.line_counts(B);
  for (int c : counts)
    if (c == 0) throw Error(Errc::NotBlocking, "some line misses the set");
  StandardPosition sp = standard_position_at(P, B, tangent);
  const int d = B.size() - q - 1;
  RedeiPoly R = RedeiPoly::from_pairs(F, sp.affine);
  std::vector<Elem> as;
  for (const auto& [a, b] : sp.affine) as.push_back(a);
  Poly fx = Poly::from_roots(F, as);
  LacunaryProfile prof = lacunary_split(fx);

  BlockingRedei out{std::move(sp), d, std::move(R), std::move(fx), std::move(prof)};
  const Poly field_poly = Poly::field_poly(F);
  out.divisibility_ok = true;
  for (Elem y : F.elements())
    if (!field_poly.divides(out.R.specialize(y))) out.divisibility_ok = false;
  out.vanishing_ok = true;
  for (int i = d + 1; i <= q - 2; ++i)
    if (!out.R.r(i).is_zero()) out.vanishing_ok = false;
  out.shape_ok = out.profile.g.deg() == d && out.profile.h.deg() <= d + 1;
  return out;
}

inline BlockingRedei blocking_redei(const Plane& P, const PointSet& B) {
  const auto counts = P.line_counts(B);
  for (int c : counts)
    if (c == 0) throw Error(Errc::NotBlocking, "some line misses the set");
  for (int l = 0; l < P.size(); ++l)
    if (counts[l] == 1) return blocking_redei_at(P, B, l);
  throw Error(Errc::NoTangent, "blocking set has no tangent");
}

/// For each point of B, the number of lines meeting B only in that point.
inline std::map<int, int> tangent_profile(const Plane& P, const PointSet& B) {
  const auto counts = P.line_counts(B);
  std::map<int, int> out;
  for (int pnt : B) {
    int t = 0;
    for (int l : P.lines_through(pnt))
      if (counts[l] == 1) ++t;
    out[pnt] = t;
  }
  return out;
}

}  // namespace fingeo
