#pragma once

// (k,n)-arcs, conics and hyperovals.

#include <array>
#include <optional>
#include <vector>

#include "fingeo/error.hpp"
#include "fingeo/linalg.hpp"
#include "fingeo/plane.hpp"

namespace fingeo {

struct ArcReport {
  int k = 0;
  int n = 0;
  int n_max = 0;
  std::int64_t barlotti_bound = 0;  // (n-1)(q+1)+1
  bool is_arc = false;              // n_max <= n
  bool is_maximal = false;          // k = bound, every line meets S in 0 or n points
  bool complete = false;            // no outside point keeps the arc property
};

inline ArcReport arc_analyze(const Plane& P, const PointSet& S, int n) {
  if (n < 2) throw Error(Errc::OutOfRange, "n must be >= 2");
  const auto counts = P.line_counts(S);
  ArcReport r;
  r.k = S.size();
  r.n = n;
  for (int c : counts) r.n_max = std::max(r.n_max, c);
  r.barlotti_bound = static_cast<std::int64_t>(n - 1) * (P.q() + 1) + 1;
  r.is_arc = r.n_max <= n;
  bool zero_or_n = true;
  for (int c : counts)
    if (c != 0 && c != n) zero_or_n = false;
  r.is_maximal = r.k == r.barlotti_bound && zero_or_n;
  if (r.is_arc) {
    r.complete = true;
    for (int pnt = 0; pnt < P.size() && r.complete; ++pnt) {
      if (S.contains(pnt)) continue;
      bool blocked = false;
      for (int l : P.lines_through(pnt))
        if (counts[l] == n) {
          blocked = true;
          break;
        }
      if (!blocked) r.complete = false;
    }
  }
  return r;
}

/// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz.
using QuadForm = std::array<Elem, 6>;

inline Elem eval_form(const Field& F, const QuadForm& f, const Triple& v) {
  const Elem x = v[0], y = v[1], z = v[2];
  const Elem terms[6] = {F.mul(x, x), F.mul(y, y), F.mul(z, z), F.mul(x, y), F.mul(x, z), F.mul(y, z)};
  Elem acc = F.zero();
  for (int i = 0; i < 6; ++i) acc = F.add(acc, F.mul(f[i], terms[i]));
  return acc;
}

inline PointSet zero_set(const Plane& P, const QuadForm& f) {
  std::vector<int> pts;
  for (int i = 0; i < P.size(); ++i)
    if (eval_form(P.field(), f, P.point(i)).is_zero()) pts.push_back(i);
  return PointSet(std::move(pts));
}

/// Nondegenerate: exactly q+1 zeros and no line among them. Works uniformly in
/// every characteristic.
inline bool is_nondegenerate(const Plane& P, const QuadForm& f) {
  const PointSet z = zero_set(P, f);
  if (z.size() != P.q() + 1) return false;
  const auto counts = P.line_counts(z);
  for (int c : counts)
    if (c == P.q() + 1) return false;
  return true;
}

inline PointSet conic_points(const Plane& P, const QuadForm& f) {
  if (!is_nondegenerate(P, f)) throw Error(Errc::DegenerateForm, "form is degenerate");
  return zero_set(P, f);
}

/// A nondegenerate form whose zero set is exactly S, if any.
inline std::optional<QuadForm> is_conic(const Plane& P, const PointSet& S) {
  const Field& F = P.field();
  if (S.size() != P.q() + 1) throw Error(Errc::WrongSize, "a conic has q+1 points");
  std::vector<Row> rows;
  for (int pnt : S) {
    const auto& v = P.point(pnt);
    rows.push_back({F.mul(v[0], v[0]), F.mul(v[1], v[1]), F.mul(v[2], v[2]), F.mul(v[0], v[1]), F.mul(v[0], v[2]),
                    F.mul(v[1], v[2])});
  }
  const auto basis = nullspace(F, rows, 6);
  const int d = static_cast<int>(basis.size());
  if (d == 0) return std::nullopt;
  // projective combinations: first nonzero coefficient equal to 1
  const auto q = static_cast<std::uint64_t>(F.q());
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Elem> coef(d);
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      coef[i] = Elem{static_cast<std::uint32_t>(c % q)};
      c /= q;
    }
    int lead = d - 1;
    while (coef[lead].is_zero()) --lead;
    if (coef[lead] != F.one()) continue;
    QuadForm form{};
    form.fill(F.zero());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < 6; ++j) form[j] = F.add(form[j], F.mul(coef[i], basis[i][j]));
    if (zero_set(P, form) == S && is_nondegenerate(P, form)) return form;
  }
  return std::nullopt;
}

/// The common point of the q+1 tangents of a (q+1)-arc, q even.
inline int nucleus(const Plane& P, const PointSet& S) {
  if (P.field().p() != 2) throw Error(Errc::OddCharacteristic, "nucleus needs q even");
  const auto counts = P.line_counts(S);
  if (S.size() != P.q() + 1) throw Error(Errc::NotAnArc, "expected q+1 points");
  for (int c : counts)
    if (c > 2) throw Error(Errc::NotAnArc, "three collinear points");
  std::vector<int> tangents;
  for (int pnt : S) {
    for (int l : P.lines_through(pnt))
      if (counts[l] == 1) {
        tangents.push_back(l);
        break;
      }
  }
  if (tangents.size() < 2) throw Error(Errc::NoCommonNucleus, "missing tangents");
  const int nuc = P.intersection(tangents[0], tangents[1]);
  for (int l : tangents)
    if (!P.incident(nuc, l)) throw Error(Errc::NoCommonNucleus, "tangents are not concurrent");
  return nuc;
}

inline PointSet extend_to_hyperoval(const Plane& P, const PointSet& S) {
  const int nuc = nucleus(P, S);
  std::vector<int> pts(S.begin(), S.end());
  pts.push_back(nuc);
  return PointSet(std::move(pts));
}

}  // namespace fingeo
