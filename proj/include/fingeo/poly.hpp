#pragma once

// Dense univariate polynomials over GF(q).

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fingeo/error.hpp"
#include "fingeo/gf.hpp"

namespace fingeo {

class Poly {
 public:
  Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }
  explicit Poly(Field f) : f_(std::move(f)) {}

  static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
  static Poly monomial(const Field& f, Elem c, int deg) {
    std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, f.zero());
    v[deg] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(const Field& f) { return monomial(f, f.one(), 1); }
  /// X^q - X over the field of `f`.
  static Poly field_poly(const Field& f) {
    Poly r = monomial(f, f.one(), static_cast<int>(f.q()));
    return r - monomial(f, f.one(), 1);
  }
  /// Product of (X - r) over the multiset `roots`.
  static Poly from_roots(const Field& f, const std::vector<Elem>& roots) {
    std::vector<Elem> c{f.one()};
    for (Elem r : roots) {
      std::vector<Elem> next(c.size() + 1, f.zero());
      const Elem nr = f.neg(r);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] = f.add(next[i + 1], c[i]);
        next[i] = f.add(next[i], f.mul(c[i], nr));
      }
      c = std::move(next);
    }
    return Poly(f, std::move(c));
  }

  const Field& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : f_.zero(); }
  Elem lead() const { return c_.empty() ? f_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }

  Elem eval(Elem a) const {
    Elem acc = f_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, a), *it);
    return acc;
  }

  Poly scaled(Elem s) const {
    std::vector<Elem> v(c_);
    for (auto& x : v) x = f_.mul(x, s);
    return Poly(f_, std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(lead()));
  }

  /// Formal derivative; vanishes termwise when p divides the exponent.
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_.mul(f_.from_int(static_cast<std::int64_t>(i)), c_[i]);
    return Poly(f_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.same_field(b);
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.f_, std::move(v));
  }
  Poly operator-() const {
    std::vector<Elem> v(c_);
    for (auto& x : v) x = f_.neg(x);
    return Poly(f_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = a.f_.add(v[i + j], a.f_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// (quotient, remainder) with deg remainder < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    same_field(d);
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (deg() < d.deg()) return {Poly(f_), *this};
    std::vector<Elem> r(c_);
    std::vector<Elem> quo(c_.size() - d.c_.size() + 1, f_.zero());
    const Elem li = f_.inv(d.lead());
    for (int i = deg(); i >= d.deg(); --i) {
      const Elem c = f_.mul(r[i], li);
      if (c.is_zero()) continue;
      const int shift = i - d.deg();
      quo[shift] = c;
      for (int j = 0; j <= d.deg(); ++j) r[shift + j] = f_.sub(r[shift + j], f_.mul(c, d.c_[j]));
    }
    r.resize(d.c_.size() - 1);
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(r))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  bool divides(const Poly& m) const { return (m % *this).is_zero(); }

  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    a.same_field(b);
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// base^e mod m.
  static Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = constant(base.f_, base.f_.one()) % m;
    base = base % m;
    while (e > 0) {
      if (e & 1) r = (r * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return r;
  }

  /// True when every nonzero coefficient sits at an exponent divisible by `step`.
  bool in_powers_of_x(std::int64_t step) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero() && static_cast<std::int64_t>(i) % step != 0) return false;
    return true;
  }

  /// Largest e <= n with f in GF(q)[X^(p^e)].
  int pth_power_index() const {
    int e = 0;
    while (e < f_.n() && in_powers_of_x(nt::ipow(f_.p(), e + 1))) ++e;
    return e;
  }

  /// Text form: comma-separated reps, low degree first (`0` for the zero polynomial).
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].rep;
    return os.str();
  }

  static Poly parse(const Field& f, const std::string& text) {
    std::vector<Elem> v;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      std::uint32_t rep = 0;
      try {
        rep = static_cast<std::uint32_t>(std::stoul(tok));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "polynomial: bad coefficient `" + tok + "`");
      }
      if (rep >= f.q()) throw Error(Errc::ParseError, "polynomial: coefficient out of range");
      v.push_back(Elem{rep});
    }
    return Poly(f, std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void same_field(const Poly& o) const {
    if (!(f_ == o.f_)) throw Error(Errc::SpecMismatch, "polynomials over different fields");
  }

  Field f_;
  std::vector<Elem> c_;
};

/// Multiplicity of (X - a) for every root a in GF(q).
inline std::map<Elem, int> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  const Field& F = f.field();
  std::map<Elem, int> out;
  for (Elem a : F.elements()) {
    Poly cur = f;
    int m = 0;
    const Poly lin(F, {F.neg(a), F.one()});
    while (cur.deg() >= 1 && cur.eval(a).is_zero()) {
      cur = cur / lin;
      ++m;
    }
    if (m > 0) out[a] = m;
  }
  return out;
}

inline bool is_fully_reducible(const Poly& f) {
  int total = 0;
  for (const auto& [a, m] : roots_with_multiplicity(f)) total += m;
  return total == f.deg();
}

struct RadicalSplit {
  Poly s;  // squarefree, monic, same roots as f
  Poly r;  // remaining factors, carries the leading coefficient
};

inline RadicalSplit radical_split(const Poly& f) {
  const auto roots = roots_with_multiplicity(f);
  int total = 0;
  std::vector<Elem> distinct;
  for (const auto& [a, m] : roots) {
    total += m;
    distinct.push_back(a);
  }
  if (total != f.deg()) throw Error(Errc::NotFullyReducible, "radical split needs a fully reducible polynomial");
  Poly s = Poly::from_roots(f.field(), distinct);
  return {s, f / s};
}

struct LacunaryProfile {
  Poly g;
  Poly h;
  int k = 0;
  int e = 0;
  bool fully_reducible = false;
  bool coprime = false;
};

/// f = X^q g + h with deg h < q.
inline LacunaryProfile lacunary_split(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "lacunary split of zero");
  const Field& F = f.field();
  const int q = static_cast<int>(F.q());
  if (f.deg() >= 2 * q) throw Error(Errc::DegreeTooLarge, "degree must be < 2q");
  std::vector<Elem> lo, hi;
  for (int i = 0; i <= f.deg(); ++i) (i < q ? lo : hi).push_back(f.coeff(i));
  LacunaryProfile prof{Poly(F, std::move(hi)), Poly(F, std::move(lo))};
  prof.k = std::max(prof.g.deg(), prof.h.deg());
  prof.e = f.pth_power_index();
  prof.fully_reducible = is_fully_reducible(f);
  prof.coprime = Poly::gcd(prof.g, prof.h).deg() == 0;
  return prof;
}

enum class XqgTag { InXp, GIsMinusX, DegreeLarge };

inline const char* xqg_tag_name(XqgTag t) {
  switch (t) {
    case XqgTag::InXp: return "IN_XP";
    case XqgTag::GIsMinusX: return "G_IS_MINUS_X";
    case XqgTag::DegreeLarge: return "DEGREE_LARGE";
  }
  return "?";
}

/// Which branches of the X^q + g trichotomy hold. Input must be monic of
/// degree q, fully reducible, with vanishing X^(q-1) coefficient.
inline std::set<XqgTag> classify_xq_plus_g(const Poly& f) {
  const Field& F = f.field();
  const int q = static_cast<int>(F.q());
  if (!f.is_monic() || f.deg() != q || !f.coeff(q - 1).is_zero())
    throw Error(Errc::PreconditionViolated, "expected X^q + g with deg g < q-1");
  if (!is_fully_reducible(f)) throw Error(Errc::PreconditionViolated, "not fully reducible");
  const Poly g = f - Poly::monomial(F, F.one(), q);
  std::set<XqgTag> tags;
  if (g.in_powers_of_x(F.p())) tags.insert(XqgTag::InXp);
  if (g == -Poly::x(F)) tags.insert(XqgTag::GIsMinusX);
  if (2 * g.deg() >= q + 1) tags.insert(XqgTag::DegreeLarge);
  return tags;
}

namespace detail {

using i128 = __int128;

// lhs >= sqrt(p^m) * c for integers lhs, c >= 0.
inline bool ge_scaled_root(i128 lhs, i128 c, std::int64_t p, int m) {
  if (lhs < 0) return false;
  i128 pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  return lhs * lhs >= c * c * pm;
}

// Smallest integer m >= 1 with m >= 1/4 + sqrt((P+1)/2).
inline std::int64_t ceil_quarter_plus_root(std::int64_t P) {
  std::int64_t m = 1;
  while ((4 * m - 1) * (4 * m - 1) < 8 * (P + 1)) ++m;
  return m;
}

}  // namespace detail

struct LacunaryClass {
  int e = 0;
  int k = 0;
  std::set<int> cases;
  /// Set when the function x -> f(x) on GF(q) equals a Tr(bx+c)+d ("trace")
  /// or a Norm(bx+c)+d ("norm"); case 4 only, best effort.
  std::optional<std::string> case4_form;
};

/// f(x) as a function on GF(q) compared against a*Tr(bx+c)+d and a*Norm(bx+c)+d
/// with Tr, Norm down to GF(sqrt q). Brute force, skipped above q = 64.
inline std::optional<std::string> recognize_trace_norm(const Poly& f) {
  const Field& F = f.field();
  if (F.n() % 2 != 0 || F.q() > 64) return std::nullopt;
  const int half = F.n() / 2;
  std::vector<Elem> vals(F.q());
  for (Elem x : F.elements()) vals[x.rep] = f.eval(x);
  const Elem d0 = vals[0];
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    for (std::uint32_t b = 1; b < F.q(); ++b) {
      bool ok = true;
      for (Elem x : F.elements()) {
        const Elem v = F.add(F.mul(Elem{a}, F.trace_to(half, F.mul(Elem{b}, x))), d0);
        if (v != vals[x.rep]) {
          ok = false;
          break;
        }
      }
      if (ok) return "trace";
    }
  }
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    for (std::uint32_t b = 1; b < F.q(); ++b) {
      for (std::uint32_t c = 0; c < F.q(); ++c) {
        const Elem d = F.sub(d0, F.mul(Elem{a}, F.norm_to(half, Elem{c})));
        bool ok = true;
        for (Elem x : F.elements()) {
          const Elem arg = F.add(F.mul(Elem{b}, x), Elem{c});
          if (F.add(F.mul(Elem{a}, F.norm_to(half, arg)), d) != vals[x.rep]) {
            ok = false;
            break;
          }
        }
        if (ok) return "norm";
      }
    }
  }
  return std::nullopt;
}

/// The nine-case classification of fully reducible X^q g + h, (g,h) = 1.
/// Reports every case whose conditions the pair (e, k) and f satisfy.
inline LacunaryClass classify_lacunary(const Poly& f) {
  const Field& F = f.field();
  const LacunaryProfile prof = lacunary_split(f);
  const std::int64_t q = F.q();
  if (!prof.fully_reducible) throw Error(Errc::PreconditionViolated, "not fully reducible");
  if (!prof.coprime) throw Error(Errc::PreconditionViolated, "g and h not coprime");
  if (prof.k >= q) throw Error(Errc::PreconditionViolated, "k must be < q");

  using detail::i128;
  const int n = F.n(), e = prof.e;
  const std::int64_t p = F.p(), k = prof.k;
  const std::int64_t pe = nt::ipow(p, e);
  LacunaryClass res{e, prof.k, {}, std::nullopt};

  if (e == n && k == 0) res.cases.insert(1);
  if (3 * e >= 2 * n && k >= pe) res.cases.insert(2);
  if (3 * e < 2 * n && 2 * e > n) {
    // k >= p^(n-e/2) - (3/2) p^(n-e)
    if (detail::ge_scaled_root(2 * k + 3 * nt::ipow(p, n - e), 2, p, 2 * n - e)) res.cases.insert(3);
  }
  if (2 * e == n && k == pe) {
    res.cases.insert(4);
    res.case4_form = recognize_trace_norm(f);
  }
  if (2 * e == n && k >= pe * detail::ceil_quarter_plus_root(pe)) res.cases.insert(5);
  if (2 * e < n && 3 * e > n) {
    // k >= p^((n+e)/2) - p^(n-e) - p^e/2
    const bool main = detail::ge_scaled_root(2 * k + 2 * nt::ipow(p, n - e) + pe, 2, p, n + e);
    const bool special = 3 * e == n + 1 && p <= 3 && 2 * k >= pe * (pe + 1);
    if (main || special) res.cases.insert(6);
  }
  if (3 * e <= n && e > 0) {
    const std::int64_t num = nt::ipow(p, n - e) + 1, den = pe + 1;
    if (k >= pe * ((num + den - 1) / den)) res.cases.insert(7);
  }
  if (e == 0 && 2 * k >= q + 1) res.cases.insert(8);
  if (e == 0 && k == 1 && f == Poly::field_poly(F).scaled(f.lead())) res.cases.insert(9);
  return res;
}

}  // namespace fingeo
