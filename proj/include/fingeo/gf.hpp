#pragma once

// Exact arithmetic in GF(p^n), polynomial basis.
//
// An element is stored as the integer sum c_i * p^i where c_0 + c_1 a + ... +
// c_{n-1} a^{n-1} is its coordinate vector over the prime field, a being a root
// of the defining polynomial. Fields with q <= 1024 carry full addition and
// multiplication tables; larger fields fall back to digit-wise addition and
// log/exp multiplication.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fingeo/error.hpp"

namespace fingeo {

namespace nt {

inline bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// b^e, exact; callers keep the result well inside 63 bits.
constexpr std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Largest r with r*r <= v.
constexpr std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

/// Exponent of p in v (v > 0).
constexpr int valuation(std::int64_t v, std::int64_t p) {
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace nt

struct Elem {
  std::uint32_t rep = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t r) : rep(r) {}

  constexpr bool is_zero() const { return rep == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

// Dense polynomials over the prime field, coefficients low to high.
using PrimePoly = std::vector<int>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  // m is monic
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

inline PrimePoly digits_of(std::uint32_t rep, int p, int n) {
  PrimePoly d(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(rep % p);
    rep /= p;
  }
  return d;
}

inline std::uint32_t rep_of(const PrimePoly& d, int p) {
  std::uint32_t r = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) r = r * p + d[i];
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    const auto count = static_cast<std::uint32_t>(nt::ipow(p, d));
    for (std::uint32_t low = 0; low < count; ++low) {
      PrimePoly m = digits_of(low, p, d);
      m.push_back(1);
      if (prime_poly_mod(f, m, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  int p = 0;
  int n = 0;
  std::uint32_t q = 0;
  std::vector<int> irr;
  bool tabled = false;
  std::vector<std::uint16_t> add_tab;
  std::vector<std::uint16_t> mul_tab;
  std::vector<std::uint32_t> neg_tab;
  std::vector<std::uint32_t> inv_tab;
  std::vector<std::uint32_t> exp_tab;  // exp_tab[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_tab;  // log_tab[g^i] = i
  std::uint32_t primitive = 0;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, w = 1;
    for (int i = 0; i < n; ++i) {
      r += static_cast<std::uint32_t>((a % p + b % p) % p) * w;
      a /= p;
      b /= p;
      w *= p;
    }
    return r;
  }

  std::uint32_t neg_slow(std::uint32_t a) const {
    std::uint32_t r = 0, w = 1;
    for (int i = 0; i < n; ++i) {
      r += static_cast<std::uint32_t>((p - a % p) % p) * w;
      a /= p;
      w *= p;
    }
    return r;
  }

  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    const PrimePoly da = digits_of(a, p, n), db = digits_of(b, p, n);
    PrimePoly prod(2 * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    PrimePoly r = prime_poly_mod(prod, irr, p);
    r.resize(n, 0);
    return rep_of(r, p);
  }

  std::uint32_t pow_poly(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace detail

/// GF(p^n) together with its defining polynomial. Cheap to copy; immutable.
class Field {
 public:
  static constexpr std::uint32_t kTableLimit = 1024;
  static constexpr std::uint32_t kSizeLimit = 1u << 20;

  /// Builds GF(p^n). Without `irr` the lexicographically smallest monic
  /// irreducible is used, ordering by (c_0 + c_1 p + ... + c_{n-1} p^{n-1}).
  static Field make(int p, int n, std::optional<std::vector<int>> irr = std::nullopt) {
    if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
    const std::int64_t q64 = nt::ipow(p, n);
    if (q64 > kSizeLimit) throw Error(Errc::TooLarge, "field order exceeds 2^20");

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->n = n;
    d->q = static_cast<std::uint32_t>(q64);

    if (irr) {
      if (static_cast<int>(irr->size()) != n + 1 || irr->back() != 1)
        throw Error(Errc::DegreeMismatch, "irreducible must be monic of degree " + std::to_string(n));
      for (int c : *irr)
        if (c < 0 || c >= p) throw Error(Errc::DegreeMismatch, "coefficient out of range");
      if (!detail::is_irreducible(*irr, p)) throw Error(Errc::NotIrreducible, "supplied polynomial is reducible");
      d->irr = *irr;
    } else {
      const auto count = static_cast<std::uint32_t>(nt::ipow(p, n));
      for (std::uint32_t low = 0; low < count; ++low) {
        detail::PrimePoly cand = detail::digits_of(low, p, n);
        cand.push_back(1);
        if (detail::is_irreducible(cand, p)) {
          d->irr = cand;
          break;
        }
      }
    }
    build_tables(*d);
    return Field(std::move(d));
  }

  int p() const { return d_->p; }
  int n() const { return d_->n; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<int>& irr() const { return d_->irr; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of the integer k in the prime subfield.
  Elem from_int(std::int64_t k) const { return Elem{static_cast<std::uint32_t>(((k % p()) + p()) % p())}; }
  /// Root of the defining polynomial: rep p when n > 1, -c_0 when n = 1.
  Elem generator_root() const { return n() == 1 ? Elem{static_cast<std::uint32_t>((p() - d_->irr[0]) % p())} : Elem{static_cast<std::uint32_t>(p())}; }
  Elem primitive() const { return Elem{d_->primitive}; }
  bool contains(Elem a) const { return a.rep < q(); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out(q());
    for (std::uint32_t i = 0; i < q(); ++i) out[i] = Elem{i};
    return out;
  }

  Elem add(Elem a, Elem b) const {
    if (d_->tabled) return Elem{d_->add_tab[a.rep * d_->q + b.rep]};
    return Elem{d_->add_slow(a.rep, b.rep)};
  }
  Elem neg(Elem a) const { return d_->tabled ? Elem{d_->neg_tab[a.rep]} : Elem{d_->neg_slow(a.rep)}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (d_->tabled) return Elem{d_->mul_tab[a.rep * d_->q + b.rep]};
    if (a.is_zero() || b.is_zero()) return Elem{0};
    return Elem{d_->exp_tab[(d_->log_tab[a.rep] + d_->log_tab[b.rep]) % (d_->q - 1)]};
  }
  Elem inv(Elem a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (d_->tabled) return Elem{d_->inv_tab[a.rep]};
    return Elem{d_->exp_tab[(d_->q - 1 - d_->log_tab[a.rep]) % (d_->q - 1)]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const std::uint64_t l = d_->log_tab[a.rep];
    return Elem{d_->exp_tab[static_cast<std::uint32_t>((l * (e % (q() - 1))) % (q() - 1))]};
  }

  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "log of zero");
    return d_->log_tab[a.rep];
  }
  Elem exp(std::uint64_t i) const { return Elem{d_->exp_tab[i % (q() - 1)]}; }

  /// a^(p^e); the exponent is taken mod n.
  Elem frob_pow(Elem a, int e) const {
    e %= n();
    Elem r = a;
    for (int i = 0; i < e; ++i) r = pow(r, static_cast<std::uint64_t>(p()));
    return r;
  }

  /// Trace down to GF(p^e): sum of a^(p^(e i)), i < n/e.
  Elem trace_to(int e, Elem a) const {
    require_divisor(e);
    Elem acc = zero(), term = a;
    for (int i = 0; i < n() / e; ++i) {
      acc = add(acc, term);
      term = frob_pow(term, e);
    }
    return acc;
  }

  /// Norm down to GF(p^e): a^((q-1)/(p^e-1)).
  Elem norm_to(int e, Elem a) const {
    require_divisor(e);
    const auto sub_q = static_cast<std::uint64_t>(nt::ipow(p(), e));
    return pow(a, (q() - 1) / (sub_q - 1));
  }

  /// GF(p^e) inside this field, sorted by rep.
  std::vector<Elem> subfield_elements(int e) const {
    require_divisor(e);
    std::vector<Elem> out;
    for (std::uint32_t i = 0; i < q(); ++i)
      if (frob_pow(Elem{i}, e) == Elem{i}) out.push_back(Elem{i});
    return out;
  }

  bool in_subfield(int e, Elem a) const { return frob_pow(a, e) == a; }

  std::vector<int> digits(Elem a) const { return detail::digits_of(a.rep, p(), n()); }
  Elem from_digits(const std::vector<int>& d) const {
    detail::PrimePoly c(d);
    c.resize(n(), 0);
    return Elem{detail::rep_of(c, p())};
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.d_ == b.d_ || (a.p() == b.p() && a.n() == b.n() && a.irr() == b.irr());
  }

  /// Text form `p n [c_0,...,c_n]`.
  std::string to_string() const {
    std::ostringstream os;
    os << p() << ' ' << n() << " [";
    for (std::size_t i = 0; i < irr().size(); ++i) os << (i ? "," : "") << irr()[i];
    os << ']';
    return os.str();
  }

  /// Accepts `p n` or `p n [c_0,...,c_n]`.
  static Field parse(const std::string& text) {
    std::istringstream is(text);
    int p = 0, n = 0;
    if (!(is >> p >> n)) throw Error(Errc::ParseError, "field spec: expected `p n [coeffs]`");
    std::string rest;
    std::getline(is, rest);
    rest.erase(std::remove_if(rest.begin(), rest.end(), [](char c) { return c == ' ' || c == '\t'; }), rest.end());
    if (rest.empty()) return make(p, n);
    if (rest.front() != '[' || rest.back() != ']') throw Error(Errc::ParseError, "field spec: coefficients must be bracketed");
    std::vector<int> irr;
    std::istringstream cs(rest.substr(1, rest.size() - 2));
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      try {
        irr.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "field spec: bad coefficient `" + tok + "`");
      }
    }
    return make(p, n, irr);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  void require_divisor(int e) const {
    if (e < 1 || n() % e != 0)
      throw Error(Errc::NotADivisor, std::to_string(e) + " does not divide " + std::to_string(n()));
  }

  static void build_tables(detail::FieldData& d) {
    const std::uint32_t q = d.q;
    // primitive element: smallest rep whose order is q-1
    const auto factors = nt::prime_factors(q - 1);
    if (q == 2) {
      d.primitive = 1;
    } else {
      for (std::uint32_t g = 2; g < q; ++g) {
        bool ok = true;
        for (auto r : factors) {
          if (d.pow_poly(g, (q - 1) / r) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          d.primitive = g;
          break;
        }
      }
    }
    d.exp_tab.assign(q - 1, 0);
    d.log_tab.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      d.exp_tab[i] = x;
      d.log_tab[x] = i;
      x = d.mul_poly(x, d.primitive);
    }
    if (q > kTableLimit) return;
    d.tabled = true;
    d.add_tab.resize(static_cast<std::size_t>(q) * q);
    d.mul_tab.resize(static_cast<std::size_t>(q) * q);
    d.neg_tab.resize(q);
    d.inv_tab.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      d.neg_tab[a] = d.neg_slow(a);
      d.inv_tab[a] = a == 0 ? 0 : d.exp_tab[(q - 1 - d.log_tab[a]) % (q - 1)];
      for (std::uint32_t b = 0; b < q; ++b) {
        d.add_tab[a * q + b] = static_cast<std::uint16_t>(d.add_slow(a, b));
        d.mul_tab[a * q + b] = static_cast<std::uint16_t>(
            a == 0 || b == 0 ? 0 : d.exp_tab[(d.log_tab[a] + d.log_tab[b]) % (q - 1)]);
      }
    }
  }

  std::shared_ptr<const detail::FieldData> d_;
};

/// GF(q) with the default irreducible.
inline Field field_of_order(std::int64_t q) {
  const auto ps = nt::prime_factors(q);
  if (q < 2 || ps.size() != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  int n = 0;
  for (std::int64_t v = q; v > 1; v /= ps[0]) ++n;
  return Field::make(static_cast<int>(ps[0]), n);
}

}  // namespace fingeo
