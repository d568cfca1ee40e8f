#pragma once

// Directions determined by the graph of a function GF(q) -> GF(q).

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fingeo/error.hpp"
#include "fingeo/gf.hpp"

namespace fingeo {

/// A function on GF(q) as its value table, indexed by element rep.
struct FieldFn {
  Field field;
  std::vector<Elem> table;

  FieldFn(Field f, std::vector<Elem> t) : field(std::move(f)), table(std::move(t)) {
    if (table.size() != field.q()) throw Error(Errc::WrongSize, "function table must have q entries");
  }

  template <class Fn>
  static FieldFn from(const Field& f, Fn&& fn) {
    std::vector<Elem> t(f.q());
    for (Elem x : f.elements()) t[x.rep] = fn(x);
    return FieldFn(f, std::move(t));
  }

  Elem operator()(Elem x) const { return table[x.rep]; }

  /// x -> f(x) - f(0).
  FieldFn normalized() const {
    const Elem f0 = table[0];
    return from(field, [&](Elem x) { return field.sub(table[x.rep], f0); });
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.size(); ++i) os << (i ? "," : "") << table[i].rep;
    return os.str();
  }

  static FieldFn parse(const Field& f, const std::string& text) {
    std::vector<Elem> t;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        const auto v = std::stoul(tok);
        if (v >= f.q()) throw Error(Errc::ParseError, "function value out of range");
        t.push_back(Elem{static_cast<std::uint32_t>(v)});
      } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "function table: bad entry `" + tok + "`");
      }
    }
    return FieldFn(f, std::move(t));
  }
};

/// Is f additive and GF(p^e)-homogeneous? e must divide n.
inline bool is_linear_over(const FieldFn& f, int e) {
  const Field& F = f.field;
  if (!f(F.zero()).is_zero()) return false;
  for (Elem x : F.elements())
    for (Elem y : F.elements())
      if (y.rep > x.rep && F.add(f(x), f(y)) != f(F.add(x, y))) return false;
  for (Elem lam : F.subfield_elements(e))
    for (Elem x : F.elements())
      if (f(F.mul(lam, x)) != F.mul(lam, f(x))) return false;
  return true;
}

struct DirectionReport {
  std::vector<Elem> dirs;  // sorted
  int N = 0;
  int e = 0;
  std::set<int> cases;
  /// Largest divisor e' of n with f GF(p^e')-linear.
  std::optional<int> linear_over;
};

/// Cases 1-4 of the direction classification that (N, e) satisfies.
inline std::set<int> direction_cases(const Field& F, int N, int e) {
  const std::int64_t q = F.q(), p = F.p();
  const int n = F.n();
  const std::int64_t pe = nt::ipow(p, e);
  std::set<int> out;
  if (e == 0 && 2 * N >= q + 3 && N <= q + 1) out.insert(1);
  if (e == 1 && p == 2 && 3 * N >= q + 5 && N <= q - 1) out.insert(2);
  if (pe > 2 && e >= 1 && n % e == 0 && N >= q / pe + 1 && N * (pe - 1) <= q - 1) out.insert(3);
  if (e == n && N == 1) out.insert(4);
  return out;
}

inline DirectionReport directions_of(const FieldFn& f) {
  const Field& F = f.field;
  const std::uint32_t q = F.q();
  std::vector<char> seen(q, 0);
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = u + 1; v < q; ++v)
      seen[F.div(F.sub(f.table[u], f.table[v]), F.sub(Elem{u}, Elem{v})).rep] = 1;
  DirectionReport rep;
  for (std::uint32_t i = 0; i < q; ++i)
    if (seen[i]) rep.dirs.push_back(Elem{i});
  rep.N = static_cast<int>(rep.dirs.size());

  // e: least p-adic valuation over the nonzero intersection sizes of lines
  // y = m x + c, m in D_f, with the graph.
  int e = F.n();
  std::vector<int> hist(q);
  for (Elem m : rep.dirs) {
    std::fill(hist.begin(), hist.end(), 0);
    for (Elem w : F.elements()) ++hist[F.sub(f(w), F.mul(m, w)).rep];
    for (int c : hist)
      if (c > 0) e = std::min(e, nt::valuation(c, F.p()));
  }
  rep.e = e;
  rep.cases = direction_cases(F, rep.N, rep.e);

  const FieldFn g = f.normalized();
  for (int d = F.n(); d >= 1; --d) {
    if (F.n() % d != 0) continue;
    if (is_linear_over(g, d)) {
      rep.linear_over = d;
      break;
    }
  }
  return rep;
}

struct IntervalHit {
  int e = 0;             // 0 denotes ((q+1)/2, q]
  bool strict = false;   // also inside the open interval
};

/// Intervals (1 + (q-1)/(p^e+1), (q-1)/(p^e-1)], e = 1..n/2, and ((q+1)/2, q]
/// containing N. Right endpoints are closed. Empty result: bound violated.
inline std::vector<IntervalHit> check_redei_intervals(const Field& F, int N) {
  const std::int64_t q = F.q(), p = F.p();
  if (N < 2 || N > q) throw Error(Errc::OutOfRange, "N must lie in [2, q]");
  std::vector<IntervalHit> out;
  for (int e = 1; e <= F.n() / 2; ++e) {
    const std::int64_t pe = nt::ipow(p, e);
    const bool above_lo = (N - 1) * (pe + 1) > q - 1;
    if (above_lo && N * (pe - 1) <= q - 1) out.push_back({e, N * (pe - 1) < q - 1});
  }
  if (2 * N > q + 1) out.push_back({0, N < q});
  return out;
}

struct LinearityVerdict {
  DirectionReport report;
  bool linearity_hypothesis = false;  // p^e > 3, or p^e = 3 and N = q/3 + 1
  bool linearity_holds = false;
};

inline LinearityVerdict linearity_verdict(const FieldFn& f) {
  const Field& F = f.field;
  if (!f(F.zero()).is_zero()) throw Error(Errc::NotNormalized, "f(0) must be 0");
  LinearityVerdict v;
  v.report = directions_of(f);
  const std::int64_t pe = nt::ipow(F.p(), v.report.e);
  v.linearity_hypothesis = pe > 3 || (pe == 3 && 3 * static_cast<std::int64_t>(v.report.N) == F.q() + 3);
  if (v.linearity_hypothesis) v.linearity_holds = F.n() % v.report.e == 0 && is_linear_over(f, v.report.e);
  return v;
}

enum class ExampleKind { HalfPower, FrobPower, SubfieldTrace };

inline FieldFn example_function(ExampleKind kind, const Field& F, int e = 1) {
  switch (kind) {
    case ExampleKind::HalfPower:
      if (F.p() == 2) throw Error(Errc::ParityError, "x^((q+1)/2) needs q odd");
      return FieldFn::from(F, [&](Elem x) { return F.pow(x, (F.q() + 1) / 2); });
    case ExampleKind::FrobPower:
      if (e < 1 || F.n() % e != 0) throw Error(Errc::NotADivisor, "e must divide n");
      return FieldFn::from(F, [&](Elem x) { return F.frob_pow(x, e); });
    case ExampleKind::SubfieldTrace:
      return FieldFn::from(F, [&](Elem x) { return F.trace_to(e, x); });
  }
  throw Error(Errc::UsageError, "unknown example kind");
}

}  // namespace fingeo
