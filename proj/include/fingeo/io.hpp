#pragma once

// Text formats.
//
// Point set:
//   q <order> irr <c0,c1,...,cn>
//   x:y:z            one point per line, coordinates as element reps
// Subspace:
//   dim <d> ambient <n>
//   a1,a2,...,an     d basis rows
// Blank lines and lines starting with '#' are ignored. Errors carry line numbers.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fingeo/error.hpp"
#include "fingeo/gf.hpp"
#include "fingeo/linearsets.hpp"
#include "fingeo/plane.hpp"

namespace fingeo {

namespace io_detail {

struct LineReader {
  std::istream& in;
  int lineno = 0;

  bool next(std::string& out) {
    std::string s;
    while (std::getline(in, s)) {
      ++lineno;
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos || s[b] == '#') continue;
      const auto e = s.find_last_not_of(" \t\r");
      out = s.substr(b, e - b + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  }
};

inline std::vector<long> split_numbers(const std::string& s, char sep, const LineReader& r) {
  std::vector<long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() && tok.find_first_not_of(" \t", used) != std::string::npos) r.fail("bad number `" + tok + "`");
      out.push_back(v);
    } catch (const std::logic_error&) {
      r.fail("bad number `" + tok + "`");
    }
  }
  return out;
}

inline std::string join(const std::vector<int>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
  return os.str();
}

}  // namespace io_detail

struct PointSetFile {
  Field field;
  PointSet points;
};

inline void write_point_set(std::ostream& os, const Plane& P, const PointSet& S) {
  const Field& F = P.field();
  os << "q " << F.q() << " irr " << io_detail::join(F.irr(), ',') << '\n';
  for (int x : S) {
    const auto& t = P.point(x);
    os << t[0].rep << ':' << t[1].rep << ':' << t[2].rep << '\n';
  }
}

inline PointSetFile read_point_set(std::istream& in) {
  io_detail::LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing header `q <order> irr <coeffs>`");
  std::istringstream hs(line);
  std::string kq, kirr, coeffs;
  long q = 0;
  if (!(hs >> kq >> q >> kirr >> coeffs) || kq != "q" || kirr != "irr") r.fail("header must be `q <order> irr <coeffs>`");
  const auto c = io_detail::split_numbers(coeffs, ',', r);
  const auto ps = nt::prime_factors(q);
  if (q < 2 || ps.size() != 1) r.fail("q is not a prime power");
  std::vector<int> irr(c.begin(), c.end());
  Field F = [&] {
    try {
      return Field::make(static_cast<int>(ps[0]), static_cast<int>(irr.size()) - 1, irr);
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }();
  if (F.q() != static_cast<std::uint32_t>(q)) r.fail("irr degree does not match q");
  const Plane P(F);
  std::vector<int> pts;
  while (r.next(line)) {
    const auto v = io_detail::split_numbers(line, ':', r);
    if (v.size() != 3) r.fail("point must be x:y:z");
    Triple t;
    for (int i = 0; i < 3; ++i) {
      if (v[i] < 0 || v[i] >= q) r.fail("coordinate out of range");
      t[i] = Elem{static_cast<std::uint32_t>(v[i])};
    }
    if (!P.normalize(t)) r.fail("zero vector is not a point");
    pts.push_back(P.index_of(t));
  }
  return {F, PointSet(std::move(pts))};
}

inline void write_subspace(std::ostream& os, const Subspace& W) {
  os << "dim " << W.dim() << " ambient " << W.ambient() << '\n';
  for (const auto& row : W.basis()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].rep;
    os << '\n';
  }
}

inline Subspace read_subspace(std::istream& in, const Field& F) {
  io_detail::LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing header `dim <d> ambient <n>`");
  std::istringstream hs(line);
  std::string kd, ka;
  int d = 0, n = 0;
  if (!(hs >> kd >> d >> ka >> n) || kd != "dim" || ka != "ambient" || d < 0 || n < 1)
    r.fail("header must be `dim <d> ambient <n>`");
  std::vector<Row> rows;
  while (r.next(line)) {
    const auto v = io_detail::split_numbers(line, ',', r);
    if (static_cast<int>(v.size()) != n) r.fail("row must have " + std::to_string(n) + " entries");
    Row row;
    for (long x : v) {
      if (x < 0 || x >= static_cast<long>(F.q())) r.fail("entry out of range");
      row.push_back(Elem{static_cast<std::uint32_t>(x)});
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != d) r.fail("expected " + std::to_string(d) + " rows");
  Subspace W(F, n, std::move(rows));
  if (W.dim() != d) r.fail("rows are linearly dependent");
  return W;
}

}  // namespace fingeo
