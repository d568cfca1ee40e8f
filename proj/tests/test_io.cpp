#include <gtest/gtest.h>

#include <sstream>

#include "fingeo/blocking.hpp"
#include "fingeo/io.hpp"

using namespace fingeo;

TEST(Io, PointSetRoundTrip) {
  for (int q : {4, 7, 9}) {
    const Plane P(field_of_order(q));
    const PointSet B = q == 7 ? three_lines(P) : baer_subplane(P);
    std::stringstream ss;
    write_point_set(ss, P, B);
    const auto back = read_point_set(ss);
    EXPECT_EQ(back.field.q(), P.field().q());
    EXPECT_EQ(back.field.irr(), P.field().irr());
    EXPECT_EQ(back.points, B);
    // analysis of the reread set is identical
    EXPECT_EQ(analyze(Plane(back.field), back.points).spectrum, analyze(P, B).spectrum);
  }
}

TEST(Io, PointSetAcceptsCommentsAndScaling) {
  std::istringstream in("# header next\nq 5 irr 0,1\n\n2:4:2\n1:2:1\n0:0:3\n");
  const auto f = read_point_set(in);
  EXPECT_EQ(f.points.size(), 2);
}

TEST(Io, PointSetErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_point_set(in);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("q 5 irr 0,1\n1:2:1\n1:2\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("q 5 irr 0,1\n0:0:0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("q 5 irr 0,1\n\n1:9:1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("# only a comment\nq 6 irr 0,1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("q 9 irr 1,1,1\n").find("line 1"), std::string::npos);  // x^2+x+1 = (x-1)^2 mod 3
  EXPECT_NE(message("").find("line 0"), std::string::npos);
}

TEST(Io, SubspaceRoundTrip) {
  const Field F = field_of_order(3);
  const Subspace W(F, 6, {{Elem{1}, Elem{2}, Elem{0}, Elem{0}, Elem{1}, Elem{0}}, {Elem{0}, Elem{1}, Elem{1}, Elem{2}, Elem{0}, Elem{1}}});
  std::stringstream ss;
  write_subspace(ss, W);
  EXPECT_EQ(read_subspace(ss, F), W);
  std::istringstream dep("dim 2 ambient 3\n1,0,0\n2,0,0\n");
  EXPECT_THROW(read_subspace(dep, F), Error);
  std::istringstream shortrow("dim 1 ambient 3\n1,0\n");
  try {
    read_subspace(shortrow, F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}
