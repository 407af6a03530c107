#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spintree/exact.hpp"

using namespace spintree::exact;

TEST_CASE("doubles convert exactly") {
  CHECK(rat(0.5) == Rat(1, 2));
  CHECK(rat(0.25) == Rat(1, 4));
  CHECK(rat(3.0) == Rat(3));
  // 0.1 is not 1/10 in binary; the conversion must preserve the actual double.
  CHECK(static_cast<double>(rat(0.1)) == 0.1);
  CHECK(rat(0.1) != Rat(1, 10));
}

TEST_CASE("rank: hand-checked matrices") {
  CHECK(rank({}) == 0);
  CHECK(rank({{Rat(0), Rat(0)}}) == 0);
  CHECK(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(5)}}) == 2);
  // 3x4 with rank 2: row3 = row1 + row2
  CHECK(rank({{Rat(1), Rat(0), Rat(2), Rat(-1)},
              {Rat(0), Rat(1), Rat(1), Rat(1)},
              {Rat(1), Rat(1), Rat(3), Rat(0)}}) == 2);
  // fractions: [1/2, 1/3; 1/4, 1/6] is singular (row2 = row1/2)
  CHECK(rank({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 6)}}) == 1);
}

TEST_CASE("determinant: hand-checked values") {
  CHECK(determinant({{Rat(3)}}) == Rat(3));
  CHECK(determinant({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
  // the 4-chain difference matrix rows (-1,0,0),(0,0,-1),(0,-1,1): det = +1
  CHECK(determinant({{Rat(-1), Rat(0), Rat(0)},
                     {Rat(0), Rat(0), Rat(-1)},
                     {Rat(0), Rat(-1), Rat(1)}}) == Rat(1));
  CHECK(determinant({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 6)}}) == Rat(0));
}

TEST_CASE("nullspace: solutions verified by substitution") {
  // x + y + z = 0, x - z = 0 -> one free var; solution (1, -2, 1)
  RatMatrix m = {{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(-1)}};
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rat s(0);
    for (int i = 0; i < 3; ++i) s += row[i] * ns[0][i];
    CHECK(s == 0);
  }
  // canonical: free coordinate is 1
  CHECK(ns[0][2] == Rat(1));
  CHECK(ns[0][0] == Rat(1));
  CHECK(ns[0][1] == Rat(-2));

  // zero matrix: full space
  auto full = nullspace({{Rat(0), Rat(0), Rat(0)}}, 3);
  CHECK(full.size() == 3);

  // full-rank square: trivial nullspace
  auto none = nullspace({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, 2);
  CHECK(none.empty());

  // rank + nullity = cols on random-ish fraction matrices
  RatMatrix big = {{Rat(1, 2), Rat(2), Rat(-1), Rat(0), Rat(3)},
                   {Rat(0), Rat(1, 3), Rat(1), Rat(1), Rat(0)},
                   {Rat(1), Rat(4, 3) + Rat(4), Rat(0), Rat(2), Rat(6)}};
  int r = rank(big);
  auto nsb = nullspace(big, 5);
  CHECK(r + static_cast<int>(nsb.size()) == 5);
  for (const auto& x : nsb)
    for (const auto& row : big) {
      Rat s(0);
      for (int i = 0; i < 5; ++i) s += row[i] * x[i];
      CHECK(s == 0);
    }
}

TEST_CASE("in_span") {
  RatMatrix basis = {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(in_span(basis, {Rat(2), Rat(3), Rat(5)}));   // 2*r1 + 3*r2
  CHECK(!in_span(basis, {Rat(0), Rat(0), Rat(1)}));
  CHECK(in_span(basis, {Rat(0), Rat(0), Rat(0)}));
}
