#include <doctest.h>

#include "bicyclic/compact.hpp"

using namespace bicyclic;

TEST_CASE("mixed multiplication rules") {
  CHECK(mul_compact(g1(2), cpoint(5, 6)) == cpoint(3, 6));
  CHECK(mul_compact(g1(0), cpoint(4, 7)) == cpoint(4, 7));
  CHECK(mul_compact(cpoint(3, 7), g0(2)) == g0(6));
  CHECK(mul_compact(cpoint(2, 5), g0(1)) == g0(4));
  CHECK(mul_compact(g1(3), g0(0)) == g0(3));
  CHECK(mul_compact(g1(2), g1(3)) == g1(5));
  CHECK(mul_compact(g0(2), g0(3)) == g0(5));
  CHECK(mul_compact(cpoint(1, 4), g1(2)) == cpoint(1, 6));
  CHECK(mul_compact(g0(1), cpoint(-2, 3)) == g0(6));
  CHECK(mul_compact(czero(), g1(5)) == czero());
  CHECK(mul_compact(cpoint(0, 0), czero()) == czero());
}

TEST_CASE("restriction to C agrees with the core product") {
  for (long long i = -3; i <= 3; ++i)
    for (long long j = i; j <= 3; ++j)
      for (long long k = -3; k <= 3; ++k)
        for (long long l = k; l <= 3; ++l) {
          const Elem p = mul(cz(i, j), cz(k, l));
          CHECK(mul_compact(cpoint(i, j), cpoint(k, l)) ==
                cpoint(p.first, p.second));
        }
}

TEST_CASE("closure and associativity on the generating window") {
  const auto window = compact_window(3);
  for (const CompactElem& x : window)
    for (const CompactElem& y : window) {
      CHECK_NOTHROW(mul_compact(x, y));  // invariant check is built in
      for (const CompactElem& z : window) {
        CHECK(mul_compact(mul_compact(x, y), z) ==
              mul_compact(x, mul_compact(y, z)));
      }
    }
}

TEST_CASE("invariant factories") {
  CHECK_THROWS_AS(g1(-1), std::invalid_argument);
  CHECK_THROWS_AS(g0(-2), std::invalid_argument);
  CHECK_THROWS_AS(cpoint(3, 2), std::invalid_argument);
}

TEST_CASE("basic neighborhoods of the compactification") {
  const CompactNbhd w3 = nbhd_compact(czero(), 3);
  CHECK(nbhd_compact_contains(w3, g1(3)));
  CHECK(nbhd_compact_contains(w3, cpoint(0, 3)));
  CHECK(nbhd_compact_contains(w3, g0(3)));
  CHECK(nbhd_compact_contains(w3, czero()));
  CHECK_FALSE(nbhd_compact_contains(w3, g1(2)));
  CHECK_FALSE(nbhd_compact_contains(w3, cpoint(0, 2)));

  const CompactNbhd s = nbhd_compact(cpoint(2, 5), 4);
  CHECK(nbhd_compact_contains(s, cpoint(2, 5)));
  CHECK_FALSE(nbhd_compact_contains(s, cpoint(2, 6)));

  const CompactNbhd v = nbhd_compact(g0(1), 2);
  CHECK(nbhd_compact_contains(v, cpoint(2, 3)));
  CHECK_FALSE(nbhd_compact_contains(v, cpoint(1, 2)));

  const CompactNbhd u = nbhd_compact(g1(0), 1);
  CHECK(nbhd_compact_contains(u, cpoint(-1, -1)));

  CHECK_THROWS_AS(nbhd_compact(czero(), 0), std::invalid_argument);
}

TEST_CASE("neighborhood enumeration respects the membership predicate") {
  for (const CompactNbhd& u :
       {nbhd_compact(czero(), 2), nbhd_compact(g1(3), 2),
        nbhd_compact(g0(2), 4), nbhd_compact(cpoint(1, 2), 1)}) {
    for (const CompactElem& e : nbhd_compact_enumerate(u, 60)) {
      CHECK(nbhd_compact_contains(u, e));
    }
  }
}

TEST_CASE("the seven continuity inclusions") {
  Prop43Params q;
  q.n = 0;
  q.p1 = 1;
  q.p2 = 1;
  CHECK(prop43_check(1, q, 100).passed());
  q.i = 0;
  q.j = 2;
  q.p1 = 3;
  CHECK(prop43_check(3, q, 100).passed());
  q.p1 = 2;
  q.p2 = 3;
  CHECK(prop43_check(7, q, 100).passed());

  for (int case_no = 1; case_no <= 7; ++case_no) {
    Prop43Params params;
    for (long long a : {0LL, 2LL, 7LL}) {
      for (long long p1 : {1LL, 4LL}) {
        for (long long p2 : {1LL, 5LL}) {
          params.n = a;
          params.m = a;
          params.i = -1;
          params.j = -1 + a;
          params.p1 = p1;
          params.p2 = p2;
          CAPTURE(case_no);
          CHECK(prop43_check(case_no, params, 100).passed());
        }
      }
    }
  }
  CHECK_THROWS_AS(prop43_check(8, Prop43Params{}, 10), std::invalid_argument);
}

TEST_CASE("I0 is a two-sided ideal") {
  CHECK(mul_compact(cpoint(2, 5), g0(1)) == g0(4));
  CHECK(mul_compact(g1(3), g0(0)) == g0(3));
  CHECK(ideal_check(4).passed());
}

TEST_CASE("Rees quotient") {
  CHECK(rees_quotient(g0(4)) == czero());
  CHECK(rees_quotient(czero()) == czero());
  CHECK(rees_quotient(cpoint(2, 5)) == cpoint(2, 5));
  CHECK(rees_quotient(g1(3)) == g1(3));
  CHECK(rees_quotient(mul_compact(cpoint(3, 7), g0(2))) ==
        mul_compact(rees_quotient(cpoint(3, 7)), rees_quotient(g0(2))));

  // surjective homomorphism onto the quotient structure
  const auto window = compact_window(3);
  for (const CompactElem& x : window)
    for (const CompactElem& y : window) {
      const CompactElem lhs = rees_quotient(mul_compact(x, y));
      const CompactElem rhs =
          rees_quotient(mul_compact(rees_quotient(x), rees_quotient(y)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("density of C_Z+ in every basic neighborhood") {
  const auto r = density_check(10);
  CHECK(r.passed());
  CHECK(nbhd_compact_contains(nbhd_compact(czero(), 5), cpoint(0, 5)));
  CHECK(nbhd_compact_contains(nbhd_compact(g1(0), 1), cpoint(-1, -1)));
}
