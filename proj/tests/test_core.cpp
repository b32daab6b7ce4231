#include <doctest.h>

#include <limits>
#include <set>

#include "bicyclic/core.hpp"

using namespace bicyclic;

TEST_CASE("three-case product") {
  CHECK(mul(bw(2, 5), bw(3, 7)) == bw(2, 9));
  CHECK(mul(bw(0, 0), bw(4, 6)) == bw(4, 6));
  CHECK(mul(bw(4, 6), bw(0, 0)) == bw(4, 6));
  // (i0, i0-1)^2 = (i0+1, i0-1)
  for (long long i0 = -5; i0 <= 5; ++i0) {
    const Elem x = cz(i0, i0 - 1);
    CHECK(mul(x, x) == cz(i0 + 1, i0 - 1));
  }
}

TEST_CASE("product rejects mixed domains") {
  CHECK_THROWS_AS(mul(bw(1, 2), cz(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(nat_leq(bw(1, 2), cz(1, 2)), std::invalid_argument);
}

TEST_CASE("BOmega factory rejects negative coordinates") {
  CHECK_THROWS_AS(bw(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bw(0, -2), std::invalid_argument);
  CHECK_NOTHROW(cz(-1, -2));
}

TEST_CASE("rewriting oracle") {
  CHECK(mul_oracle(bw(2, 5), bw(3, 7)) == bw(2, 9));
  CHECK(mul_oracle(bw(0, 0), bw(0, 0)) == bw(0, 0));
  CHECK(mul_oracle(bw(3, 1), bw(1, 4)) == bw(3, 4));
}

TEST_CASE("oracle equivalence on a window") {
  for (long long k = 0; k <= 6; ++k)
    for (long long l = 0; l <= 6; ++l)
      for (long long m = 0; m <= 6; ++m)
        for (long long n = 0; n <= 6; ++n)
          CHECK(mul(bw(k, l), bw(m, n)) == mul_oracle(bw(k, l), bw(m, n)));
}

TEST_CASE("associativity on a CZ window") {
  std::vector<Elem> elems;
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j) elems.push_back(cz(i, j));
  for (const Elem& x : elems)
    for (const Elem& y : elems)
      for (const Elem& z : elems)
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
}

TEST_CASE("idempotent criterion") {
  CHECK(is_idempotent(bw(4, 4)));
  CHECK_FALSE(is_idempotent(bw(4, 5)));
  CHECK(is_idempotent(cz(-3, -3)));
  for (long long i = -4; i <= 4; ++i)
    for (long long j = -4; j <= 4; ++j) {
      const Elem x = cz(i, j);
      CHECK(is_idempotent(x) == (mul(x, x) == x));
    }
}

TEST_CASE("inverse laws") {
  CHECK(inverse(bw(2, 5)) == bw(5, 2));
  CHECK(inverse(bw(3, 3)) == bw(3, 3));
  CHECK(inverse(cz(-1, 3)) == cz(3, -1));
  for (long long i = -4; i <= 4; ++i)
    for (long long j = -4; j <= 4; ++j) {
      const Elem x = cz(i, j);
      const Elem t = inverse(x);
      CHECK(mul(mul(x, t), x) == x);
      CHECK(mul(mul(t, x), t) == t);
    }
}

TEST_CASE("natural partial order formula") {
  CHECK(nat_leq(bw(5, 3), bw(2, 0)));
  CHECK(nat_leq(bw(5, 3), bw(5, 3)));
  CHECK_FALSE(nat_leq(bw(5, 3), bw(2, 1)));
}

TEST_CASE("order agrees with the idempotent characterization") {
  // x <= y iff x = e.y for some idempotent e, over a window large enough
  // to hold the witnessing idempotent (x.first, x.first).
  for (long long xi = 0; xi <= 5; ++xi)
    for (long long xj = 0; xj <= 5; ++xj)
      for (long long yi = 0; yi <= 5; ++yi)
        for (long long yj = 0; yj <= 5; ++yj) {
          const Elem x = bw(xi, xj), y = bw(yi, yj);
          bool witnessed = false;
          for (long long e = 0; e <= 10 && !witnessed; ++e) {
            witnessed = mul(bw(e, e), y) == x;
          }
          CHECK(nat_leq(x, y) == witnessed);
        }
}

TEST_CASE("up and down sets over windows") {
  auto as_set = [](const std::vector<Elem>& v) {
    return std::set<Elem>(v.begin(), v.end());
  };
  CHECK(as_set(up_set(cz(2, 3), Box::square(-1, 3))) ==
        std::set<Elem>{cz(2, 3), cz(1, 2), cz(0, 1), cz(-1, 0)});
  CHECK(as_set(up_set(bw(0, 0), Box::square(0, 2))) == std::set<Elem>{bw(0, 0)});
  CHECK(as_set(down_set(bw(0, 1), Box::square(0, 3))) ==
        std::set<Elem>{bw(0, 1), bw(1, 2), bw(2, 3)});
}

TEST_CASE("anti-isomorphism") {
  CHECK(anti_iso(bw(2, 5)) == bw(5, 2));
  CHECK(anti_iso(bw(4, 4)) == bw(4, 4));
  CHECK(anti_iso(mul(bw(2, 5), bw(3, 7))) ==
        mul(anti_iso(bw(3, 7)), anti_iso(bw(2, 5))));
  // involution + anti-homomorphism on a window
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j) {
      const Elem x = cz(i, j);
      CHECK(anti_iso(anti_iso(x)) == x);
      for (long long k = -3; k <= 3; ++k)
        for (long long l = -3; l <= 3; ++l) {
          const Elem y = cz(k, l);
          CHECK(anti_iso(mul(x, y)) == mul(anti_iso(y), anti_iso(x)));
        }
    }
}

TEST_CASE("checked arithmetic fails loudly") {
  const long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(mul(cz(big, 0), cz(1, 0)), std::overflow_error);
  CHECK_THROWS_AS(checked_pow(10, 40), std::overflow_error);
}
