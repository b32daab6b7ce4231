#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/report.hpp"

// Symbolic basic neighborhoods U_n^r / U_n^l, the neighborhood-base axiom
// checks, closed-form translation of neighborhoods, continuity verification
// and discontinuity witness search.

namespace bicyclic {

enum class Side { R, L };

inline const char* side_name(Side s) { return s == Side::R ? "r" : "l"; }

// U_n^r(i,j) = {(i, j + p^n k) : k in omega}; the L side is the AI image
// of the R-side neighborhood of the AI'd base.
struct BasicNbhd {
  Elem base;
  long long p = 2;
  long long n = 0;
  Side side = Side::R;

  long long step() const { return checked_pow(p, n); }
};

inline BasicNbhd nbhd_r(const Elem& base, long long p, long long n) {
  return BasicNbhd{base, p, n, Side::R};
}

inline BasicNbhd nbhd_l(const Elem& base, long long p, long long n) {
  return BasicNbhd{base, p, n, Side::L};
}

inline json nbhd_to_json(const BasicNbhd& u) {
  return json{{"base", elem_to_json(u.base)},
              {"p", u.p},
              {"n", u.n},
              {"side", side_name(u.side)}};
}

inline bool nbhd_contains(const BasicNbhd& u, const Elem& y) {
  if (u.base.domain != y.domain) return false;
  const long long step = u.step();
  if (u.side == Side::R) {
    if (y.first != u.base.first) return false;
    const long long off = checked_sub(y.second, u.base.second);
    return off >= 0 && off % step == 0;
  }
  if (y.second != u.base.second) return false;
  const long long off = checked_sub(y.first, u.base.first);
  return off >= 0 && off % step == 0;
}

// First m members in increasing k order.
inline std::vector<Elem> nbhd_enumerate(const BasicNbhd& u, std::size_t m) {
  std::vector<Elem> out;
  out.reserve(m);
  const long long step = u.step();
  for (std::size_t k = 0; k < m; ++k) {
    const long long off = checked_mul(step, static_cast<long long>(k));
    if (u.side == Side::R) {
      out.push_back(Elem{u.base.first, checked_add(u.base.second, off),
                         u.base.domain});
    } else {
      out.push_back(Elem{checked_add(u.base.first, off), u.base.second,
                         u.base.domain});
    }
  }
  return out;
}

// Neighborhood-base axioms on a finite window:
//   (i)   every base point lies in each of its basic neighborhoods;
//   (ii)  two neighborhoods at one point contain a common smaller one;
//   (iii) each neighborhood is a neighborhood of its window points;
//   (iv)  distinct window points have disjoint basic neighborhoods.
inline CertReport bp_axioms_check(Domain d, long long p, Side side,
                                  const Box& window, long long n_max) {
  CertReport r("bp-axioms");
  r.params = {{"domain", domain_name(d)}, {"p", p},
              {"side", side_name(side)}, {"window", box_to_json(window)},
              {"n_max", n_max}};
  const auto points = window_elems(d, window);
  const std::size_t sample = 50;

  auto fail = [&](const char* axiom, const json& detail) {
    r.status = Status::Fail;
    r.witnesses.push_back({{"axiom", axiom}, {"detail", detail}});
  };

  for (const Elem& x : points) {
    for (long long n = 0; n <= n_max; ++n) {
      const BasicNbhd u{x, p, n, side};
      // (i)
      if (!nbhd_contains(u, x)) {
        fail("bp1", nbhd_to_json(u));
        return r;
      }
      // (ii): U_{max(n, n_max)} sits inside both U_n and U_{n_max}.
      const BasicNbhd big{x, p, std::max(n, n_max), side};
      for (const Elem& y : nbhd_enumerate(big, sample)) {
        if (!nbhd_contains(u, y)) {
          fail("bp2", elem_to_json(y));
          return r;
        }
      }
      // (iii): for y in U_n(x), U_n(y) is contained in U_n(x).
      for (const Elem& y : nbhd_enumerate(u, 8)) {
        const BasicNbhd uy{y, p, n, side};
        for (const Elem& z : nbhd_enumerate(uy, sample)) {
          if (!nbhd_contains(u, z)) {
            fail("bp3", elem_to_json(z));
            return r;
          }
        }
      }
    }
  }
  // (iv): Hausdorff separation.  Distinct fixed coordinates give disjoint
  // sets outright; equal fixed coordinates are separated once p^n exceeds
  // the offset, since the residues mod p^n differ.
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Elem& x = points[a];
      const Elem& y = points[b];
      const long long fx = side == Side::R ? x.first : x.second;
      const long long fy = side == Side::R ? y.first : y.second;
      long long n = 0;
      if (fx == fy) {
        const long long vx = side == Side::R ? x.second : x.first;
        const long long vy = side == Side::R ? y.second : y.first;
        const long long gap = vx > vy ? vx - vy : vy - vx;
        long long step = 1;
        while (step <= gap) {
          step = checked_mul(step, p);
          ++n;
        }
        if (((vx % step) + step) % step == ((vy % step) + step) % step) {
          fail("bp4-residue", json{{"x", elem_to_json(x)}, {"y", elem_to_json(y)}});
          return r;
        }
      }
      const BasicNbhd ux{x, p, n, side};
      const BasicNbhd uy{y, p, n, side};
      for (const Elem& z : nbhd_enumerate(ux, 20)) {
        if (nbhd_contains(uy, z)) {
          fail("bp4", elem_to_json(z));
          return r;
        }
      }
    }
  }
  r.status = Status::Pass;
  return r;
}

// Closed-form left translation s.U_n^r(x) = U_n^r(s.x): the first
// coordinate of every member of U is the same, so a single case of the
// product formula applies uniformly and the offset lattice is preserved.
inline BasicNbhd left_translate_nbhd(const Elem& s, const BasicNbhd& u) {
  if (u.side != Side::R) {
    throw std::invalid_argument("left_translate_nbhd expects a side-R neighborhood");
  }
  require_same_domain(s, u.base);
  return BasicNbhd{mul(s, u.base), u.p, u.n, Side::R};
}

struct ContinuityVerdict {
  bool continuous = true;
  long long exponent = 0;        // witnessing exponent when continuous
  long long witness_k = 0;       // escaping k when discontinuous
  Elem escaped;                  // the escaping product

  json to_json() const {
    json j{{"continuous", continuous}};
    if (continuous) {
      j["m"] = exponent;
    } else {
      j["witness_k"] = witness_k;
      j["escaped"] = elem_to_json(escaped);
    }
    return j;
  }
};

// Right continuity of translation by s at x: the closed form gives
// s.U_n^r(x) = U_n^r(s.x) exactly; verified pointwise on a member prefix.
inline ContinuityVerdict right_continuity_check(const Elem& s, const Elem& x,
                                                long long p, long long n) {
  const BasicNbhd u = nbhd_r(x, p, n);
  const BasicNbhd tu = left_translate_nbhd(s, u);
  const auto members = nbhd_enumerate(u, 50);
  auto translated = nbhd_enumerate(tu, 50);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (mul(s, members[i]) != translated[i]) {
      throw std::logic_error("closed-form translation mismatch");
    }
  }
  return ContinuityVerdict{true, n};
}

inline long long witness_search_cap() {
  if (const char* env = std::getenv("BICYCLIC_WITNESS_CAP")) {
    return std::atoll(env);
  }
  return 1000000;
}

// Searches the smallest k such that the k-th member of U_n^r(x) multiplied
// by y escapes U_m^r(x.y).  Requires x.second < y.first, which guarantees
// an escape once x.second + p^n k exceeds y.first.
inline ContinuityVerdict left_discontinuity_witness(const Elem& x,
                                                    const Elem& y, long long p,
                                                    long long n, long long m) {
  require_same_domain(x, y);
  if (!(x.second < y.first)) {
    throw std::invalid_argument("no escape guaranteed");
  }
  const long long step = checked_pow(p, n);
  const BasicNbhd target = nbhd_r(mul(x, y), p, m);
  const long long cap = witness_search_cap();
  for (long long k = 0; k <= cap; ++k) {
    const Elem u{x.first, checked_add(x.second, checked_mul(step, k)), x.domain};
    const Elem prod = mul(u, y);
    if (!nbhd_contains(target, prod)) {
      return ContinuityVerdict{false, 0, k, prod};
    }
  }
  throw std::runtime_error("witness search cap exceeded");
}

// Checks that the basic neighborhood of x lies inside the family, sampling
// a prefix of its members; the first escaping member is the witness.
inline CertReport induced_nbhd_check(const Family& f, const Elem& x,
                                     long long p, long long n) {
  CertReport r("induced-nbhd");
  r.params = {{"x", elem_to_json(x)}, {"p", p}, {"n", n}};
  if (!contains(f, x)) {
    throw std::invalid_argument("base point is not a member of the family");
  }
  const BasicNbhd u = nbhd_r(x, p, n);
  for (const Elem& y : nbhd_enumerate(u, 200)) {
    if (!contains(f, y)) {
      r.status = Status::Fail;
      r.witnesses.push_back(elem_to_json(y));
      return r;
    }
  }
  r.status = Status::Pass;
  return r;
}

// The topological-semigroup checks for the S0 u S1 example: S1 is an
// ideal fixed elementwise by S0, translation fixes the neighborhoods
// U_n(0,k) and products of neighborhoods land in U_n(0,k+l).
inline CertReport ex37_check(long long p, long long n_max, const Box& window) {
  CertReport r("ex37");
  r.params = {{"p", p}, {"n_max", n_max}, {"window", box_to_json(window)}};
  const Family f = family_ex37();

  auto fail = [&](const char* what, const json& detail) {
    r.status = Status::Fail;
    r.witnesses.push_back({{"clause", what}, {"detail", detail}});
  };

  // (a) ideal identities on the window.
  for (const Elem& s : enumerate_window(f, window)) {
    for (const Elem& t : enumerate_window(f, window)) {
      const Elem prod = mul(s, t);
      if (!contains(f, prod)) {
        fail("closure", elem_to_json(prod));
        return r;
      }
      if (is_idempotent(s) && s.first <= 0 && t.first == 0 && t.second >= 0 &&
          prod != t) {
        fail("ideal-identity", elem_to_json(prod));
        return r;
      }
      if (prod != mul(t, s)) {
        fail("commutativity", elem_to_json(prod));
        return r;
      }
    }
  }
  for (long long n = 0; n <= n_max; ++n) {
    const long long step = checked_pow(p, n);
    for (long long k = 0; k <= window.hi2; ++k) {
      // (b) (-i,-i).U_n(0,k) = U_n(0,k), membership both ways on a prefix.
      const BasicNbhd uk = nbhd_r(cz(0, k), p, n);
      for (long long i = 1; i <= 4; ++i) {
        for (const Elem& u : nbhd_enumerate(uk, 20)) {
          if (mul(cz(-i, -i), u) != u) {
            fail("s0-translation", elem_to_json(u));
            return r;
          }
        }
      }
      // (c) U_n(0,k).U_n(0,l) subset of U_n(0,k+l): symbolically the
      // offsets add, (0,k+p^n s).(0,l+p^n t) = (0, k+l+p^n(s+t)); checked
      // on sampled members.
      for (long long l = 0; l <= window.hi2; ++l) {
        const BasicNbhd target = nbhd_r(cz(0, k + l), p, n);
        for (long long s = 0; s < 5; ++s) {
          for (long long t = 0; t < 5; ++t) {
            const Elem prod =
                mul(cz(0, k + step * s), cz(0, l + step * t));
            if (!nbhd_contains(target, prod)) {
              fail("nbhd-product", elem_to_json(prod));
              return r;
            }
          }
        }
      }
    }
  }
  r.status = Status::Pass;
  return r;
}

}  // namespace bicyclic
