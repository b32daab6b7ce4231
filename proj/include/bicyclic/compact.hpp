#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/report.hpp"

// The compactification S+_O = G1+ u C_Z+ u G0+ u {O}: its multiplication,
// basic neighborhoods, the seven continuity inclusions, the ideal I0 with
// its Rees quotient, and the density of C_Z+.

namespace bicyclic {

struct CompactElem {
  enum class Tag { G1, C, G0, Zero };

  Tag tag = Tag::Zero;
  long long a = 0;  // G1/G0 payload, or the first C coordinate
  long long b = 0;  // the second C coordinate

  friend bool operator==(const CompactElem&, const CompactElem&) = default;
  friend auto operator<=>(const CompactElem&, const CompactElem&) = default;
};

inline CompactElem g1(long long n) {
  if (n < 0) throw std::invalid_argument("G1+ payload must be nonnegative");
  return CompactElem{CompactElem::Tag::G1, n, 0};
}

inline CompactElem g0(long long m) {
  if (m < 0) throw std::invalid_argument("G0+ payload must be nonnegative");
  return CompactElem{CompactElem::Tag::G0, m, 0};
}

inline CompactElem cpoint(long long i, long long j) {
  if (i > j) throw std::invalid_argument("C_Z+ point needs i <= j");
  return CompactElem{CompactElem::Tag::C, i, j};
}

inline CompactElem czero() { return CompactElem{CompactElem::Tag::Zero}; }

inline json compact_to_json(const CompactElem& e) {
  switch (e.tag) {
    case CompactElem::Tag::G1:
      return json{{"tag", "g1"}, {"n", e.a}};
    case CompactElem::Tag::C:
      return json{{"tag", "c"}, {"i", e.a}, {"j", e.b}};
    case CompactElem::Tag::G0:
      return json{{"tag", "g0"}, {"m", e.a}};
    case CompactElem::Tag::Zero:
      return json{{"tag", "zero"}};
  }
  return json();
}

namespace detail {

inline void check_compact_invariants(const CompactElem& e) {
  switch (e.tag) {
    case CompactElem::Tag::G1:
    case CompactElem::Tag::G0:
      if (e.a < 0) throw std::logic_error("closure bug: negative group payload");
      break;
    case CompactElem::Tag::C:
      if (e.a > e.b) throw std::logic_error("closure bug: C point with i > j");
      break;
    case CompactElem::Tag::Zero:
      break;
  }
}

}  // namespace detail

// Group addition inside G1+/G0+, the extended bicyclic product inside C,
// the six mixed rules, and the absorbing zero.
inline CompactElem mul_compact(const CompactElem& x, const CompactElem& y) {
  using Tag = CompactElem::Tag;
  CompactElem r;
  if (x.tag == Tag::Zero || y.tag == Tag::Zero) {
    return czero();
  }
  if (x.tag == Tag::G1 && y.tag == Tag::G1) {
    r = CompactElem{Tag::G1, checked_add(x.a, y.a), 0};
  } else if (x.tag == Tag::G0 && y.tag == Tag::G0) {
    r = CompactElem{Tag::G0, checked_add(x.a, y.a), 0};
  } else if (x.tag == Tag::C && y.tag == Tag::C) {
    const Elem p = mul(cz(x.a, x.b), cz(y.a, y.b));
    r = CompactElem{Tag::C, p.first, p.second};
  } else if (x.tag == Tag::G1 && y.tag == Tag::C) {
    // (n)^1 . (i,j) = (-n+i, j)
    r = CompactElem{Tag::C, checked_sub(y.a, x.a), y.b};
  } else if (x.tag == Tag::C && y.tag == Tag::G1) {
    // (i,j) . (n)^1 = (i, j+n)
    r = CompactElem{Tag::C, x.a, checked_add(x.b, y.a)};
  } else if (x.tag == Tag::G1 && y.tag == Tag::G0) {
    r = CompactElem{Tag::G0, checked_add(x.a, y.a), 0};
  } else if (x.tag == Tag::G0 && y.tag == Tag::G1) {
    r = CompactElem{Tag::G0, checked_add(x.a, y.a), 0};
  } else if (x.tag == Tag::G0 && y.tag == Tag::C) {
    // (m)^0 . (i,j) = (m+j-i)^0
    r = CompactElem{Tag::G0, checked_add(x.a, checked_sub(y.b, y.a)), 0};
  } else {
    // (i,j) . (m)^0 = (m+j-i)^0
    r = CompactElem{Tag::G0, checked_add(y.a, checked_sub(x.b, x.a)), 0};
  }
  detail::check_compact_invariants(r);
  return r;
}

// Basic neighborhoods of S+_O: C points are isolated; G1+/G0+ points get
// the tail sets U_p/V_p; the zero gets W_p.
struct CompactNbhd {
  enum class Kind { SingletonC, U, V, W };

  Kind kind = Kind::W;
  long long p = 1;
  CompactElem center;
};

inline CompactNbhd nbhd_compact(const CompactElem& center, long long p) {
  if (p < 1) throw std::invalid_argument("neighborhood parameter needs p >= 1");
  using Tag = CompactElem::Tag;
  switch (center.tag) {
    case Tag::C:
      return CompactNbhd{CompactNbhd::Kind::SingletonC, p, center};
    case Tag::G1:
      return CompactNbhd{CompactNbhd::Kind::U, p, center};
    case Tag::G0:
      return CompactNbhd{CompactNbhd::Kind::V, p, center};
    case Tag::Zero:
      return CompactNbhd{CompactNbhd::Kind::W, p, center};
  }
  throw std::logic_error("unreachable");
}

inline bool nbhd_compact_contains(const CompactNbhd& u, const CompactElem& e) {
  using Tag = CompactElem::Tag;
  switch (u.kind) {
    case CompactNbhd::Kind::SingletonC:
      return e == u.center;
    case CompactNbhd::Kind::U: {
      // {(n)^1} u {(-q, -q+n) : q >= p}
      if (e == u.center) return true;
      if (e.tag != Tag::C) return false;
      const long long q = -e.a;
      return q >= u.p && e.b == checked_add(e.a, u.center.a);
    }
    case CompactNbhd::Kind::V: {
      // {(m)^0} u {(q, q+m) : q >= p}   (payloads in S+ are nonnegative)
      if (e == u.center) return true;
      if (e.tag != Tag::C) return false;
      return e.a >= u.p && e.b == checked_add(e.a, u.center.a);
    }
    case CompactNbhd::Kind::W:
      switch (e.tag) {
        case Tag::Zero: return true;
        case Tag::G1: return e.a >= u.p;
        case Tag::G0: return e.a >= u.p;
        case Tag::C: return checked_sub(e.b, e.a) >= u.p;
      }
  }
  return false;
}

// Deterministic member sampling, increasing clause parameter first.  The
// W sets interleave a few C representatives per gap value.
inline std::vector<CompactElem> nbhd_compact_enumerate(const CompactNbhd& u,
                                                       std::size_t count) {
  std::vector<CompactElem> out;
  out.reserve(count);
  auto push = [&](const CompactElem& e) {
    if (out.size() < count) out.push_back(e);
  };
  switch (u.kind) {
    case CompactNbhd::Kind::SingletonC:
      push(u.center);
      break;
    case CompactNbhd::Kind::U: {
      push(u.center);
      for (long long q = u.p; out.size() < count; ++q) {
        push(cpoint(-q, -q + u.center.a));
      }
      break;
    }
    case CompactNbhd::Kind::V: {
      push(u.center);
      for (long long q = u.p; out.size() < count; ++q) {
        push(cpoint(q, q + u.center.a));
      }
      break;
    }
    case CompactNbhd::Kind::W: {
      push(czero());
      for (long long t = u.p; out.size() < count; ++t) {
        push(g1(t));
        push(g0(t));
        for (long long i = -2; i <= 2 && out.size() < count; ++i) {
          push(cpoint(i, i + t));
        }
      }
      break;
    }
  }
  return out;
}

struct Prop43Params {
  long long n = 0;   // G1 payload for cases 1-2
  long long m = 0;   // G0 payload for cases 5-6
  long long i = 0;   // C point for cases 3-4
  long long j = 0;
  long long p1 = 1;  // neighborhood parameters
  long long p2 = 1;
};

namespace detail {

struct InclusionSides {
  CompactNbhd lhs1;
  CompactNbhd lhs2;
  CompactNbhd rhs;  // always a W set
};

inline InclusionSides prop43_sides(int case_no, const Prop43Params& q) {
  const CompactNbhd w1 = nbhd_compact(czero(), q.p1);
  const CompactNbhd w2 = nbhd_compact(czero(), q.p2);
  switch (case_no) {
    case 1:  // U_{p1}((n)^1) . W_{p2} subset of W_{n+p2}
      return {nbhd_compact(g1(q.n), q.p1), w2, nbhd_compact(czero(), q.n + q.p2)};
    case 2:  // W_{p1} . U_{p2}((n)^1) subset of W_{p1+n}
      return {w1, nbhd_compact(g1(q.n), q.p2), nbhd_compact(czero(), q.p1 + q.n)};
    case 3:  // (i,j) . W_{p1} subset of W_{p1+j-i}
      return {CompactNbhd{CompactNbhd::Kind::SingletonC, 1, cpoint(q.i, q.j)},
              w1, nbhd_compact(czero(), q.p1 + q.j - q.i)};
    case 4:  // W_{p1} . (i,j) subset of W_{p1+j-i}
      return {w1,
              CompactNbhd{CompactNbhd::Kind::SingletonC, 1, cpoint(q.i, q.j)},
              nbhd_compact(czero(), q.p1 + q.j - q.i)};
    case 5:  // V_{p1}((m)^0) . W_{p2} subset of W_{m+p2}
      return {nbhd_compact(g0(q.m), q.p1), w2, nbhd_compact(czero(), q.m + q.p2)};
    case 6:  // W_{p1} . V_{p2}((m)^0) subset of W_{p1+m}
      return {w1, nbhd_compact(g0(q.m), q.p2), nbhd_compact(czero(), q.p1 + q.m)};
    case 7:  // W_{p1} . W_{p2} subset of W_{p1+p2}
      return {w1, w2, nbhd_compact(czero(), q.p1 + q.p2)};
    default:
      throw std::invalid_argument("prop43 case must be 1..7");
  }
}

// Clause representatives of a neighborhood: minimal parameter values plus
// a few increments for each membership clause.  The inclusions are
// monotone in each clause parameter, so escapes show up at the bottom.
inline std::vector<CompactElem> clause_samples(const CompactNbhd& u) {
  std::vector<CompactElem> out;
  switch (u.kind) {
    case CompactNbhd::Kind::SingletonC:
      out.push_back(u.center);
      break;
    case CompactNbhd::Kind::U:
      out.push_back(u.center);
      for (long long d = 0; d <= 3; ++d) {
        out.push_back(cpoint(-(u.p + d), -(u.p + d) + u.center.a));
      }
      break;
    case CompactNbhd::Kind::V:
      out.push_back(u.center);
      for (long long d = 0; d <= 3; ++d) {
        out.push_back(cpoint(u.p + d, u.p + d + u.center.a));
      }
      break;
    case CompactNbhd::Kind::W:
      out.push_back(czero());
      for (long long d = 0; d <= 3; ++d) {
        out.push_back(g1(u.p + d));
        out.push_back(g0(u.p + d));
        for (long long i = -2; i <= 2; ++i) {
          out.push_back(cpoint(i, i + u.p + d));
        }
      }
      break;
  }
  return out;
}

}  // namespace detail

// One of the seven continuity inclusions: clause-level checks over minimal
// representatives plus enumerated sampling of the product set.
inline CertReport prop43_check(int case_no, const Prop43Params& params,
                               std::size_t sample_size) {
  CertReport r("prop43");
  r.params = {{"case", case_no}, {"n", params.n},   {"m", params.m},
              {"i", params.i},   {"j", params.j},   {"p1", params.p1},
              {"p2", params.p2}, {"sample_size", sample_size}};
  const auto sides = detail::prop43_sides(case_no, params);

  // (a) clause-level representatives
  for (const CompactElem& x : detail::clause_samples(sides.lhs1)) {
    for (const CompactElem& y : detail::clause_samples(sides.lhs2)) {
      const CompactElem prod = mul_compact(x, y);
      if (!nbhd_compact_contains(sides.rhs, prod)) {
        r.status = Status::Fail;
        r.witnesses.push_back({{"x", compact_to_json(x)},
                               {"y", compact_to_json(y)},
                               {"product", compact_to_json(prod)}});
        return r;
      }
    }
  }
  // (b) enumerated sampling of the product set
  std::size_t side = static_cast<std::size_t>(std::max(
      2.0, std::ceil(std::sqrt(static_cast<double>(sample_size)))));
  const auto xs = nbhd_compact_enumerate(sides.lhs1, side);
  const auto ys = nbhd_compact_enumerate(sides.lhs2, side);
  std::size_t checked = 0;
  for (const CompactElem& x : xs) {
    for (const CompactElem& y : ys) {
      if (checked++ >= sample_size) break;
      const CompactElem prod = mul_compact(x, y);
      if (!nbhd_compact_contains(sides.rhs, prod)) {
        r.status = Status::Fail;
        r.witnesses.push_back({{"x", compact_to_json(x)},
                               {"y", compact_to_json(y)},
                               {"product", compact_to_json(prod)}});
        return r;
      }
    }
  }
  r.status = Status::Pass;
  return r;
}

inline bool in_ideal(const CompactElem& e) {
  return e.tag == CompactElem::Tag::G0 || e.tag == CompactElem::Tag::Zero;
}

// Generating window of S+: group payloads up to the bound, C coordinates
// inside [-bound, bound] with i <= j, plus the zero.
inline std::vector<CompactElem> compact_window(long long bound) {
  std::vector<CompactElem> out;
  for (long long n = 0; n <= bound; ++n) out.push_back(g1(n));
  for (long long i = -bound; i <= bound; ++i) {
    for (long long j = i; j <= bound; ++j) out.push_back(cpoint(i, j));
  }
  for (long long m = 0; m <= bound; ++m) out.push_back(g0(m));
  out.push_back(czero());
  return out;
}

// I0 = G0+ u {O} is a two-sided ideal.
inline CertReport ideal_check(long long window_bound) {
  CertReport r("ideal");
  r.params = {{"window_bound", window_bound}};
  const auto all = compact_window(window_bound);
  for (const CompactElem& s : all) {
    for (const CompactElem& t : all) {
      if (!in_ideal(t)) continue;
      for (const CompactElem& prod : {mul_compact(s, t), mul_compact(t, s)}) {
        if (!in_ideal(prod)) {
          r.status = Status::Fail;
          r.witnesses.push_back({{"s", compact_to_json(s)},
                                 {"t", compact_to_json(t)},
                                 {"product", compact_to_json(prod)}});
          return r;
        }
      }
    }
  }
  r.status = Status::Pass;
  return r;
}

// Rees quotient by I0: every ideal member collapses to the zero.
inline CompactElem rees_quotient(const CompactElem& x) {
  return in_ideal(x) ? czero() : x;
}

// For every center type and every p <= p_max, an explicit C_Z+ member of
// the basic neighborhood, re-verified through the membership predicate.
inline CertReport density_check(long long p_max) {
  CertReport r("density");
  r.params = {{"p_max", p_max}};
  auto verify = [&](const CompactNbhd& u, const CompactElem& witness) {
    const bool ok = witness.tag == CompactElem::Tag::C &&
                    witness.a <= witness.b && nbhd_compact_contains(u, witness);
    if (!ok) {
      r.status = Status::Fail;
      r.witnesses.push_back({{"center", compact_to_json(u.center)},
                             {"p", u.p},
                             {"witness", compact_to_json(witness)}});
    }
    return ok;
  };
  for (long long p = 1; p <= p_max; ++p) {
    for (long long n : {0LL, 1LL, 2LL, p}) {
      if (!verify(nbhd_compact(g1(n), p), cpoint(-p, -p + n))) return r;
      if (!verify(nbhd_compact(g0(n), p), cpoint(p, p + n))) return r;
    }
    if (!verify(nbhd_compact(czero(), p), cpoint(0, p))) return r;
    if (!verify(nbhd_compact(cpoint(2, 5), p), cpoint(2, 5))) return r;
  }
  r.status = Status::Pass;
  return r;
}

}  // namespace bicyclic
