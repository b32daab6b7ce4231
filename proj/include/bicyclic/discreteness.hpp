#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/report.hpp"

// Discreteness machinery: isolating idempotents, the finite complements
// S \ S.e, and per-element discreteness certificates.

namespace bicyclic {

struct DiscretenessCertificate {
  Elem element;
  Elem idempotent;
  std::vector<Elem> complement;
  Box complement_bound;
};

// Outcome of a complement computation.  When the complement is provably
// infinite (the family has members with second coordinate unbounded below
// the idempotent's diagonal) only a window sample is listed.
struct ComplementResult {
  bool finite = true;
  std::vector<Elem> elements;
  Box window;
};

namespace detail {

// Least first coordinate a non-diagonal family member can have, when it
// exists.  Governs the preimage search interval for right translation.
inline std::optional<long long> family_min_first(const Family& f) {
  switch (f.kind) {
    case FamilyKind::CPlus:
    case FamilyKind::CMinus:
    case FamilyKind::CPlusK:
    case FamilyKind::CPlusKX:
    case FamilyKind::CMinusKX:
      return 0;
    case FamilyKind::CZPlusShift:
      return f.k;
    case FamilyKind::CZPlusKX:
      return f.k;
    case FamilyKind::Ex37:
      return 0;
    default:
      return std::nullopt;
  }
}

// Whether the set {y in F : y.second < q} is infinite for every diagonal
// level q, which makes every complement infinite.
inline bool second_unbounded_below(const Family& f) {
  switch (f.kind) {
    case FamilyKind::CZPlus:
    case FamilyKind::CZMinus:
    case FamilyKind::CZPlusKX:
    case FamilyKind::Ex37:
    case FamilyKind::LTilde:
      return true;
    case FamilyKind::CMinus:
    case FamilyKind::CMinusKX:
      // second < q is bounded, but first is not: still infinite.
      return true;
    default:
      return false;
  }
}

}  // namespace detail

// The least idempotent (q,q) of f with q > s.second.  Guarantees
// s not in F.(q,q) since right translation by (q,q) never lowers the
// second coordinate below q without a preimage.
inline Elem find_isolating_idempotent(const Family& f, const Elem& s) {
  if (!contains(f, s)) {
    throw std::invalid_argument("element is not a member of the family");
  }
  const Domain d = f.domain();
  const long long above = s.second;
  switch (f.kind) {
    case FamilyKind::CPlus:
    case FamilyKind::CMinus:
    case FamilyKind::CZPlus:
    case FamilyKind::CZMinus:
      return elem(d, above + 1, above + 1);
    case FamilyKind::CZPlusShift:
      return cz(std::max(above + 1, f.k), std::max(above + 1, f.k));
    case FamilyKind::CPlusKX:
    case FamilyKind::CMinusKX: {
      const auto q = f.index_set().least_above(above);
      if (!q) {
        throw std::runtime_error(
            "no idempotent above the element within the representable range");
      }
      return bw(*q, *q);
    }
    case FamilyKind::CZPlusKX: {
      if (above + 1 <= 0) return cz(above + 1, above + 1);
      long long q = std::max(f.k, above + 1);
      if (const auto qx = f.index_set().least_above(above); qx && *qx < q) {
        q = *qx;
      }
      return cz(q, q);
    }
    case FamilyKind::Ex37: {
      if (above + 1 <= 0) return cz(above + 1, above + 1);
      throw std::runtime_error("Ex37 has no idempotent above this element");
    }
    case FamilyKind::CPlusK:
    case FamilyKind::LTilde:
      throw std::invalid_argument("family has no usable band above the element");
  }
  throw std::logic_error("unreachable");
}

// Decides y in F.e for an idempotent e = (q,q) by the case analysis of
// right translation: second > q is fixed pointwise, second < q is never
// reached, and second = q requires a preimage (y.first - q + t, t) with
// t <= q inside the family.
inline bool in_principal_right_set(const Family& f, const Elem& e,
                                   const Elem& y) {
  if (!is_idempotent(e) || !contains(f, e) || !contains(f, y)) {
    throw std::invalid_argument("in_principal_right_set preconditions violated");
  }
  const long long q = e.first;
  if (y == e) return true;
  if (y.second > q) return true;
  if (y.second < q) return false;
  // y.second == q: search (y.first - q + t, t) for t in [t_lo, q].
  long long t_lo;
  if (const auto mf = detail::family_min_first(f)) {
    t_lo = std::max(*mf, checked_add(checked_sub(q, y.first), *mf));
    if (f.domain() == Domain::BOmega) t_lo = std::max(t_lo, 0LL);
  } else {
    // Members with arbitrarily small first coordinate: for the plain
    // CZ half-planes the preimage (y.first, q) always works.
    t_lo = q;
  }
  for (long long t = q; t >= t_lo; --t) {
    const Elem s{checked_add(checked_sub(y.first, q), t), t, f.domain()};
    if (s.domain == Domain::BOmega && (s.first < 0 || s.second < 0)) continue;
    if (contains(f, s)) return true;
  }
  return false;
}

// The complement F \ F.e, exactly when it is finite; otherwise a typed
// infinite outcome with a window sample near the diagonal of e.
inline ComplementResult complement(const Family& f, const Elem& e) {
  if (!is_idempotent(e) || !contains(f, e)) {
    throw std::invalid_argument("complement needs an idempotent of the family");
  }
  const long long q = e.first;
  ComplementResult out;
  if (detail::second_unbounded_below(f)) {
    out.finite = false;
    out.window = Box::square(q - 8, q);
    for (const Elem& y : enumerate_window(f, out.window)) {
      if (!in_principal_right_set(f, e, y)) out.elements.push_back(y);
    }
    return out;
  }
  // Finite case: every complement member has second <= q, and the family
  // floor bounds both coordinates below.
  long long lo = 0;
  if (f.kind == FamilyKind::CZPlusShift) lo = f.k;
  out.window = Box{lo, q, lo, q};
  for (const Elem& y : enumerate_window(f, out.window)) {
    if (!in_principal_right_set(f, e, y)) out.elements.push_back(y);
  }
  return out;
}

struct CertifyOutcome {
  Elem element;
  Elem idempotent;
  ComplementResult complement;
};

// Per-element certificates over a window, sorted by element.  Finite
// complements are the checkable hypothesis for discreteness;
// infinite outcomes are reported as such.
inline std::vector<CertifyOutcome> certify(const Family& f, const Box& window) {
  std::vector<CertifyOutcome> out;
  for (const Elem& s : enumerate_window(f, window)) {
    const Elem e = find_isolating_idempotent(f, s);
    out.push_back(CertifyOutcome{s, e, complement(f, e)});
  }
  return out;
}

inline json certificate_to_json(const CertifyOutcome& c) {
  return json{{"element", elem_to_json(c.element)},
              {"idempotent", elem_to_json(c.idempotent)},
              {"complement", elems_to_json(c.complement.elements)},
              {"finite", c.complement.finite}};
}

// Verifies within the window that the solution set of
// (s,t).(n,n) = (n-j+i, n) equals both the parametric family
// {(n-j+i-p, n-p) : p in omega} and the up-set of (n-j+i, n) in F.
inline CertReport upset_equation_check(const Family& f, long long n,
                                       long long i, long long j,
                                       const Box& window) {
  CertReport r("upset-equation");
  r.params = {{"n", n}, {"i", i}, {"j", j}, {"window", box_to_json(window)}};
  const Elem idem = elem(f.domain(), n, n);
  const Elem src = elem(f.domain(), i, j);
  if (!contains(f, idem) || !is_idempotent(idem) || !contains(f, src) ||
      !(j < n)) {
    throw std::invalid_argument("upset_equation_check preconditions violated");
  }
  const Elem target = mul(src, idem);  // (n-j+i, n)
  std::set<Elem> by_equation;
  for (const Elem& z : enumerate_window(f, window)) {
    if (mul(z, idem) == target) by_equation.insert(z);
  }
  std::set<Elem> by_parametric;
  for (const Elem& z : enumerate_window(f, window)) {
    // z = (n-j+i-p, n-p) for some p >= 0
    const long long p = checked_sub(n, z.second);
    if (p >= 0 && z.first == checked_sub(target.first, p)) {
      by_parametric.insert(z);
    }
  }
  std::set<Elem> by_order;
  for (const Elem& z : enumerate_window(f, window)) {
    if (nat_leq(target, z)) by_order.insert(z);
  }
  if (by_equation == by_parametric && by_equation == by_order) {
    r.status = Status::Pass;
  } else {
    r.status = Status::Fail;
    for (const auto& s : {by_equation, by_parametric, by_order}) {
      json arr = json::array();
      for (const Elem& z : s) arr.push_back(elem_to_json(z));
      r.witnesses.push_back(arr);
    }
  }
  return r;
}

}  // namespace bicyclic
