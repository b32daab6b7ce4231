#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/report.hpp"

// Symbolic descriptions of the subsemigroup families with exact membership,
// window enumeration, closure checks and the classification invariants.

namespace bicyclic {

// A subset X of omega given by a finite strictly increasing prefix plus an
// optional arithmetic tail.  Membership and the i-th element x_i are total
// as long as the tail exists or the index stays inside the prefix.
struct IndexSet {
  struct Tail {
    long long start = 0;
    long long step = 1;
  };

  std::vector<long long> prefix;
  std::optional<Tail> tail;

  void validate() const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < 0) {
        throw std::invalid_argument("IndexSet entries must be nonnegative");
      }
      if (i > 0 && prefix[i] <= prefix[i - 1]) {
        throw std::invalid_argument("IndexSet prefix must be strictly increasing");
      }
    }
    if (tail) {
      if (tail->step <= 0) {
        throw std::invalid_argument("IndexSet tail step must be positive");
      }
      if (tail->start < 0) {
        throw std::invalid_argument("IndexSet tail start must be nonnegative");
      }
      if (!prefix.empty() && tail->start <= prefix.back()) {
        throw std::invalid_argument("IndexSet tail start must exceed the prefix");
      }
    }
  }

  bool defined_at(std::size_t i) const {
    return i < prefix.size() || tail.has_value();
  }

  // x_i
  long long at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (!tail) {
      throw std::out_of_range("index beyond finite IndexSet");
    }
    return checked_add(tail->start,
                       checked_mul(tail->step,
                                   static_cast<long long>(i - prefix.size())));
  }

  bool contains_value(long long v) const {
    if (std::binary_search(prefix.begin(), prefix.end(), v)) return true;
    if (!tail) return false;
    return v >= tail->start && (v - tail->start) % tail->step == 0;
  }

  // Least member strictly above v, if representable.
  std::optional<long long> least_above(long long v) const {
    for (long long x : prefix) {
      if (x > v) return x;
    }
    if (!tail) return std::nullopt;
    if (v < tail->start) return tail->start;
    const long long offset = v - tail->start;
    return tail->start + tail->step * (offset / tail->step + 1);
  }
};

inline IndexSet evens() { return IndexSet{{0}, IndexSet::Tail{2, 2}}; }
inline IndexSet odds() { return IndexSet{{1}, IndexSet::Tail{3, 2}}; }

// First 16 squares, no tail.
inline IndexSet squares16() {
  IndexSet s;
  for (long long i = 0; i < 16; ++i) s.prefix.push_back(i * i);
  return s;
}

enum class FamilyKind {
  CPlus,        // {(i,j) in BOmega : i <= j}
  CMinus,       // {(i,j) in BOmega : i >= j}
  CPlusK,       // {(i,i+s) : s >= k}
  CPlusKX,      // CPlusK(k) plus the diagonal {(x,x) : x in X}
  CMinusKX,     // AI image of CPlusKX
  CZPlus,       // {(i,j) in CZ : i <= j}
  CZMinus,      // {(i,j) in CZ : i >= j}
  CZPlusShift,  // C_Z^+[k] = {(s,t) : s >= k, s <= t}
  CZPlusKX,     // {(-i,-i) : i in omega} u {(x,x) : x in X} u {(m,n) in C_Z^+[0] : m >= k}
  Ex37,         // {(-i,-i) : i >= 1} u {(0,k) : k >= 0}
  LTilde,       // {(i0, i0+i) : i in Z}; test-only pseudo-family, not closed
};

struct Family {
  FamilyKind kind = FamilyKind::CPlus;
  long long k = 0;  // level for *K* kinds, shift for CZPlusShift, i0 for LTilde
  std::optional<IndexSet> x;

  Domain domain() const {
    switch (kind) {
      case FamilyKind::CPlus:
      case FamilyKind::CMinus:
      case FamilyKind::CPlusK:
      case FamilyKind::CPlusKX:
      case FamilyKind::CMinusKX:
        return Domain::BOmega;
      default:
        return Domain::CZ;
    }
  }

  const IndexSet& index_set() const {
    if (!x) throw std::logic_error("family has no index set");
    return *x;
  }

  void validate() const {
    switch (kind) {
      case FamilyKind::CPlusK:
        if (k < 0) throw std::invalid_argument("CPlusK needs k >= 0");
        break;
      case FamilyKind::CPlusKX:
      case FamilyKind::CMinusKX:
      case FamilyKind::CZPlusKX:
        if (k < 1) throw std::invalid_argument("X-families need k >= 1");
        if (!x) throw std::invalid_argument("X-families need an index set");
        x->validate();
        break;
      default:
        break;
    }
  }
};

inline Family family_cplus() { return Family{FamilyKind::CPlus}; }
inline Family family_cminus() { return Family{FamilyKind::CMinus}; }
inline Family family_cplusk(long long k) { return Family{FamilyKind::CPlusK, k}; }
inline Family family_cpluskx(long long k, IndexSet x) {
  return Family{FamilyKind::CPlusKX, k, std::move(x)};
}
inline Family family_cminuskx(long long k, IndexSet x) {
  return Family{FamilyKind::CMinusKX, k, std::move(x)};
}
inline Family family_czplus() { return Family{FamilyKind::CZPlus}; }
inline Family family_czminus() { return Family{FamilyKind::CZMinus}; }
inline Family family_czshift(long long k) {
  return Family{FamilyKind::CZPlusShift, k};
}
inline Family family_czpluskx(long long k, IndexSet x) {
  return Family{FamilyKind::CZPlusKX, k, std::move(x)};
}
inline Family family_ex37() { return Family{FamilyKind::Ex37}; }
inline Family family_ltilde(long long i0) {
  return Family{FamilyKind::LTilde, i0};
}

inline bool contains(const Family& f, const Elem& e) {
  if (e.domain != f.domain()) {
    throw std::invalid_argument("element domain incompatible with family");
  }
  const long long i = e.first, j = e.second;
  switch (f.kind) {
    case FamilyKind::CPlus:
    case FamilyKind::CZPlus:
      return i <= j;
    case FamilyKind::CMinus:
    case FamilyKind::CZMinus:
      return i >= j;
    case FamilyKind::CPlusK:
      return i <= j && j - i >= f.k;
    case FamilyKind::CPlusKX:
      return (i <= j && j - i >= f.k) ||
             (i == j && f.index_set().contains_value(i));
    case FamilyKind::CMinusKX:
      return (j <= i && i - j >= f.k) ||
             (i == j && f.index_set().contains_value(i));
    case FamilyKind::CZPlusShift:
      return i >= f.k && i <= j;
    case FamilyKind::CZPlusKX:
      if (i == j && i <= 0) return true;
      if (i == j && i >= 0 && f.index_set().contains_value(i)) return true;
      return i >= f.k && i <= j;
    case FamilyKind::Ex37:
      return (i == j && i <= 0) || (i == 0 && j >= 0);
    case FamilyKind::LTilde:
      return i == f.k;
  }
  return false;
}

// All members of f inside the window, lexicographically ordered.
inline std::vector<Elem> enumerate_window(const Family& f, const Box& window) {
  std::vector<Elem> out;
  for (const Elem& e : window_elems(f.domain(), window)) {
    if (contains(f, e)) out.push_back(e);
  }
  return out;
}

// Checks closure of f under multiplication over all window pairs; returns
// a witness pair on failure.  Squares are scanned first, from the top of
// the window down, so a failing diagonal pair is reported in its simplest
// form before mixed pairs are considered.
inline CertReport check_closure(const Family& f, const Box& window) {
  CertReport r("closure");
  r.params["window"] = box_to_json(window);
  const auto members = enumerate_window(f, window);
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    const Elem p = mul(*it, *it);
    if (!contains(f, p)) {
      r.status = Status::Fail;
      r.witnesses.push_back({{"x", elem_to_json(*it)},
                             {"y", elem_to_json(*it)},
                             {"product", elem_to_json(p)}});
      return r;
    }
  }
  for (const Elem& a : members) {
    for (const Elem& b : members) {
      const Elem p = mul(a, b);
      if (!contains(f, p)) {
        r.status = Status::Fail;
        r.witnesses.push_back({{"x", elem_to_json(a)},
                               {"y", elem_to_json(b)},
                               {"product", elem_to_json(p)}});
        return r;
      }
    }
  }
  r.status = Status::Pass;
  return r;
}

// The matched pair (x_i, y_i) realizing the unique order isomorphism of
// (X, max) onto (Y, max).
inline std::pair<long long, long long> iota(const IndexSet& x,
                                            const IndexSet& y, std::size_t i) {
  return {x.at(i), y.at(i)};
}

// The shift embedding of C_+(a,b) onto C_Z^+[k]: (i,j) -> (i+k, j+k).
inline Elem h_k(const Elem& e, long long k) {
  if (e.domain != Domain::BOmega || !contains(family_cplus(), e)) {
    throw std::invalid_argument("h_k requires an element of C_+(a,b)");
  }
  return cz(checked_add(e.first, k), checked_add(e.second, k));
}

struct SolutionSet {
  std::vector<Elem> solutions;
  std::size_t count = 0;
};

// Default search bound for mul(e, z) = target.  The case analysis of the
// product forces z.second <= target.second and z.first <= e.first +
// target.second; one extra unit of slack keeps sound solutions off the
// boundary so the too-small-bound check only fires for unsound bounds.
inline Box default_solution_bound(const Family& f, const Elem& e,
                                  const Elem& target) {
  Box b;
  b.hi1 = checked_add(checked_add(e.first, std::max(0LL, target.second)), 1);
  b.hi2 = checked_add(std::max(target.second, e.second), 1);
  if (f.domain() == Domain::BOmega) {
    b.lo1 = 0;
    b.lo2 = 0;
  } else {
    const long long lo =
        std::min({0LL, e.first, target.first, target.second}) - 16;
    b.lo1 = lo;
    b.lo2 = lo;
  }
  return b;
}

// All z in f within bound with mul(e, z) = target.  An edge of the bound
// that is not the intrinsic floor of an omega-based family is "soft": a
// solution sitting on a soft edge means the bound may cut off further
// solutions, so we refuse with an error instead of undercounting.
inline SolutionSet solution_count(const Family& f, const Elem& e,
                                  const Elem& target, const Box& bound) {
  if (!is_idempotent(e) || !contains(f, e)) {
    throw std::invalid_argument("solution_count needs an idempotent of the family");
  }
  if (!contains(f, target)) {
    throw std::invalid_argument("solution_count target must lie in the family");
  }
  SolutionSet out;
  const bool hard_floor = f.domain() == Domain::BOmega;
  for (const Elem& z : enumerate_window(f, bound)) {
    if (mul(e, z) == target) {
      const bool on_soft_edge =
          z.first == bound.hi1 || z.second == bound.hi2 ||
          (!(hard_floor && bound.lo1 <= 0) && z.first == bound.lo1) ||
          (!(hard_floor && bound.lo2 <= 0) && z.second == bound.lo2);
      if (on_soft_edge) {
        throw std::runtime_error(
            "solution on the bound's boundary; enlarge the bound");
      }
      out.solutions.push_back(z);
    }
  }
  out.count = out.solutions.size();
  return out;
}

inline SolutionSet solution_count(const Family& f, const Elem& e,
                                  const Elem& target) {
  return solution_count(f, e, target, default_solution_bound(f, e, target));
}

struct ClassifyVerdict {
  bool identical = true;
  std::size_t differ_index = 0;
  long long lhs = 0;
  long long rhs = 0;
};

// Compares x_i with y_i for i < depth; the first differing index decides
// non-isomorphism of the level-1 X-families up to the inspected depth.
inline ClassifyVerdict iso_classify(const IndexSet& x, const IndexSet& y,
                                    std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i) {
    const long long xi = x.at(i);
    const long long yi = y.at(i);
    if (xi != yi) {
      return ClassifyVerdict{false, i, xi, yi};
    }
  }
  return ClassifyVerdict{};
}

}  // namespace bicyclic
