#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic for the bicyclic monoid B_omega and the extended
// bicyclic semigroup C_Z.  Elements are pairs of integers with a domain
// tag; all operations are pure and overflow-checked.

namespace bicyclic {

// Fixed-width integers stand in for unbounded ones; every arithmetic step
// is checked and fails loudly on overflow.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in add");
  }
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in sub");
  }
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in mul");
  }
  return r;
}

inline long long checked_pow(long long base, long long exp) {
  if (exp < 0) {
    throw std::invalid_argument("negative exponent");
  }
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

enum class Domain { BOmega, CZ };

inline const char* domain_name(Domain d) {
  return d == Domain::BOmega ? "BOmega" : "CZ";
}

struct Elem {
  long long first = 0;
  long long second = 0;
  Domain domain = Domain::BOmega;

  friend bool operator==(const Elem&, const Elem&) = default;
  // Lexicographic on (first, second); comparisons are only meaningful
  // within one domain.
  friend auto operator<=>(const Elem& a, const Elem& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

// Validating factory: B_omega elements need nonnegative coordinates.
inline Elem elem(Domain d, long long i, long long j) {
  if (d == Domain::BOmega && (i < 0 || j < 0)) {
    throw std::invalid_argument("BOmega element needs nonnegative coordinates");
  }
  return Elem{i, j, d};
}

inline Elem bw(long long i, long long j) { return elem(Domain::BOmega, i, j); }
inline Elem cz(long long i, long long j) { return elem(Domain::CZ, i, j); }

inline void require_same_domain(const Elem& x, const Elem& y) {
  if (x.domain != y.domain) {
    throw std::invalid_argument("mixed domains");
  }
}

// The three-case product:
//   (k,l)(m,n) = (k-l+m, n)  if l < m
//                (k, n)      if l = m
//                (k, l-m+n)  if l > m
inline Elem mul(const Elem& x, const Elem& y) {
  require_same_domain(x, y);
  const long long k = x.first, l = x.second, m = y.first, n = y.second;
  if (l < m) {
    return Elem{checked_add(checked_sub(k, l), m), n, x.domain};
  }
  if (l == m) {
    return Elem{k, n, x.domain};
  }
  return Elem{k, checked_add(checked_sub(l, m), n), x.domain};
}

// Independent oracle for mul on B_omega: concatenate the words
// b^i a^j b^m a^n over {a,b} and rewrite "ab" -> empty until the normal
// form b^i a^j remains.  Each rewrite strictly shortens the word, so
// termination is immediate.
inline Elem mul_oracle(const Elem& x, const Elem& y) {
  if (x.domain != Domain::BOmega || y.domain != Domain::BOmega) {
    throw std::invalid_argument("mul_oracle is defined on BOmega only");
  }
  std::string w;
  w.append(static_cast<std::size_t>(x.first), 'b');
  w.append(static_cast<std::size_t>(x.second), 'a');
  w.append(static_cast<std::size_t>(y.first), 'b');
  w.append(static_cast<std::size_t>(y.second), 'a');
  bool changed = true;
  while (changed) {
    changed = false;
    auto pos = w.find("ab");
    if (pos != std::string::npos) {
      w.erase(pos, 2);
      changed = true;
    }
  }
  // Normal form must be b^i a^j.
  std::size_t i = 0;
  while (i < w.size() && w[i] == 'b') ++i;
  std::size_t j = i;
  while (j < w.size() && w[j] == 'a') ++j;
  if (j != w.size()) {
    throw std::logic_error("rewriting did not reach normal form");
  }
  return bw(static_cast<long long>(i), static_cast<long long>(w.size() - i));
}

inline bool is_idempotent(const Elem& x) { return x.first == x.second; }

// (i,j)^{-1} = (j,i); satisfies x x^{-1} x = x and x^{-1} x x^{-1} = x^{-1}.
inline Elem inverse(const Elem& x) {
  if (x.domain == Domain::BOmega) return bw(x.second, x.first);
  return cz(x.second, x.first);
}

// The anti-isomorphism AI: (i,j) -> (j,i), reversing products.
inline Elem anti_iso(const Elem& x) { return inverse(x); }

// Natural partial order: (k,l) <= (m,n) iff k-l = m-n and m <= k.
inline bool nat_leq(const Elem& x, const Elem& y) {
  require_same_domain(x, y);
  return checked_sub(x.first, x.second) == checked_sub(y.first, y.second) &&
         y.first <= x.first;
}

// Inclusive coordinate box; all set-valued operations are window-relative
// because the true sets are infinite.
struct Box {
  long long lo1 = 0;
  long long hi1 = -1;
  long long lo2 = 0;
  long long hi2 = -1;

  bool empty() const { return hi1 < lo1 || hi2 < lo2; }
  bool contains(const Elem& e) const {
    return lo1 <= e.first && e.first <= hi1 && lo2 <= e.second &&
           e.second <= hi2;
  }
  bool on_boundary(const Elem& e) const {
    return contains(e) && (e.first == lo1 || e.first == hi1 ||
                           e.second == lo2 || e.second == hi2);
  }

  static Box square(long long lo, long long hi) { return Box{lo, hi, lo, hi}; }
};

// All domain elements inside the window, lexicographic order.
inline std::vector<Elem> window_elems(Domain d, const Box& w) {
  std::vector<Elem> out;
  if (w.empty()) return out;
  const long long lo1 = d == Domain::BOmega ? std::max(0LL, w.lo1) : w.lo1;
  const long long lo2 = d == Domain::BOmega ? std::max(0LL, w.lo2) : w.lo2;
  for (long long i = lo1; i <= w.hi1; ++i) {
    for (long long j = lo2; j <= w.hi2; ++j) {
      out.push_back(Elem{i, j, d});
    }
  }
  return out;
}

inline std::vector<Elem> up_set(const Elem& x, const Box& window) {
  std::vector<Elem> out;
  for (const Elem& y : window_elems(x.domain, window)) {
    if (nat_leq(x, y)) out.push_back(y);
  }
  return out;
}

inline std::vector<Elem> down_set(const Elem& x, const Box& window) {
  std::vector<Elem> out;
  for (const Elem& y : window_elems(x.domain, window)) {
    if (nat_leq(y, x)) out.push_back(y);
  }
  return out;
}

}  // namespace bicyclic
