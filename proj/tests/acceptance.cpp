// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "bicyclic/bicyclic.hpp"

using namespace bicyclic;

namespace {

int g_failures = 0;

void run(int number, const char* title, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  criterion %d threw: %s\n", number, e.what());
  }
  const auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("[%s] criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL",
              number, title, ms);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool oracle_equivalence() {
  for (long long k = 0; k <= 8; ++k)
    for (long long l = 0; l <= 8; ++l)
      for (long long m = 0; m <= 8; ++m)
        for (long long n = 0; n <= 8; ++n) {
          if (mul(bw(k, l), bw(m, n)) != mul_oracle(bw(k, l), bw(m, n))) {
            return false;
          }
        }
  return true;
}

bool associativity() {
  std::vector<Elem> elems;
  for (long long i = -4; i <= 4; ++i)
    for (long long j = -4; j <= 4; ++j) elems.push_back(cz(i, j));
  for (const Elem& x : elems)
    for (const Elem& y : elems)
      for (const Elem& z : elems) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
      }
  const auto window = compact_window(3);
  for (const CompactElem& x : window)
    for (const CompactElem& y : window)
      for (const CompactElem& z : window) {
        if (mul_compact(mul_compact(x, y), z) !=
            mul_compact(x, mul_compact(y, z))) {
          return false;
        }
      }
  return true;
}

bool solution_count_law() {
  const Family f = family_cplus();
  for (long long i = 0; i <= 30; ++i) {
    const auto s = solution_count(f, bw(i, i), bw(i, i + 1));
    if (s.count != static_cast<std::size_t>(i + 1)) return false;
    std::vector<Elem> expected;
    for (long long t = 0; t <= i; ++t) expected.push_back(bw(t, t + 1));
    if (s.solutions != expected) return false;
  }
  return true;
}

bool translation_closed_form() {
  for (long long p : {2LL, 3LL, 5LL})
    for (long long n = 0; n <= 3; ++n)
      for (long long i1 = 0; i1 <= 10; ++i1)
        for (long long j1 = 0; j1 <= 10; ++j1)
          for (long long i2 = 0; i2 <= 10; ++i2)
            for (long long j2 = 0; j2 <= 10; ++j2) {
              const Elem s = bw(i1, j1);
              const BasicNbhd u = nbhd_r(bw(i2, j2), p, n);
              const BasicNbhd tu = left_translate_nbhd(s, u);
              const auto members = nbhd_enumerate(u, 50);
              const auto image = nbhd_enumerate(tu, 50);
              for (std::size_t t = 0; t < members.size(); ++t) {
                if (mul(s, members[t]) != image[t]) return false;
              }
            }
  return true;
}

bool discontinuity_witnesses() {
  for (long long p : {2LL, 3LL})
    for (long long n = 0; n <= 3; ++n)
      for (long long m = 0; m <= 5; ++m)
        for (long long j1 = 0; j1 <= 7; ++j1)
          for (long long i2 = j1 + 1; i2 <= 8; ++i2) {
            const Elem x = bw(1, j1), y = bw(i2, 2);
            const auto w = left_discontinuity_witness(x, y, p, n, m);
            if (w.continuous) return false;
            const long long pn = checked_pow(p, n);
            const long long ceiling = (i2 - j1 + pn - 1) / pn + 1;
            if (w.witness_k > ceiling) return false;
            if (nbhd_contains(nbhd_r(mul(x, y), p, m), w.escaped)) return false;
          }
  return true;
}

bool discreteness_certificates() {
  const Family f = family_cpluskx(1, evens());
  const auto certs = certify(f, Box::square(0, 12));
  if (certs.empty()) return false;
  for (const auto& c : certs) {
    if (!c.complement.finite) return false;
    // brute-force the complement inside the candidate window
    const Elem e = c.idempotent;
    std::set<Elem> reached;
    const Box big{0, e.first + 16, 0, e.first + 16};
    for (const Elem& s : enumerate_window(f, big)) {
      reached.insert(mul(s, e));
    }
    std::vector<Elem> brute;
    for (const Elem& y : enumerate_window(f, c.complement.window)) {
      if (reached.count(y) == 0) brute.push_back(y);
    }
    if (brute != c.complement.elements) return false;
  }
  const Family fz = family_czpluskx(1, evens());
  const auto zcerts = certify(fz, Box::square(-6, 6));
  bool saw_negative_diagonal = false;
  for (const auto& c : zcerts) {
    if (is_idempotent(c.element) && c.element.first < 0) {
      saw_negative_diagonal = true;
      if (c.complement.finite) return false;
    }
  }
  return saw_negative_diagonal;
}

bool prop43_inclusions() {
  for (int case_no = 1; case_no <= 7; ++case_no) {
    for (long long a = 0; a <= 15; ++a) {
      for (long long p1 = 1; p1 <= 15; p1 += 7) {
        for (long long p2 = 1; p2 <= 15; p2 += 7) {
          Prop43Params q;
          q.n = a;
          q.m = a;
          q.i = -2;
          q.j = -2 + a;
          q.p1 = p1;
          q.p2 = p2;
          if (!prop43_check(case_no, q, 100).passed()) return false;
        }
      }
    }
  }
  return true;
}

bool density() { return density_check(50).passed(); }

bool counterexample_fidelity() {
  for (long long i0 = -5; i0 <= 5; ++i0) {
    const Elem x = cz(i0, i0 - 1);
    if (mul(x, x) != cz(i0 + 1, i0 - 1)) return false;
    const auto r = check_closure(family_ltilde(i0), Box::square(i0 - 6, i0 + 6));
    if (r.status != Status::Fail) return false;
    const auto& w = r.witnesses[0];
    if (w["x"]["i"] != i0 || w["x"]["j"] != i0 - 1) return false;
    if (w["y"] != w["x"]) return false;
    if (w["product"]["i"] != i0 + 1 || w["product"]["j"] != i0 - 1) return false;
  }
  return true;
}

bool classification() {
  const auto v1 = iso_classify(evens(), odds(), 100);
  if (v1.identical || v1.differ_index != 0) return false;
  IndexSet modified = evens();
  modified.prefix = {0, 2, 4, 6, 8, 11};
  modified.tail = IndexSet::Tail{12, 2};
  const auto v2 = iso_classify(evens(), modified, 100);
  if (v2.identical || v2.differ_index != 5) return false;
  return iso_classify(evens(), evens(), 100).identical &&
         iso_classify(modified, modified, 100).identical;
}

bool ex37() {
  for (long long p : {2LL, 3LL}) {
    if (!ex37_check(p, 3, Box::square(-8, 8)).passed()) return false;
  }
  return true;
}

bool bp_axioms() {
  for (long long p : {2LL, 3LL}) {
    for (Side side : {Side::R, Side::L}) {
      if (!bp_axioms_check(Domain::BOmega, p, side, Box::square(0, 12), 3)
               .passed()) {
        return false;
      }
      if (!bp_axioms_check(Domain::CZ, p, side, Box::square(-6, 6), 3)
               .passed()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "mul agrees with the rewriting oracle (coords <= 8, exhaustive)",
      oracle_equivalence);
  run(2, "associativity on CZ |coord| <= 4 and the compact window",
      associativity);
  run(3, "solution count (i,i) z = (i,i+1) equals i+1 with the exact set",
      solution_count_law);
  run(4, "closed-form neighborhood translation matches pointwise products",
      translation_closed_form);
  run(5, "left-discontinuity witness exists and respects the ceiling",
      discontinuity_witnesses);
  run(6, "finite certificates on C_+1^evens, infinite outcomes on C_Z^+(1,evens)",
      discreteness_certificates);
  run(7, "all seven continuity inclusions with parameters <= 15",
      prop43_inclusions);
  run(8, "explicit C_Z+ witnesses in every basic neighborhood, p <= 50",
      density);
  run(9, "counterexample product and closure failure witness shape",
      counterexample_fidelity);
  run(10, "classification separates index sets at the right depth",
      classification);
  run(11, "the S0 u S1 example is a topological semigroup", ex37);
  run(12, "neighborhood-base axioms on both sides", bp_axioms);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
