// Command-line front end: dispatches each checker and emits deterministic
// text or JSON reports.  Exit codes: 0 pass, 1 check failed, 2 usage error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "bicyclic/bicyclic.hpp"

using namespace bicyclic;

namespace {

enum class Format { Text, Json };

struct Ctx {
  std::string domain = "cz";
  std::string format = "text";
  int exit_code = 0;

  Domain dom() const {
    if (domain == "bomega") return Domain::BOmega;
    if (domain == "cz") return Domain::CZ;
    throw CLI::ValidationError("--domain must be bomega or cz");
  }
  Format fmt() const {
    if (format == "text") return Format::Text;
    if (format == "json") return Format::Json;
    throw CLI::ValidationError("--format must be text or json");
  }
};

void emit_elem(const Ctx& ctx, const Elem& e) {
  if (ctx.fmt() == Format::Json) {
    std::printf("%s\n", elem_to_json(e).dump(2).c_str());
  } else {
    std::printf("(%lld,%lld)\n", e.first, e.second);
  }
}

void emit_elems(const Ctx& ctx, const std::vector<Elem>& es) {
  if (ctx.fmt() == Format::Json) {
    std::printf("%s\n", elems_to_json(es).dump(2).c_str());
  } else {
    for (const Elem& e : es) std::printf("(%lld,%lld)\n", e.first, e.second);
  }
}

// Reports: exit 1 unless the check passed.
void emit_report(Ctx& ctx, const CertReport& r) {
  if (ctx.fmt() == Format::Json) {
    std::printf("%s\n", r.to_json().dump(2).c_str());
  } else {
    std::printf("%s: %s\n", r.check_name.c_str(), status_name(r.status));
    for (const auto& w : r.witnesses) {
      std::printf("  witness: %s\n", w.dump().c_str());
    }
  }
  if (!r.passed()) ctx.exit_code = 1;
}

void emit_bool(Ctx& ctx, const char* what, bool value) {
  if (ctx.fmt() == Format::Json) {
    std::printf("%s\n", json{{"check", what}, {"value", value}}.dump(2).c_str());
  } else {
    std::printf("%s: %s\n", what, value ? "true" : "false");
  }
  if (!value) ctx.exit_code = 1;
}

long long require_prime(long long p) {
  if (!is_prime(p)) throw CLI::ValidationError("-p must be prime");
  return p;
}

CompactElem parse_compact(const std::string& s) {
  if (s == "zero") return czero();
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("compact element: g1:n | c:i,j | g0:m | zero");
  }
  const std::string tag = s.substr(0, colon), payload = s.substr(colon + 1);
  if (tag == "g1") return g1(std::stoll(payload));
  if (tag == "g0") return g0(std::stoll(payload));
  if (tag == "c") {
    const Elem e = parse_elem(Domain::CZ, payload);
    return cpoint(e.first, e.second);
  }
  throw CLI::ValidationError("unknown compact element tag: " + tag);
}

void emit_compact(const Ctx& ctx, const CompactElem& e) {
  std::printf("%s\n", compact_to_json(e).dump(ctx.fmt() == Format::Json ? 2 : -1)
                          .c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic, subsemigroup families, neighborhood-base "
               "topologies, and the compactification of the bicyclic monoid "
               "and the extended bicyclic semigroup"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  app.add_option("--domain", ctx.domain, "bomega | cz")->capture_default_str();
  app.add_option("--format", ctx.format, "text | json")->capture_default_str();

  std::string xs, ys, fam, window = "-8..8", target, base, center = "zero";
  std::string xset = "evens", yset = "odds", side = "r";
  long long p = 2, n = 0, m = 0, k = 0, depth = 100, limit = 20;
  long long p1 = 1, p2 = 1, qi = 0, qj = 0, p_max = 10, bound = 4;
  long long samples = 100;
  int case_no = 1;

  // ---- elementwise operations ----
  auto* c_mul = app.add_subcommand("mul", "product of two elements");
  c_mul->add_option("-x", xs)->required();
  c_mul->add_option("-y", ys)->required();
  c_mul->callback([&] {
    emit_elem(ctx, mul(parse_elem(ctx.dom(), xs), parse_elem(ctx.dom(), ys)));
  });

  auto* c_inv = app.add_subcommand("inverse", "the unique inverse (j,i)");
  c_inv->add_option("-x", xs)->required();
  c_inv->callback([&] { emit_elem(ctx, inverse(parse_elem(ctx.dom(), xs))); });

  auto* c_ord = app.add_subcommand("order", "natural partial order x <= y");
  c_ord->add_option("-x", xs)->required();
  c_ord->add_option("-y", ys)->required();
  c_ord->callback([&] {
    emit_bool(ctx, "order",
              nat_leq(parse_elem(ctx.dom(), xs), parse_elem(ctx.dom(), ys)));
  });

  auto* c_up = app.add_subcommand(
      "upset", "up-set of x in a window; with --family, the equation check");
  c_up->add_option("-x", xs)->required();
  c_up->add_option("--window", window);
  c_up->add_option("--family", fam);
  c_up->add_option("-n", n, "diagonal level for the equation check");
  c_up->callback([&] {
    if (fam.empty()) {
      emit_elems(ctx, up_set(parse_elem(ctx.dom(), xs), parse_window(window)));
    } else {
      const Family f = parse_family(fam);
      const Elem x = parse_elem(f.domain(), xs);
      emit_report(ctx, upset_equation_check(f, n, x.first, x.second,
                                            parse_window(window)));
    }
  });

  // ---- families ----
  auto* c_fam = app.add_subcommand("family", "parametric subsemigroup families");
  c_fam->require_subcommand(1);

  auto* f_con = c_fam->add_subcommand("contains", "membership test");
  f_con->add_option("--family", fam)->required();
  f_con->add_option("-x", xs)->required();
  f_con->callback([&] {
    const Family f = parse_family(fam);
    emit_bool(ctx, "contains", contains(f, parse_elem(f.domain(), xs)));
  });

  auto* f_enum = c_fam->add_subcommand("enumerate", "members in a window");
  f_enum->add_option("--family", fam)->required();
  f_enum->add_option("--window", window);
  f_enum->callback([&] {
    emit_elems(ctx, enumerate_window(parse_family(fam), parse_window(window)));
  });

  auto* f_clo = c_fam->add_subcommand("closure", "closure under the product");
  f_clo->add_option("--family", fam)->required();
  f_clo->add_option("--window", window);
  f_clo->callback([&] {
    emit_report(ctx, check_closure(parse_family(fam), parse_window(window)));
  });

  auto* f_sol = c_fam->add_subcommand(
      "solcount", "solutions z of x.z = target inside the family");
  f_sol->add_option("--family", fam)->required();
  f_sol->add_option("-x", xs)->required();
  f_sol->add_option("--target", target)->required();
  f_sol->callback([&] {
    const Family f = parse_family(fam);
    const auto s = solution_count(f, parse_elem(f.domain(), xs),
                                  parse_elem(f.domain(), target));
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n", json{{"count", s.count},
                               {"solutions", elems_to_json(s.solutions)}}
                              .dump(2)
                              .c_str());
    } else {
      std::printf("count: %zu\n", s.count);
      for (const Elem& e : s.solutions)
        std::printf("(%lld,%lld)\n", e.first, e.second);
    }
  });

  auto* f_cls = c_fam->add_subcommand(
      "classify", "isomorphism invariant of two index sets");
  f_cls->add_option("--x-set", xset)->required();
  f_cls->add_option("--y-set", yset)->required();
  f_cls->add_option("--depth", depth)->capture_default_str();
  f_cls->callback([&] {
    auto read_set = [](const std::string& s) {
      return ingest_indexset(s.starts_with('{') ? json::parse(s) : json(s));
    };
    const auto v = iso_classify(read_set(xset), read_set(yset), depth);
    if (ctx.fmt() == Format::Json) {
      json out{{"identical", v.identical}};
      if (!v.identical) out["differ_index"] = v.differ_index;
      std::printf("%s\n", out.dump(2).c_str());
    } else if (v.identical) {
      std::printf("identical to depth %lld\n", depth);
    } else {
      std::printf("differ at index %zu\n",
                  static_cast<std::size_t>(v.differ_index));
    }
  });

  // ---- topology ----
  auto* c_topo = app.add_subcommand("topo", "neighborhood-base topologies");
  c_topo->require_subcommand(1);

  auto* t_tr = c_topo->add_subcommand("translate",
                                      "closed-form left translation s.U");
  t_tr->add_option("-s", ys)->required();
  t_tr->add_option("-x", xs, "neighborhood base point")->required();
  t_tr->add_option("-p", p)->required();
  t_tr->add_option("-n", n);
  t_tr->callback([&] {
    require_prime(p);
    const BasicNbhd u = left_translate_nbhd(
        parse_elem(ctx.dom(), ys), nbhd_r(parse_elem(ctx.dom(), xs), p, n));
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n", nbhd_to_json(u).dump(2).c_str());
    } else {
      std::printf("U_%lld^r(%lld,%lld) with p=%lld\n", u.n, u.base.first,
                  u.base.second, u.p);
    }
  });

  auto* t_r = c_topo->add_subcommand("right", "right continuity at x");
  t_r->add_option("-s", ys)->required();
  t_r->add_option("-x", xs)->required();
  t_r->add_option("-p", p)->required();
  t_r->add_option("-n", n);
  t_r->callback([&] {
    require_prime(p);
    const auto v = right_continuity_check(parse_elem(ctx.dom(), ys),
                                          parse_elem(ctx.dom(), xs), p, n);
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n", v.to_json().dump(2).c_str());
    } else {
      std::printf("continuous with exponent %lld\n", v.exponent);
    }
    if (!v.continuous) ctx.exit_code = 1;
  });

  auto* t_lw = c_topo->add_subcommand(
      "left-witness", "smallest escaping member for left translation");
  t_lw->add_option("-x", xs)->required();
  t_lw->add_option("-y", ys)->required();
  t_lw->add_option("-p", p)->required();
  t_lw->add_option("-n", n);
  t_lw->add_option("-m", m);
  t_lw->callback([&] {
    require_prime(p);
    const auto v = left_discontinuity_witness(parse_elem(ctx.dom(), xs),
                                              parse_elem(ctx.dom(), ys), p, n,
                                              m);
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n", v.to_json().dump(2).c_str());
    } else {
      std::printf("escape at k=%lld: (%lld,%lld)\n", v.witness_k,
                  v.escaped.first, v.escaped.second);
    }
  });

  auto* t_bp = c_topo->add_subcommand("bp", "neighborhood-base axioms");
  t_bp->add_option("-p", p)->required();
  t_bp->add_option("--side", side, "r | l")->capture_default_str();
  t_bp->add_option("--window", window);
  t_bp->add_option("--n-max", n = 3);
  t_bp->callback([&] {
    require_prime(p);
    if (side != "r" && side != "l") {
      throw CLI::ValidationError("--side must be r or l");
    }
    emit_report(ctx, bp_axioms_check(ctx.dom(), p,
                                     side == "r" ? Side::R : Side::L,
                                     parse_window(window), n));
  });

  auto* t_ind = c_topo->add_subcommand("induced",
                                       "induced neighborhoods in a family");
  t_ind->add_option("--family", fam)->required();
  t_ind->add_option("-x", xs)->required();
  t_ind->add_option("-p", p)->required();
  t_ind->add_option("-n", n);
  t_ind->callback([&] {
    require_prime(p);
    const Family f = parse_family(fam);
    emit_report(ctx, induced_nbhd_check(f, parse_elem(f.domain(), xs), p, n));
  });

  auto* t_ex = c_topo->add_subcommand("ex37",
                                      "the S0 u S1 topological semigroup");
  t_ex->add_option("-p", p)->required();
  t_ex->add_option("--n-max", n = 3);
  t_ex->add_option("--window", window);
  t_ex->callback([&] {
    require_prime(p);
    emit_report(ctx, ex37_check(p, n, parse_window(window)));
  });

  // ---- discreteness ----
  auto* c_dis = app.add_subcommand("discrete", "discreteness certificates");
  c_dis->require_subcommand(1);

  auto* d_cert = c_dis->add_subcommand("certify",
                                       "certificates for a whole window");
  d_cert->add_option("--family", fam)->required();
  d_cert->add_option("--window", window);
  d_cert->callback([&] {
    const auto certs = certify(parse_family(fam), parse_window(window));
    bool all_finite = true;
    json arr = json::array();
    for (const auto& c : certs) {
      arr.push_back(certificate_to_json(c));
      all_finite = all_finite && c.complement.finite;
    }
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n",
                  json{{"check", "discrete-certify"},
                       {"status", all_finite ? "pass" : "infinite-outcome"},
                       {"witnesses", arr},
                       {"params", {{"family", fam}, {"window", window}}}}
                      .dump(2)
                      .c_str());
    } else {
      for (const auto& c : certs) {
        std::printf("(%lld,%lld): e=(%lld,%lld), %s complement (%zu shown)\n",
                    c.element.first, c.element.second, c.idempotent.first,
                    c.idempotent.second,
                    c.complement.finite ? "finite" : "infinite",
                    c.complement.elements.size());
      }
    }
  });

  auto* d_comp = c_dis->add_subcommand("complement", "F \\ F.e for one e");
  d_comp->add_option("--family", fam)->required();
  d_comp->add_option("-e", xs, "the idempotent, as q,q")->required();
  d_comp->callback([&] {
    const Family f = parse_family(fam);
    const auto c = complement(f, parse_elem(f.domain(), xs));
    if (ctx.fmt() == Format::Json) {
      std::printf("%s\n", json{{"finite", c.finite},
                               {"elements", elems_to_json(c.elements)}}
                              .dump(2)
                              .c_str());
    } else {
      std::printf("%s complement\n", c.finite ? "finite" : "infinite");
      emit_elems(ctx, c.elements);
    }
  });

  // ---- compactification ----
  auto* c_cpt = app.add_subcommand("compact", "the compactification");
  c_cpt->require_subcommand(1);

  auto* k_mul = c_cpt->add_subcommand("mul", "product of compact elements");
  k_mul->add_option("-x", xs, "g1:n | c:i,j | g0:m | zero")->required();
  k_mul->add_option("-y", ys)->required();
  k_mul->callback(
      [&] { emit_compact(ctx, mul_compact(parse_compact(xs), parse_compact(ys))); });

  auto* k_nb = c_cpt->add_subcommand("nbhd", "basic neighborhood members");
  k_nb->add_option("--center", center)->required();
  k_nb->add_option("-p", p, "neighborhood level (any positive integer)")
      ->required();
  k_nb->add_option("--limit", limit)->capture_default_str();
  k_nb->callback([&] {
    json arr = json::array();
    for (const auto& e : nbhd_compact_enumerate(
             nbhd_compact(parse_compact(center), p),
             static_cast<std::size_t>(limit))) {
      arr.push_back(compact_to_json(e));
    }
    std::printf("%s\n", arr.dump(ctx.fmt() == Format::Json ? 2 : -1).c_str());
  });

  auto* k_43 = c_cpt->add_subcommand("prop43", "the seven continuity inclusions");
  k_43->add_option("--case", case_no)->required();
  k_43->add_option("-n", n);
  k_43->add_option("-m", m);
  k_43->add_option("-i", qi);
  k_43->add_option("-j", qj);
  k_43->add_option("--p1", p1);
  k_43->add_option("--p2", p2);
  k_43->add_option("--samples", samples)->capture_default_str();
  k_43->callback([&] {
    Prop43Params q;
    q.n = n;
    q.m = m;
    q.i = qi;
    q.j = qj;
    q.p1 = p1;
    q.p2 = p2;
    emit_report(ctx, prop43_check(case_no, q, static_cast<std::size_t>(samples)));
  });

  auto* k_id = c_cpt->add_subcommand("ideal", "the two-sided ideal I0");
  k_id->add_option("--bound", bound)->capture_default_str();
  k_id->callback([&] { emit_report(ctx, ideal_check(bound)); });

  auto* k_q = c_cpt->add_subcommand("quotient", "Rees quotient image");
  k_q->add_option("-x", xs)->required();
  k_q->callback([&] { emit_compact(ctx, rees_quotient(parse_compact(xs))); });

  auto* k_d = c_cpt->add_subcommand("density", "density of C_Z+ witnesses");
  k_d->add_option("--p-max", p_max)->capture_default_str();
  k_d->callback([&] { emit_report(ctx, density_check(p_max)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return ctx.exit_code;
}
