// wittforge command-line front end. JSON on stdout, errors on stderr.
// Exit codes: 0 ok, 1 predicate false or verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wittforge/cone.hpp"
#include "wittforge/derham.hpp"
#include "wittforge/errors.hpp"
#include "wittforge/filtration.hpp"
#include "wittforge/json_io.hpp"
#include "wittforge/prismatic.hpp"
#include "wittforge/suites.hpp"
#include "wittforge/witt_struct.hpp"

using namespace wittforge;

namespace {

struct Common {
  std::string ring = "integers";
  std::string index_set = "div:2";
  bool pretty = false;
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

WittVector parse_witt(const std::string& text, const IndexSet& e, const Ring& r) {
  return witt_parse(e, r, split(text, ','));
}

int emit(const Json& j, const Common& c, int code = 0) {
  const std::string text = c.pretty ? j.dump(2) : j.dump();
  if (c.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(c.out);
    if (!f) throw ValidationError("cannot write " + c.out);
    f << text << "\n";
  }
  return code;
}

Json coords_of(const WittVector& a) { return coords_json(a.index_set(), a.coords()); }

void add_common(CLI::App* app, Common& c, bool ring_opts = true) {
  if (ring_opts) {
    app->add_option("--ring", c.ring, "ring descriptor")->capture_default_str();
    app->add_option("--index-set", c.index_set, "div:N | ptyp:p:len | set:a,b,c")->capture_default_str();
  }
  app->add_flag("--pretty", c.pretty, "indented output");
  app->add_option("--out", c.out, "write output to FILE");
}

PredicateContext make_context(const Ring& r, const IndexSet& e, long p) {
  return p > 0 ? PredicateContext::local(static_cast<IndexSet::Index>(p), r, e) : PredicateContext::automatic(r, e);
}

// Cone element "r;x1;x2" with each x a comma list over the generators.
ConeElement<ElementOps> parse_cone(const std::string& text, const QuasiIdeal<ElementOps>& q) {
  const auto parts = split(text, ';');
  if (parts.empty()) throw ValidationError("empty cone element");
  ConeElement<ElementOps> u{q.ops.ring.parse_element(parts[0]), {}};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto xs = split(parts[i], ',');
    if (xs.size() != q.rank()) throw ValidationError("module element needs " + std::to_string(q.rank()) + " entries");
    std::vector<Element> m;
    for (const auto& x : xs) m.push_back(q.ops.ring.parse_element(x));
    u.xs.push_back(std::move(m));
  }
  return u;
}

Json module_json(const std::vector<Element>& x) {
  Json arr = Json::array();
  for (const auto& v : x) arr.push_back(v.to_string());
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wittforge: Witt vectors, cones, filtrations and prismatic points"};
  app.require_subcommand(1);
  Common c;
  int code = 0;

  // witt add|mul|neg|sub
  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
  witt->require_subcommand(1);
  std::string wa, wb, strategy = "automatic";
  for (const char* name : {"add", "mul", "neg", "sub"}) {
    auto* sub = witt->add_subcommand(name, std::string("Witt ") + name);
    add_common(sub, c);
    sub->add_option("--a", wa, "coordinates, comma separated")->required();
    if (std::string(name) != "neg") sub->add_option("--b", wb, "coordinates, comma separated")->required();
    sub->add_option("--strategy", strategy, "automatic | polynomial | ghost")->capture_default_str();
    sub->callback([&, op = std::string(name)] {
      const Ring r = Ring::parse(c.ring);
      const IndexSet e = IndexSet::parse(c.index_set);
      const WittStrategy s = strategy == "polynomial" ? WittStrategy::polynomial
                             : strategy == "ghost"    ? WittStrategy::ghost
                                                      : WittStrategy::automatic;
      if (strategy != "automatic" && strategy != "polynomial" && strategy != "ghost")
        throw ValidationError("unknown strategy " + strategy);
      const auto a = parse_witt(wa, e, r);
      const ArithOp aop = op == "add" ? ArithOp::add : op == "mul" ? ArithOp::mul : op == "neg" ? ArithOp::neg : ArithOp::sub;
      const auto res = witt_arith(aop, a, aop == ArithOp::neg ? a : parse_witt(wb, e, r), s);
      code = emit(Json{{"coords", coords_of(res)}}, c);
    });
  }

  auto* gh = app.add_subcommand("ghost", "ghost components");
  add_common(gh, c);
  gh->add_option("--a", wa)->required();
  gh->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    code = emit(Json{{"ghost", coords_json(e, ghost(parse_witt(wa, e, r)))}}, c);
  });

  unsigned long opn = 0;
  auto* fr = app.add_subcommand("frobenius", "F_n : W_E -> W_{E|n}");
  add_common(fr, c);
  fr->add_option("--n", opn)->required();
  fr->add_option("--a", wa)->required();
  fr->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto res = frobenius(opn, parse_witt(wa, e, r));
    code = emit(Json{{"index_set", index_set_json(res.index_set())}, {"coords", coords_of(res)}}, c);
  });

  auto* ve = app.add_subcommand("verschiebung", "V_n : W_{E|n} -> W_E (--a is indexed by E|n)");
  add_common(ve, c);
  ve->add_option("--n", opn)->required();
  ve->add_option("--a", wa)->required();
  ve->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto res = verschiebung(opn, parse_witt(wa, e.quotient_by(opn), r), e);
    code = emit(Json{{"index_set", index_set_json(res.index_set())}, {"coords", coords_of(res)}}, c);
  });

  std::string relem;
  auto* te = app.add_subcommand("teich", "Teichmuller representative");
  add_common(te, c);
  te->add_option("--r", relem)->required();
  te->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    code = emit(Json{{"coords", coords_of(teichmuller(r.parse_element(relem), e))}}, c);
  });

  long prime = 0;
  auto* de = app.add_subcommand("decompose", "p-local product decomposition");
  add_common(de, c);
  de->add_option("--p", prime, "the prime kept")->required();
  de->add_option("--a", wa)->required();
  de->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto ctx = PredicateContext::local(static_cast<IndexSet::Index>(prime), r, e);
    const auto d = local_decompose(parse_witt(wa, e, r), ctx);
    Json factors = Json::object();
    for (std::size_t i = 0; i < d.labels.size(); ++i) factors[std::to_string(d.labels[i])] = coords_of(d.factors[i]);
    code = emit(Json{{"p", prime}, {"factor_index_set", index_set_json(d.factors.front().index_set())},
                     {"factors", factors}},
                c);
  });

  auto* ht = app.add_subcommand("hodge-tate", "Hodge-Tate predicate (exit 1 when false)");
  add_common(ht, c);
  ht->add_option("--a", wa)->required();
  ht->add_option("--p", prime, "local prime; default picks the context automatically");
  ht->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto ctx = make_context(r, e, prime);
    const bool v = is_hodge_tate(parse_witt(wa, e, r), ctx);
    const std::string kind = ctx.kind == PredicateContext::Kind::local ? "local:" + std::to_string(ctx.p) : "rational";
    code = emit(Json{{"hodge_tate", v}, {"context", kind}}, c, v ? 0 : 1);
  });

  auto* di = app.add_subcommand("distinguished", "distinguished predicate with witness (exit 1 when false)");
  add_common(di, c);
  di->add_option("--a", wa)->required();
  di->add_option("--p", prime, "local prime; default picks the context automatically");
  di->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto w = is_distinguished(parse_witt(wa, e, r), make_context(r, e, prime));
    Json j{{"distinguished", w.has_value()}};
    if (w) {
      j["x"] = w->x.to_string();
      j["v"] = coords_of(w->v);
    }
    code = emit(j, c, w ? 0 : 1);
  });

  std::string dvals = "2", cu, cv, cop = "mul", hom;
  std::size_t level = 2;
  bool want_pi0 = false;
  auto* co = app.add_subcommand("cone", "quasi-ideal cones over a plain ring");
  add_common(co, c);
  co->add_option("--d", dvals, "d on the generators, comma separated")->capture_default_str();
  co->add_option("--op", cop, "add | mul | sub | neg")->capture_default_str();
  co->add_option("--u", cu, "cone element r;x1;... (each x a comma list)");
  co->add_option("--v", cv, "second cone element");
  co->add_option("--hom", hom, "r1,r2: Hom(r1, r2)");
  co->add_option("--level", level, "level for random checks")->capture_default_str();
  co->add_flag("--pi0", want_pi0, "report pi_0");
  co->callback([&] {
    const Ring r = Ring::parse(c.ring);
    std::vector<Element> ds;
    for (const auto& s : split(dvals, ',')) ds.push_back(r.parse_element(s));
    const QuasiIdeal<ElementOps> q{ElementOps{r}, ds, {}};
    const auto verdict = quasi_ideal_check(q);
    Json j{{"ring", r.descriptor()}, {"rank", q.rank()}, {"quasi_ideal", verdict.holds}};
    if (!verdict.holds && verdict.violating_pair)
      j["violating_pair"] = {verdict.violating_pair->first, verdict.violating_pair->second};
    if (!cu.empty()) {
      const auto u = parse_cone(cu, q);
      const auto v = cv.empty() ? u : parse_cone(cv, q);
      const ArithOp op = cop == "add" ? ArithOp::add : cop == "sub" ? ArithOp::sub : cop == "neg" ? ArithOp::neg : ArithOp::mul;
      if (cop != "add" && cop != "sub" && cop != "neg" && cop != "mul") throw ValidationError("unknown op " + cop);
      const auto res = cone_arith(q, op, u, v);
      Json xs = Json::array();
      for (const auto& x : res.xs) xs.push_back(module_json(x));
      j["result"] = Json{{"r", res.r.to_string()}, {"xs", xs}};
    }
    if (!hom.empty()) {
      const auto ends = split(hom, ',');
      if (ends.size() != 2) throw ValidationError("--hom needs r1,r2");
      const auto h = cone_hom_set(q, r.parse_element(ends[0]), r.parse_element(ends[1]));
      Json els = Json::array();
      for (const auto& x : h.elements) els.push_back(module_json(x));
      j["hom"] = Json{{"infinite", h.infinite}, {"elements", els}};
    }
    if (want_pi0) {
      const auto p = cone_pi0(q);
      j["pi0"] = Json{{"descriptor", p.descriptor}, {"order", p.order ? Json(p.order->get_str()) : Json(nullptr)}};
    }
    code = emit(j, c);
  });

  int lo = 0, shift = 0, degree = 4;
  std::string dims, gr_ring, gens;
  bool constant_above = false;
  auto* re = app.add_subcommand("rees", "filtered modules, Rees modules and I-adic gr");
  add_common(re, c, false);
  re->add_option("--lo", lo, "first index")->capture_default_str();
  re->add_option("--dims", dims, "dimensions of Fil^lo, Fil^(lo+1), ... (flag filtration)");
  re->add_flag("--constant-above", constant_above, "Fil^i stays at the last piece");
  re->add_option("--shift", shift, "apply M{n}")->capture_default_str();
  re->add_option("--gr-ring", gr_ring, "A for the I-adic gr of A (x) A");
  re->add_option("--generators", gens, "generators of I, comma separated");
  re->add_option("--degree", degree, "top degree for gr")->capture_default_str();
  re->callback([&] {
    Json j = Json::object();
    if (!dims.empty()) {
      std::vector<std::size_t> d;
      for (const auto& s : split(dims, ',')) d.push_back(std::stoul(s));
      const auto m = shift_filtration(FilteredModule::flag(lo, d, !constant_above), shift);
      j["filtered"] = filtered_to_json(m);
      j["rees"] = rees_to_json(rees_of_filtered(m));
      const auto comp = complete_filtration(m, 3);
      j["complete"] = comp.complete;
    }
    if (!gr_ring.empty()) {
      Json pieces = Json::object();
      for (const auto& p : iadic_gr(Ring::parse(gr_ring), gens.empty() ? std::vector<std::string>{} : split(gens, ','), degree)) {
        pieces[std::to_string(p.degree)] =
            Json{{"rank", p.rank}, {"generators", p.generators}, {"relations", matrix_json(p.relations)}};
      }
      j["gr"] = pieces;
    }
    if (j.empty()) throw ValidationError("rees needs --dims or --gr-ring");
    code = emit(j, c);
  });

  int torus = 0, affine = 0, box = 1;
  auto* dr = app.add_subcommand("derham", "Hodge-filtered de Rham cohomology of G_m^a x A^b");
  add_common(dr, c, false);
  dr->add_option("--torus", torus)->required();
  dr->add_option("--affine", affine)->required();
  dr->add_option("--box", box, "character box")->capture_default_str();
  dr->callback([&] { code = emit(derham_report(hodge_cohomology({torus, affine}, box)), c); });

  std::string xi, pgens, prels;
  std::size_t budget = 1'000'000;
  bool wbar = false;
  auto* pr = app.add_subcommand("prismatic", "W-bar points of Spec Z[x]/(f) over a finite ring");
  add_common(pr, c);
  pr->add_option("--xi", xi, "distinguished element, comma separated coordinates")->required();
  pr->add_option("--generators", pgens, "generator names, comma separated");
  pr->add_option("--relations", prels, "relations over Z, comma separated");
  pr->add_option("--budget", budget, "search budget")->capture_default_str();
  pr->add_flag("--wbar", wbar, "also report the W-bar pi_0 maps");
  pr->callback([&] {
    const Ring r = Ring::parse(c.ring);
    const IndexSet e = IndexSet::parse(c.index_set);
    const auto ctx = PrismaticContext::make(parse_witt(xi, e, r));
    Json j{{"xi", coords_of(ctx.xi)}};
    if (!pgens.empty()) {
      const auto b = AffinePresentation::parse(split(pgens, ','),
                                               prels.empty() ? std::vector<std::string>{} : split(prels, ','));
      j["groupoid"] = groupoid_to_json(prismatic_points_affine(b, ctx, budget));
    }
    if (wbar || pgens.empty()) j["wbar"] = wbar_to_json(wbar_ring(ctx, 2, budget));
    code = emit(j, c);
  });

  std::vector<std::string> suites;
  std::uint64_t seed = 42;
  bool list = false, no_timing = false;
  SuiteBudget sb;
  auto* vf = app.add_subcommand("verify", "run verification suites (exit 1 on any failure)");
  add_common(vf, c, false);
  vf->add_option("--suite", suites, "suite id or all (repeatable)");
  vf->add_option("--seed", seed)->capture_default_str();
  vf->add_flag("--list", list, "print the coverage map");
  vf->add_flag("--no-timing", no_timing, "omit wall times (byte-identical reruns)");
  vf->add_option("--budget-cases", sb.random_cases, "random cases per property")->capture_default_str();
  vf->add_option("--budget-operator-cases", sb.operator_cases)->capture_default_str();
  vf->add_option("--budget-enum", sb.enum_limit, "enumeration cap")->capture_default_str();
  vf->add_option("--budget-box", sb.character_bound, "de Rham character box")->capture_default_str();
  vf->add_option("--budget-gr", sb.gr_degree, "I-adic gr top degree")->capture_default_str();
  vf->add_option("--budget-groupoid", sb.groupoid_budget)->capture_default_str();
  vf->callback([&] {
    if (list) {
      code = emit(coverage_map(), c);
      return;
    }
    std::vector<std::string> names;
    for (const auto& s : suites) {
      if (s == "all") {
        names = suite_ids();
        break;
      }
      names.push_back(s);
    }
    if (names.empty()) throw ValidationError("verify needs --suite or --list");
    const auto reports = suite_run_all(names, seed, sb);
    Json arr = Json::array();
    std::size_t failures = 0, cases = 0;
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r, !no_timing));
      failures += r.failures.size();
      cases += r.cases;
    }
    code = emit(Json{{"seed", seed}, {"cases", cases}, {"failures", failures}, {"passed", failures == 0},
                     {"suites", arr}},
                c, failures == 0 ? 0 : 1);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const wittforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
