// One line per acceptance criterion; exit status 1 if any is red.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wittforge/prismatic.hpp"
#include "wittforge/suites.hpp"
#include "wittforge/universal.hpp"
#include "wittforge/witt_struct.hpp"

using namespace wittforge;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs suites sequentially and folds them into one outcome.
Outcome suites(const std::vector<std::string>& names, double limit = 0) {
  Outcome o;
  std::ostringstream note;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0, failures = 0;
  for (const auto& n : names) {
    const auto r = suite_run(n, kSeed);
    cases += r.cases;
    failures += r.failures.size();
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) note << " [" << n << ": " << r.failures[i].check << "]";
  }
  const double secs = seconds_since(t0);
  o.ok = failures == 0 && (limit == 0 || secs < limit);
  std::ostringstream head;
  head << cases << " cases, " << failures << " failures, " << secs << " s";
  if (limit > 0) head << " (limit " << limit << " s)";
  o.note = head.str() + note.str();
  return o;
}

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  a.note += "; " + b.note;
  return a;
}

Outcome fact(bool ok, const std::string& what) { return {ok, what + (ok ? "" : " FAILED")}; }

Outcome criterion_3() {
  auto v = [](std::size_t i) { return IntPoly::variable(4, i); };
  const auto s = generate_universal(IndexSet::divisors_of(2), UniversalOp::sum);
  const auto m = generate_universal(IndexSet::divisors_of(2), UniversalOp::product);
  const bool exact = s.at(2) == v(1) + v(3) - v(0) * v(2) &&
                     m.at(2) == v(0) * v(0) * v(3) + v(1) * v(2) * v(2) + (v(1) * v(3)).scaled(2);
  return both(suites({"universal-integrality"}), fact(exact, "s_2 and m_2 exact"));
}

Outcome criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = v_nonfree_obstruction(IndexSet::divisors_of(10));
  const double secs = seconds_since(t0);
  const bool ok = !c.satisfiable && c.n == 10u && c.m == 2u && c.p == 5u && secs < 1.0;
  std::ostringstream n;
  n << "unsatisfiable via v10 = v2 mod 5 after " << c.profiles_checked << " profiles in " << secs << " s";
  return both(suites({"v-nonfree"}), fact(ok, n.str()));
}

Outcome criterion_12() {
  const Ring z4 = Ring::zmod(4);
  const auto ctx = PrismaticContext::make(witt_from_integer(IndexSet::p_typical(2, 1), z4, 2));
  const auto g = prismatic_points_affine(AffinePresentation::parse({"x"}, {"x^2"}), ctx);
  const auto rep = wbar_ring(PrismaticContext::make(witt_parse(IndexSet::p_typical(2, 2), z4, {"2", "3"})));
  return both(suites({"prismatic"}),
              fact(g.objects.size() == 4 && rep.ok(), "4 objects over (Z/4, xi = 2); W-bar maps surjective, nilpotent kernels"));
}

Outcome criterion_13() {
  const std::string cmd = std::string(WITTFORGE_CLI) + " verify --suite all --seed 42 > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double secs = seconds_since(t0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream n;
  n << "exit " << code << " in " << secs << " s (limit 60 s)";
  return {code == 0 && secs < 60.0, n.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Witt ring axioms and ghost homomorphism", [] { return suites({"witt-ring-axioms"}, 10.0); }},
      {"Frobenius, Verschiebung and Teichmuller identities", [] { return suites({"witt-operators"}); }},
      {"universal polynomial integrality", criterion_3},
      {"W[F] annihilator equivalence", [] { return suites({"annihilator"}); }},
      {"p-local decomposition", [] { return suites({"local-decomposition"}); }},
      {"Hodge-Tate and distinguished predicates", [] { return suites({"hodge-tate-equivalences", "distinguished"}); }},
      {"non-freeness obstruction for div(10)", criterion_7},
      {"cone rings, hom sets and pi_0", [] { return suites({"cone"}); }},
      {"Rees dictionary and Day convolution", [] { return suites({"rees"}); }},
      {"Hodge-filtered de Rham cohomology", [] { return suites({"derham"}, 5.0); }},
      {"I-adic graded pieces", [] { return suites({"iadic-gr"}); }},
      {"prismatic points", criterion_12},
      {"end-to-end verify", criterion_13},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " -- " << o.note
              << std::endl;
  }
  return all ? 0 : 1;
}
