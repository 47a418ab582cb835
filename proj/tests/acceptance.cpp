// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "retractkit/random.hpp"
#include "retractkit/testelem.hpp"

#ifndef RETRACTKIT_CLI_PATH
#error "RETRACTKIT_CLI_PATH must name the retractkit executable"
#endif

using namespace retractkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  unsigned failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  unsigned failures_ = 0;
  std::ostringstream notes_;
};

CommPoly C(const char* text) { return parse<CommPoly>(text); }
NCPoly N(const char* text) { return parse<NCPoly>(text); }

template <class P>
P normalized(const P& r) {
  return (1 / r.leading_coefficient()) * (r - P(r.constant_term()));
}

template <class P>
P random_in_y_ideal(Rng& rng, unsigned max_degree) {
  const unsigned d = static_cast<unsigned>(rng.uniform(0, max_degree - 1));
  P w = P::y() * random_poly<P>(rng, d, 3, 3);
  if (rng.chance(1, 2)) w = w + random_poly<P>(rng, static_cast<unsigned>(rng.uniform(0, 1)), 2, 3) * P::y();
  return w;
}

Outcome estimate_soundness(RingTag ring) {
  Check check;
  const auto start = Clock::now();
  FuzzConfig config;
  config.seed = 20240601;
  config.trials = 1000;
  config.max_degree = 8;
  config.max_support = 12;
  const FuzzSummary s =
      ring == RingTag::comm ? fuzz_estimates<CommPoly>(config) : fuzz_estimates<NCPoly>(config);
  const double elapsed = seconds_since(start);
  check.expect(s.accepted == 1000, "accepted " + std::to_string(s.accepted));
  check.expect(s.violations == 0, std::to_string(s.violations) + " violations");
  check.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");

  EstimateReport witness;
  if (ring == RingTag::comm) {
    witness = bound_comm(C("x^2"), C("y^3"), C("x*y"));
    check.expect(witness.lower_bound == 5 && witness.actual_degree == 5, "f = x^2, g = y^3, p = xy is not 5 = 5");
  } else {
    witness = bound_noncomm(N("x + y^2"), N("y + x^2"), N("x*y"));
    check.expect(witness.lower_bound == 4 && witness.actual_degree == 4,
                 "f = x + y^2, g = y + x^2, p = xy is not 4 = 4");
  }
  std::ostringstream summary;
  summary << s.accepted << " triples, 0 violations, " << s.equality_cases << " equality cases, witness bound = actual = "
          << witness.actual_degree;
  return check.outcome(summary.str());
}

// phi = L o (x, c*y + x^a y x^b + g(x)) o L^-1 with L a diagonal scaling: the
// commutator degree grows by a + b per step and [phi(x), phi(y)] is no
// multiple of [x, y]. A dense L would make phi^5 far too large to expand.
NCEndo growth_endo(Rng& rng) {
  const unsigned a = static_cast<unsigned>(rng.uniform(0, 2));
  const unsigned b = a == 0 ? static_cast<unsigned>(rng.uniform(1, 2)) : static_cast<unsigned>(rng.uniform(0, 2 - a));
  const NCPoly x = NCPoly::x();
  const NCPoly y = NCPoly::y();
  const UniPoly g = random_uni(rng, static_cast<unsigned>(rng.uniform(0, 3)), 3);
  const NCPoly image = Scalar(rng.nonzero(2)) * y + x.pow(a) * y * x.pow(b) + eval_uni(g, x);
  NCEndo core(x, image);
  if (rng.chance(1, 2)) core = NCEndo(substitute(image, y, x), y);  // roles of x and y swapped
  const LinearAuto l{rng.nonzero(2), 0, 0, rng.nonzero(2), 0, 0};
  return compose(to_endo<NCPoly>(l), compose(core, to_endo<NCPoly>(inverse(ElementaryAuto(l)))));
}

Outcome growth_noncommutative() {
  Check check;
  Rng rng(303);
  unsigned built = 0;
  for (int i = 0; i < 50; ++i) {
    const NCEndo phi = growth_endo(rng);
    check.expect(std::max(deg(phi.x_image()), deg(phi.y_image())) <= 3, "degree above 3");
    check.expect(!dicks_test(phi) && !commutator(phi.x_image(), phi.y_image()).is_zero(), "not a non-Dicks pair");
    const GrowthReport r = growth_noncomm(phi, 5);
    check.expect(r.points.size() == 6 && r.points[0].degree == 2, "k = 0 value is not 2");
    for (const auto& pt : r.points) {
      check.expect(pt.degree >= pt.k + 2, "deg below k + 2 at k = " + std::to_string(pt.k));
    }
    for (std::size_t k = 1; k < r.points.size(); ++k) {
      check.expect(r.points[k].degree > r.points[k - 1].degree, "not strictly increasing");
    }
    check.expect(r.satisfied && r.strictly_increasing, "report flags disagree");
    ++built;
  }
  return check.outcome(std::to_string(built) + " endomorphisms, k = 0..5");
}

// phi = (e*x + b, u(x) y^m + h(x)) fixing p in K[x]; e = -1 needs p even.
Outcome growth_commutative() {
  Check check;
  Rng rng(404);
  unsigned built = 0;
  for (int i = 0; i < 50; ++i) {
    const bool flip = rng.chance(1, 2);
    const unsigned m = static_cast<unsigned>(rng.uniform(1, 2));
    const CommPoly x = CommPoly::x();
    UniPoly u = random_uni(rng, static_cast<unsigned>(rng.uniform(m == 1 ? 1 : 0, 1)), 2);
    if (flip && m == 1) u = u * u;  // keeps the y-coefficient nonconstant after x -> -x
    const UniPoly h = random_uni(rng, static_cast<unsigned>(rng.uniform(0, 2)), 2);
    const CommEndo phi(flip ? Scalar(-1) * x : x, eval_uni(u, x) * CommPoly::y().pow(m) + eval_uni(h, x));
    const CommPoly p = flip ? x.pow(2) + CommPoly(rng.uniform(-3, 3)) : eval_uni(random_uni(rng, 1 + static_cast<unsigned>(rng.uniform(0, 2)), 3), x);
    check.expect(!jacobian(phi.x_image(), phi.y_image()).is_zero(), "J = 0");
    check.expect(!tame_decompose(phi).has_value(), "tame_decompose succeeded on " + print(phi.y_image()));
    const GrowthReport r = growth_comm(phi, p, 5);
    for (const auto& pt : r.points) check.expect(pt.degree >= pt.k, "deg J below k at k = " + std::to_string(pt.k));
    check.expect(r.satisfied, "report not satisfied");
    ++built;
  }
  const GrowthReport exact = growth_comm(CommEndo(C("x"), C("y^2")), C("x"), 4);
  std::vector<unsigned> degrees;
  for (const auto& pt : exact.points) degrees.push_back(pt.degree);
  check.expect(degrees == std::vector<unsigned>{0, 1, 3, 7, 15}, "(x, y^2) does not give 0, 1, 3, 7, 15");
  return check.outcome(std::to_string(built) + " triples, k = 0..5; (x, y^2) gives 0, 1, 3, 7, 15");
}

// phi = alpha^-1 o (e*r, 0) o alpha fixes alpha^-1(f(r)) for f even when e = -1.
template <class P>
void retraction_case(Rng& rng, Check& check, unsigned& twisted, bool conjugate) {
  // Conjugation multiplies degrees, and checking phi^2 = phi expands phi(phi),
  // so conjugated cases keep w quadratic. f stays at most quadratic throughout.
  const P r = P::x() + random_in_y_ideal<P>(rng, conjugate ? 2 : 3);
  check.expect(canonical_form_check(r).canonical, "r not canonical");
  const bool twist = rng.chance(3, 4);
  const UniPoly half = random_uni(rng, 1, 3);
  const UniPoly f = twist ? half.compose(UniPoly::t().pow(2)) : half;
  const Endomorphism<P> phi0(twist ? Scalar(-1) * r : r, P());
  Endomorphism<P> phi = phi0;
  P p = eval_uni(f, r);
  if (conjugate) {
    Rng alpha_rng(rng.next());
    // One elementary factor: longer products push phi to degree 24 and beyond.
    const TameDecomposition alpha = random_tame_factors(alpha_rng, RandomAutoConfig{1, 2, 2});
    const auto forward = recompose<P>(alpha);
    const auto backward = recompose<P>(inverse(alpha));
    phi = compose(backward, compose(phi0, forward));
    p = backward(p);
  }
  if (!fixes(phi, p)) {
    check.expect(false, "construction does not fix p");
    return;
  }
  const auto cert = find_retraction_power(phi, p);
  check.expect(cert.power <= 2, "m = " + std::to_string(cert.power));
  check.expect(!twist || cert.power == 2, "twisted case with m != 2");
  check.expect(compose(cert.pi, cert.pi) == cert.pi, "pi^2 != pi");
  check.expect(cert.pi(p) == p, "pi(p) != p");
  check.expect(membership(cert.pi.x_image(), cert.generator).has_value() &&
                   membership(cert.pi.y_image(), cert.generator).has_value(),
               "an image is outside K[generator]");
  if (twist) ++twisted;
}

Outcome retraction_construction() {
  Check check;
  Rng rng(505);
  unsigned twisted = 0;
  for (int i = 0; i < 50; ++i) retraction_case<CommPoly>(rng, check, twisted, true);
  for (int i = 0; i < 50; ++i) retraction_case<NCPoly>(rng, check, twisted, false);
  return check.outcome("100 endomorphisms (" + std::to_string(twisted) + " sign-twisted, m = 2)");
}

template <class P>
void round_trips(Rng& rng, Check& check, unsigned support) {
  for (int i = 0; i < 500; ++i) {
    const UniPoly f = random_uni(rng, static_cast<unsigned>(rng.uniform(1, 4)), 4);
    const P r = random_poly<P>(rng, static_cast<unsigned>(rng.uniform(1, 4)), support, 4);
    const P p = eval_uni(f, r);
    const auto g = membership(p, r);
    check.expect(g && *g == f, "membership lost f for r = " + print(r));
    const auto d = decompose_inner(p, deg(r));
    check.expect(d && d->inner == normalized(r) && eval_uni(d->outer, d->inner) == p,
                 "decompose_inner missed r = " + print(r));
  }
}

Outcome round_trip_oracles() {
  Check check;
  Rng rng(606);
  round_trips<CommPoly>(rng, check, 5);
  round_trips<NCPoly>(rng, check, 3);
  return check.outcome("500 pairs per ring");
}

Outcome automorphism_agreement() {
  Check check;
  Rng rng(707);
  unsigned autos = 0;
  for (int i = 0; i < 500; ++i) {
    NCEndo phi = recompose<NCPoly>(random_tame_factors(rng, RandomAutoConfig{3, 3, 2}));
    const long kind = rng.uniform(0, 3);
    if (kind == 1) {
      phi = compose(phi, NCEndo(NCPoly::x(), NCPoly::y().pow(2)));
    } else if (kind == 2) {
      phi = NCEndo(random_poly<NCPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 3, 3),
                   random_poly<NCPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 3, 3));
    } else if (kind == 3) {
      phi = compose(NCEndo(NCPoly::x() + NCPoly::y().pow(2), NCPoly::y() + NCPoly::x().pow(2)), phi);
    }
    const bool dicks = dicks_test(phi);
    check.expect(dicks == tame_decompose(phi).has_value(), "criteria disagree on (" + print(phi.x_image()) + ", " +
                                                               print(phi.y_image()) + ")");
    if (dicks) ++autos;
  }
  for (int i = 0; i < 500; ++i) {
    const CommEndo phi = recompose<CommPoly>(random_tame_factors(rng, {}));
    const auto d = tame_decompose(phi);
    check.expect(d.has_value(), "tame product not decomposed");
    if (!d) continue;
    const CommEndo back = recompose<CommPoly>(*d);
    check.expect(back == phi && endo_spec_to_json(to_spec(back)) == endo_spec_to_json(to_spec(phi)),
                 "recomposition differs");
  }
  return check.outcome("500 noncommutative (" + std::to_string(autos) + " automorphisms), 500 commutative");
}

Outcome orbit_falsification() {
  Check check;
  const UniPoly f = UniPoly::t();
  const CommPoly rc = C("x + x*y");
  const auto c = orbit_falsifier(rc, f);
  check.expect(c.result == rc + rc.pow(3) && !c.affine_check, "comm r = x + xy");

  const NCPoly ra = N("x + x*y - y*x");
  const auto a = orbit_falsifier(ra, f);
  check.expect(a.result == ra.pow(2) && !a.affine_check, "noncomm r = x + [x, y]");
  // pi(alpha(f(r))) by substitution against f(r^2) by direct multiplication
  // and against f(r^2 + w(r^2, r)).
  const NCPoly direct = eval_uni(f, ra * ra);
  const NCPoly via_w = eval_uni(f, ra * ra + substitute(a.w, ra * ra, ra));
  const NCPoly substituted = substitute(eval_uni(f, ra), substitute(a.alpha.x_image(), ra, NCPoly()),
                                        substitute(a.alpha.y_image(), ra, NCPoly()));
  check.expect(a.result == direct && direct == via_w && substituted == direct, "f(r^2) computations disagree");

  const NCPoly rb = N("x + x*y");
  const auto b = orbit_falsifier(rb, f);
  check.expect(b.result == rb + rb.pow(3) && !b.affine_check, "noncomm r = x + xy");
  return check.outcome("results r + r^3, r^2, r + r^3, all non-affine");
}

Outcome test_element_verdicts() {
  Check check;
  const auto start = Clock::now();
  const CommPoly xy = C("x*y");
  const auto a = certify_test_element(xy);
  check.expect(a.verdict == Verdict::not_test_element && a.certificate.has_value(), "xy verdict");
  if (a.certificate) {
    const auto& pi = a.certificate->pi;
    check.expect(pi == CommEndo(C("x*y"), C("1")), "xy certificate is not (xy, 1)");
    check.expect(fixes(pi, xy) && is_idempotent(pi) && !is_automorphism(pi), "xy certificate does not re-verify");
    check.expect(membership(xy, a.certificate->generator).has_value(), "xy not in K[generator]");
  }
  const auto b = certify_test_element(C("x"));
  check.expect(b.verdict == Verdict::not_test_element, "x verdict");
  const auto c = certify_test_element(C("x^2 + y^2"));
  check.expect(c.verdict == Verdict::test_element_modulo_bounds, "x^2 + y^2 verdict");
  check.expect(c.report.exhaustive && c.report.retraction_deg_bound == 6 &&
                   c.report.divisors_tried == std::vector<unsigned>{1, 2},
               "x^2 + y^2 report");
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  return check.outcome("xy: NotTestElement, x: NotTestElement, x^2 + y^2: TestElementModuloBounds");
}

int run_cli(const std::string& args) {
  const std::string command = std::string(RETRACTKIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome inconsistency_channel() {
  Check check;
  for (const char* ring : {"comm", "noncomm"}) {
    const std::string base = std::string("fuzz-estimates --ring ") + ring + " --seed 9 --trials 20";
    const int clean = run_cli(base);
    const int corrupt = run_cli(base + " --corrupt-bound");
    check.expect(clean == 0, std::string(ring) + " clean run exited " + std::to_string(clean));
    check.expect(corrupt == 3, std::string(ring) + " corrupted run exited " + std::to_string(corrupt));
  }
  return check.outcome("corrupted bound exits 3, clean run exits 0, both rings");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"estimate soundness, free algebra", [] { return estimate_soundness(RingTag::noncomm); }},
      {"estimate soundness, polynomial algebra", [] { return estimate_soundness(RingTag::comm); }},
      {"commutator growth of injective non-automorphisms", growth_noncommutative},
      {"Jacobian growth of fixing non-automorphisms", growth_commutative},
      {"retraction from a fixing endomorphism", retraction_construction},
      {"membership and decomposition round trips", round_trip_oracles},
      {"automorphism criteria agreement", automorphism_agreement},
      {"orbit falsification", orbit_falsification},
      {"test-element verdicts", test_element_verdicts},
      {"theorem-inconsistency channel", inconsistency_channel},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << outcome.detail << " [" << seconds_since(start) << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
