#include "retractkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "retractkit/testelem.hpp"

namespace retractkit::cli {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::precondition_violated:
      return "precondition_violated";
    case Status::not_found_within_bound:
      return "not_found_within_bound";
    case Status::theorem_inconsistency:
      return "theorem_inconsistency";
    case Status::parse_error:
      return "parse_error";
  }
  return "parse_error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok:
      return 0;
    case Status::not_found_within_bound:
      return 1;
    case Status::precondition_violated:
    case Status::parse_error:
      return 2;
    case Status::theorem_inconsistency:
      return 3;
  }
  return 2;
}

std::string CommandResult::render() const {
  if (!text.empty()) return text;
  json out = payload;
  out["status"] = to_string(status);
  return pretty ? out.dump(2) + "\n" : out.dump() + "\n";
}

namespace {

using retractkit::to_string;

template <class Fn>
json by_ring(RingTag ring, Fn&& fn) {
  if (ring == RingTag::comm) return fn.template operator()<CommPoly>();
  return fn.template operator()<NCPoly>();
}

template <class P>
json endo_json(const Endomorphism<P>& phi) {
  return {{"ring", to_string(ring_of<P>())}, {"x", print(phi.x_image())}, {"y", print(phi.y_image())}};
}

json any_endo_json(const AnyEndo& phi) {
  return std::visit([](const auto& e) { return endo_json(e); }, phi);
}

json factor_json(const ElementaryAuto& e) {
  return std::visit(
      [](const auto& f) -> json {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, LinearAuto>) {
          return {{"type", "linear"},         {"a11", to_string(f.a11)}, {"a12", to_string(f.a12)},
                  {"a21", to_string(f.a21)},  {"a22", to_string(f.a22)}, {"bx", to_string(f.bx)},
                  {"by", to_string(f.by)}};
        } else if constexpr (std::is_same_v<F, TriangularX>) {
          return {{"type", "triangular_x"}, {"h", print_uni(f.h)}};
        } else {
          return {{"type", "triangular_y"}, {"h", print_uni(f.h)}};
        }
      },
      e);
}

json factors_json(const TameDecomposition& d) {
  json out = json::array();
  for (const auto& f : d.factors) out.push_back(factor_json(f));
  return out;
}

json estimate_json(const EstimateReport& r) {
  return {{"actual_degree", r.actual_degree},
          {"lower_bound", to_string(r.lower_bound)},
          {"precondition_case", to_string(r.precondition_case)},
          {"satisfied", r.satisfied},
          {"strict", r.strict},
          {"strictly_satisfied", r.strictly_satisfied},
          {"guaranteed", r.guaranteed},
          {"reduction_steps", r.reduction_steps},
          {"violation", r.violation()}};
}

json growth_json(const GrowthReport& r) {
  json points = json::array();
  for (const auto& pt : r.points) points.push_back({{"k", pt.k}, {"degree", pt.degree}});
  return {{"points", points}, {"satisfied", r.satisfied}, {"strictly_increasing", r.strictly_increasing}};
}

json fuzz_json(const FuzzSummary& s) {
  return {{"ring", to_string(s.ring)},
          {"seed", s.seed},
          {"accepted", s.accepted},
          {"precondition_rejections", s.precondition_rejections},
          {"cost_redraws", s.cost_redraws},
          {"equality_cases", s.equality_cases},
          {"corollary_checks", s.corollary_checks},
          {"corollary_unguaranteed", s.corollary_unguaranteed},
          {"cases",
           {{to_string(PreconditionCase::leading_forms_independent), s.case_counts[0]},
            {to_string(PreconditionCase::dependent_nondivisible), s.case_counts[1]},
            {to_string(PreconditionCase::reduced), s.case_counts[2]}}},
          {"violations", s.violations},
          {"violation_examples", s.violation_examples}};
}

template <class P>
json certificate_json(const RetractionCertificate<P>& c) {
  json out = {{"pi", endo_json(c.pi)}, {"generator", print(c.generator)}, {"power", c.power}};
  out["fixed_element"] = c.fixed_element ? json(print(*c.fixed_element)) : json(nullptr);
  return out;
}

std::string read_spec(const std::string& text) {
  if (!text.empty() && text.front() == '{') return text;
  std::ifstream in(text);
  if (!in) throw ParseError(0, "cannot read endomorphism spec file " + text);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Shared storage for every option; only one subcommand is parsed per run.
struct Options {
  std::string ring;
  std::string p, f, g, r, d, uni_f;
  std::string phi, sigma, tau, fx, fy;
  unsigned a = 1, b = 1;
  unsigned k = 1;
  unsigned degree = 1;
  unsigned m_max = 64;
  unsigned deg_bound = 6;
  unsigned samples = 200;
  unsigned length = 4;
  long coeff_bound = 3;
  unsigned auto_deg_bound = 3;
  unsigned trials = 1000;
  unsigned max_degree = 8;
  unsigned max_support = 12;
  std::uint64_t seed = 0;
  bool corollary = false;
  bool corrupt_bound = false;

  RingTag ring_tag() const { return ring_from_string(ring); }

  AnyEndo endo() const {
    if (!phi.empty()) return make_endo(parse_endo_spec(read_spec(phi)));
    if (ring.empty() || fx.empty() || fy.empty()) {
      throw PreconditionViolated("give --phi SPEC, or --ring with --fx and --fy");
    }
    return make_endo(EndoSpec{ring_tag(), fx, fy});
  }
};

RingTag ring_of_endo(const AnyEndo& phi) { return phi.index() == 0 ? RingTag::comm : RingTag::noncomm; }

class Dispatcher {
 public:
  Dispatcher() {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--pretty", pretty_, "Indented JSON output");
    build();
  }

  CommandResult run(std::vector<std::string> args) {
    CommandResult result;
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::ParseError& e) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = app_.exit(e, out, err);
      result.text = out.str() + err.str();
      if (code != 0) {
        result.usage_error = true;
        result.status = Status::parse_error;
        result.text += app_.help();
      }
      return result;
    }
    result.pretty = pretty_;
    const std::string name = app_.get_subcommands().front()->get_name();
    try {
      result.payload = handlers_.at(name)(result.status);
    } catch (const ParseError& e) {
      fail(result, Status::parse_error, e.what());
    } catch (const TermLimitExceeded& e) {
      fail(result, Status::not_found_within_bound, e.what());
      result.payload["resource"] = "intermediate support exceeded RETRACTKIT_MAX_TERMS";
    } catch (const NotFoundWithinBound& e) {
      fail(result, Status::not_found_within_bound, e.what());
    } catch (const TheoremInconsistency& e) {
      fail(result, Status::theorem_inconsistency, e.what());
    } catch (const Error& e) {
      fail(result, Status::precondition_violated, e.what());
    } catch (const std::invalid_argument& e) {
      fail(result, Status::precondition_violated, e.what());
    }
    return result;
  }

 private:
  using Handler = std::function<json(Status&)>;

  static void fail(CommandResult& result, Status s, const std::string& message) {
    result.status = s;
    result.payload = {{"error", message}};
  }

  CLI::App* command(const std::string& name, const std::string& description, Handler handler) {
    handlers_[name] = std::move(handler);
    return app_.add_subcommand(name, description);
  }

  void ring(CLI::App* sub) {
    sub->add_option("--ring", o_.ring, "comm or noncomm")->required()->check(CLI::IsMember({"comm", "noncomm"}));
  }

  void poly(CLI::App* sub, const std::string& flag, std::string& target, const std::string& help) {
    sub->add_option(flag, target, help)->required();
  }

  void endo(CLI::App* sub) {
    sub->add_option("--phi", o_.phi, "Endomorphism spec: JSON text or a file path");
    sub->add_option("--ring", o_.ring, "comm or noncomm (with --fx, --fy)")->check(CLI::IsMember({"comm", "noncomm"}));
    sub->add_option("--fx", o_.fx, "Image of x");
    sub->add_option("--fy", o_.fy, "Image of y");
  }

  void build() {
    build_expr();
    build_endo();
    build_estimates();
    build_retracts();
    build_testelem();
  }

  void build_expr() {
    auto* sub = command("parse", "Parse and print in canonical form", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        return {{"p", print(p)}, {"terms", p.size()}};
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");

    sub = command("deg", "Total degree", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        return {{"p", print(p)}, {"deg", deg(p)}};
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");

    sub = command("wdeg", "Weighted degree with weights (a, b)", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        return {{"p", print(p)}, {"a", o_.a}, {"b", o_.b}, {"wdeg", wdeg(p, WeightPair(o_.a, o_.b))}};
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");
    sub->add_option("--a", o_.a, "Weight of x")->required();
    sub->add_option("--b", o_.b, "Weight of y")->required();

    sub = command("leading", "Highest homogeneous component", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        return {{"p", print(p)}, {"leading_form", print(leading_form(p))}};
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");

    sub = command("commutator", "[f, g] = fg - gf in K<x,y>", [this](Status&) -> json {
      const NCPoly f = parse<NCPoly>(o_.f);
      const NCPoly g = parse<NCPoly>(o_.g);
      return {{"f", print(f)}, {"g", print(g)}, {"commutator", print(commutator(f, g))}};
    });
    poly(sub, "--f", o_.f, "First argument");
    poly(sub, "--g", o_.g, "Second argument");

    sub = command("jacobian", "J(f, g) in K[x,y]", [this](Status&) -> json {
      const CommPoly f = parse<CommPoly>(o_.f);
      const CommPoly g = parse<CommPoly>(o_.g);
      return {{"f", print(f)}, {"g", print(g)}, {"jacobian", print(jacobian(f, g))}};
    });
    poly(sub, "--f", o_.f, "First argument");
    poly(sub, "--g", o_.g, "Second argument");

    sub = command("subst", "p(f, g)", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        const P f = parse<P>(o_.f);
        const P g = parse<P>(o_.g);
        return {{"p", print(p)}, {"f", print(f)}, {"g", print(g)}, {"result", print(substitute(p, f, g))}};
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");
    poly(sub, "--f", o_.f, "Image of x");
    poly(sub, "--g", o_.g, "Image of y");

    sub = command("abelianize", "Image of a K<x,y> element in K[x,y]", [this](Status&) -> json {
      const NCPoly p = parse<NCPoly>(o_.p);
      return {{"p", print(p)}, {"result", print(abelianize(p))}};
    });
    poly(sub, "--p", o_.p, "Noncommutative polynomial");

    sub = command("divides", "Exact division in K[x,y]", [this](Status&) -> json {
      const CommPoly d = parse<CommPoly>(o_.d);
      const CommPoly p = parse<CommPoly>(o_.p);
      const auto q = divides(d, p);
      json out = {{"d", print(d)}, {"p", print(p)}, {"divides", q.has_value()}};
      out["quotient"] = q ? json(print(*q)) : json(nullptr);
      return out;
    });
    poly(sub, "--d", o_.d, "Divisor");
    poly(sub, "--p", o_.p, "Dividend");
  }

  void build_endo() {
    auto* sub = command("apply", "phi(p)", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      const AnyPoly p = parse_poly(o_.p, ring_of_endo(phi));
      return {{"phi", any_endo_json(phi)}, {"p", print_poly(p)}, {"result", print_poly(apply(phi, p))}};
    });
    endo(sub);
    poly(sub, "--p", o_.p, "Polynomial");

    sub = command("compose", "sigma o tau", [this](Status&) -> json {
      const AnyEndo sigma = make_endo(parse_endo_spec(read_spec(o_.sigma)));
      const AnyEndo tau = make_endo(parse_endo_spec(read_spec(o_.tau)));
      return {{"sigma", any_endo_json(sigma)}, {"tau", any_endo_json(tau)}, {"result", any_endo_json(compose(sigma, tau))}};
    });
    sub->add_option("--sigma", o_.sigma, "Outer endomorphism spec")->required();
    sub->add_option("--tau", o_.tau, "Inner endomorphism spec")->required();

    sub = command("power", "phi^k", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit(
          [&](const auto& e) -> json { return {{"phi", endo_json(e)}, {"k", o_.k}, {"result", endo_json(power(e, o_.k))}}; },
          phi);
    });
    endo(sub);
    sub->add_option("--k", o_.k, "Exponent")->required();

    sub = command("idempotent", "Whether phi^2 = phi", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit([](const auto& e) -> json { return {{"phi", endo_json(e)}, {"idempotent", is_idempotent(e)}}; },
                        phi);
    });
    endo(sub);

    sub = command("injective", "Algebraic independence of the images", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit([](const auto& e) -> json { return {{"phi", endo_json(e)}, {"injective", is_injective(e)}}; },
                        phi);
    });
    endo(sub);

    sub = command("is-auto", "Automorphism recognition", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit(
          [](const auto& e) -> json {
            using P = typename std::decay_t<decltype(e)>::Poly;
            json out = {{"phi", endo_json(e)}, {"automorphism", is_automorphism(e)}};
            if constexpr (std::is_same_v<P, NCPoly>) out["dicks"] = dicks_test(e);
            return out;
          },
          phi);
    });
    endo(sub);

    sub = command("decompose", "Factor into elementary automorphisms", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit(
          [](const auto& e) -> json {
            const auto d = tame_decompose(e);
            json out = {{"phi", endo_json(e)}, {"automorphism", d.has_value()}};
            out["factors"] = d ? factors_json(*d) : json(nullptr);
            return out;
          },
          phi);
    });
    endo(sub);

    sub = command("random-auto", "Seeded random tame automorphism", [this](Status&) {
      Rng rng(o_.seed);
      const TameDecomposition factors =
          random_tame_factors(rng, RandomAutoConfig{o_.length, o_.coeff_bound, o_.auto_deg_bound});
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        return {{"seed", o_.seed}, {"automorphism", endo_json(recompose<P>(factors))}, {"factors", factors_json(factors)}};
      });
    });
    ring(sub);
    sub->add_option("--seed", o_.seed, "Random seed")->required();
    sub->add_option("--length", o_.length, "Number of elementary factors")->capture_default_str();
    sub->add_option("--coeff-bound", o_.coeff_bound, "Coefficient bound")->capture_default_str();
    sub->add_option("--deg-bound", o_.auto_deg_bound, "Degree bound of triangular parts")->capture_default_str();
  }

  void build_estimates() {
    auto* sub = command("check-estimate", "Degree estimate for p(f, g)", [this](Status& status) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P f = parse<P>(o_.f);
        const P g = parse<P>(o_.g);
        const P p = parse<P>(o_.p);
        EstimateReport report;
        if constexpr (std::is_same_v<P, CommPoly>) {
          report = o_.corollary ? check_jacobian_bound(f, g, p) : bound_comm(f, g, p);
        } else {
          report = o_.corollary ? check_commutator_bound(f, g, p) : bound_noncomm(f, g, p);
        }
        if (report.violation()) status = Status::theorem_inconsistency;
        json out = estimate_json(report);
        out["input"] = {{"f", print(f)}, {"g", print(g)}, {"p", print(p)}};
        out["check"] = o_.corollary ? "corollary" : "main";
        return out;
      });
    });
    ring(sub);
    poly(sub, "--f", o_.f, "First image");
    poly(sub, "--g", o_.g, "Second image");
    poly(sub, "--p", o_.p, "Outer polynomial");
    sub->add_flag("--corollary", o_.corollary, "Check deg p(f, g) against the commutator or Jacobian degree");

    sub = command("fuzz-estimates", "Seeded random soundness run of the estimates", [this](Status& status) {
      FuzzConfig config;
      config.seed = o_.seed;
      config.trials = o_.trials;
      config.max_degree = o_.max_degree;
      config.max_support = o_.max_support;
      config.corrupt_bound = o_.corrupt_bound;
      const FuzzSummary summary =
          o_.ring_tag() == RingTag::comm ? fuzz_estimates<CommPoly>(config) : fuzz_estimates<NCPoly>(config);
      if (summary.violations > 0) status = Status::theorem_inconsistency;
      return fuzz_json(summary);
    });
    ring(sub);
    sub->add_option("--seed", o_.seed, "Random seed")->required();
    sub->add_option("--trials", o_.trials, "Accepted triples to check")->capture_default_str();
    sub->add_option("--max-degree", o_.max_degree, "Degree bound of f, g, p")->capture_default_str();
    sub->add_option("--max-support", o_.max_support, "Support bound of f, g, p")->capture_default_str();
    // Test hook: an impossible bound, to exercise the violation channel.
    sub->add_flag("--corrupt-bound", o_.corrupt_bound)->group("");

    sub = command("growth", "Degree growth along powers of phi", [this](Status& status) -> json {
      const AnyEndo phi = o_.endo();
      GrowthReport report;
      if (const auto* c = std::get_if<CommEndo>(&phi)) {
        if (o_.p.empty()) throw PreconditionViolated("growth in K[x,y] needs the fixed element --p");
        report = growth_comm(*c, parse<CommPoly>(o_.p), o_.k);
      } else {
        report = growth_noncomm(std::get<NCEndo>(phi), o_.k);
      }
      if (!report.satisfied) status = Status::theorem_inconsistency;
      json out = growth_json(report);
      out["phi"] = any_endo_json(phi);
      return out;
    });
    endo(sub);
    sub->add_option("--k", o_.k, "Largest power")->required();
    sub->add_option("--p", o_.p, "Fixed element (commutative case)");
  }

  void build_retracts() {
    auto* sub = command("membership", "Whether p lies in K[r]", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        const P r = parse<P>(o_.r);
        const auto f = membership(p, r);
        json out = {{"p", print(p)}, {"r", print(r)}, {"member", f.has_value()}};
        out["f"] = f ? json(print_uni(*f)) : json(nullptr);
        return out;
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Element");
    poly(sub, "--r", o_.r, "Generator");

    sub = command("decompose-inner", "p = f(r) with deg r = d", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        const auto dec = decompose_inner(p, o_.degree);
        json out = {{"p", print(p)}, {"d", o_.degree}, {"found", dec.has_value()}};
        out["inner"] = dec ? json(print(dec->inner)) : json(nullptr);
        out["outer"] = dec ? json(print_uni(dec->outer)) : json(nullptr);
        return out;
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Polynomial");
    sub->add_option("--d", o_.degree, "Degree of the inner component")->required();

    sub = command("retraction-power", "Smallest m with phi^m idempotent", [this](Status&) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit(
          [&](const auto& e) -> json {
            using P = typename std::decay_t<decltype(e)>::Poly;
            const P p = parse<P>(o_.p);
            return {{"phi", endo_json(e)}, {"p", print(p)}, {"certificate", certificate_json(find_retraction_power(e, p, o_.m_max))}};
          },
          phi);
    });
    endo(sub);
    poly(sub, "--p", o_.p, "Fixed element");
    sub->add_option("--m-max", o_.m_max, "Largest power tried")->capture_default_str();

    sub = command("find-retraction", "Solve r(A(t), B(t)) = t", [this](Status& status) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P r = parse<P>(o_.r);
        const auto found = search_retraction_for(r, o_.deg_bound);
        json out = {{"r", print(r)}, {"deg_bound", o_.deg_bound}, {"found", found.has_value()}};
        if (!found) {
          status = Status::not_found_within_bound;
          return out;
        }
        out["a"] = print_uni(found->a);
        out["b"] = print_uni(found->b);
        out["certificate"] = certificate_json(found->certificate);
        return out;
      });
    });
    ring(sub);
    poly(sub, "--r", o_.r, "Generator");
    sub->add_option("--deg-bound", o_.deg_bound, "Degree bound on A and B")->capture_default_str();

    sub = command("check-canonical", "Whether r = x + w with w in the ideal of y", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P r = parse<P>(o_.r);
        const auto c = canonical_form_check(r);
        return {{"r", print(r)}, {"canonical", c.canonical}, {"w", print(c.w)}};
      });
    });
    ring(sub);
    poly(sub, "--r", o_.r, "Generator");
  }

  void build_testelem() {
    auto* sub = command("certify", "Test-element certification", [this](Status&) {
      SearchConfig config;
      config.retraction_deg_bound = o_.deg_bound;
      config.orbit_samples = o_.samples;
      config.seed = o_.seed;
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P p = parse<P>(o_.p);
        const auto c = certify_test_element(p, config);
        json inners = json::array();
        for (const auto& r : c.report.inners_found) inners.push_back(print(r));
        json out = {{"p", print(p)},
                    {"verdict", to_string(c.verdict)},
                    {"stage", c.stage},
                    {"reason", c.reason},
                    {"report",
                     {{"divisors_tried", c.report.divisors_tried},
                      {"inners_found", inners},
                      {"retraction_deg_bound", c.report.retraction_deg_bound},
                      {"orbit_samples", c.report.orbit_samples},
                      {"orbit_samples_skipped", c.report.orbit_samples_skipped},
                      {"exhaustive", c.report.exhaustive}}}};
        out["certificate"] = c.certificate ? certificate_json(*c.certificate) : json(nullptr);
        return out;
      });
    });
    ring(sub);
    poly(sub, "--p", o_.p, "Element");
    sub->add_option("--deg-bound", o_.deg_bound, "Retraction search degree bound")->capture_default_str();
    sub->add_option("--samples", o_.samples, "Automorphism samples")->capture_default_str();
    sub->add_option("--seed", o_.seed, "Random seed")->capture_default_str();

    sub = command("orbit-falsify", "Retraction that breaks the automorphic orbit of f(r)", [this](Status&) {
      return by_ring(o_.ring_tag(), [&]<class P>() -> json {
        const P r = parse<P>(o_.r);
        const UniPoly f = parse_uni(o_.uni_f);
        const auto rep = orbit_falsifier(r, f);
        json out = {{"r", print(rep.r)},
                    {"f", print_uni(f)},
                    {"w", print(rep.w)},
                    {"case", to_string(rep.case_tag)},
                    {"m", rep.m},
                    {"alpha", endo_json(rep.alpha)},
                    {"pi", endo_json(Endomorphism<P>(r, P()))},
                    {"result", print(rep.result)},
                    {"expected", print(rep.expected)},
                    {"result_outer", print_uni(rep.result_outer)},
                    {"affine_check", rep.affine_check}};
        out["divisor_test"] = rep.divisor_test ? json(print(*rep.divisor_test)) : json(nullptr);
        if (rep.affine_check) throw TheoremInconsistency("pi(alpha(f(r))) is an affine reparametrization of f(r)");
        return out;
      });
    });
    ring(sub);
    poly(sub, "--r", o_.r, "Generator in canonical form");
    poly(sub, "--f", o_.uni_f, "Univariate polynomial in t");

    sub = command("injection-check", "Injective phi fixing p must be an automorphism", [this](Status& status) -> json {
      const AnyEndo phi = o_.endo();
      return std::visit(
          [&](const auto& e) -> json {
            using P = typename std::decay_t<decltype(e)>::Poly;
            const P p = parse<P>(o_.p);
            const auto rep = verify_theorem_injection(e, p);
            if (rep.verdict == InjectionVerdict::inconsistent) status = Status::theorem_inconsistency;
            return {{"phi", endo_json(e)},
                    {"p", print(p)},
                    {"verdict", to_string(rep.verdict)},
                    {"automorphism", rep.automorphism},
                    {"outer_rank_two_certified", rep.outer_rank_two_certified},
                    {"reason", rep.reason}};
          },
          phi);
    });
    endo(sub);
    poly(sub, "--p", o_.p, "Fixed element");
  }

  CLI::App app_{"Exact computations in the rank-two free associative and polynomial algebras over Q", "retractkit"};
  Options o_;
  bool pretty_ = false;
  std::map<std::string, Handler> handlers_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Dispatcher dispatcher;
  return dispatcher.run(args);
}

}  // namespace retractkit::cli
