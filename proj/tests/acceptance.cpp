// Acceptance run: one PASS/FAIL line per criterion. Time limits are wall-clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "generators.hpp"
#include "mptheta/commands.hpp"
#include "oracles.hpp"

using namespace mptheta;

namespace {

constexpr double kPrimjerSeconds = 1.0;
constexpr double kRouteSeconds = 10.0;
constexpr double kLiftSeconds = 20.0;
constexpr int kGammaTrials = 1000;
constexpr int kRoundTrips = 200;
constexpr unsigned kSeed = 20240607;

int failures = 0;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

void criterion(int n, const std::string& name, double limit, const std::function<Check()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) {
    c.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  }
  if (!c.ok) ++failures;
  std::printf("%s %2d %s (%.2f s%s%s)\n", c.ok ? "PASS" : "FAIL", n, name.c_str(), secs,
              c.detail.empty() ? "" : "; ", c.detail.c_str());
}

LanglandsDatum datum(const std::string& t) { return normalize_datum(parse_datum(t)); }
HalfInt h(long long num, long long den = 1) { return HalfInt::frac(num, den); }

long long classify_breaches = 0;

}  // namespace

int main() {
  const auto universe = universe_data();
  std::vector<LanglandsDatum> generic;

  criterion(1, "primjer family m=0..3", kPrimjerSeconds, [] {
    Check c;
    for (int m = 0; m <= 3; ++m) {
      std::string seg = "D(1;1/2," + std::to_string(2 * m + 1) + "/2)";
      auto plain = cli::classify("L(" + seg + "; T{})");
      auto twisted = cli::classify("L(" + seg + "; T{}) twist chi:a");
      std::string at = " at m=" + std::to_string(m);
      c.expect(plain.body["generic"] == true, "generic(psi)" + at);
      c.expect(twisted.body["generic"] == false, "generic(psi_a)" + at);
      c.expect(plain.body["standard_reducible"] == true, "standard module" + at);
      auto p = plain.body["local_coefficient"]["rank_one"][0];
      auto q = twisted.body["local_coefficient"]["rank_one"][0];
      c.expect(p["sym2"] == -1 && q["sym2"] == -1, "numerator order" + at);
      c.expect(p["std_denominator"] == -1, "denominator order (psi)" + at);
      c.expect(q["std_denominator"] == 0, "denominator order (psi_a)" + at);
      classify_breaches += (plain.exit_code == 2) + (twisted.exit_code == 2);
    }
    return c;
  });

  criterion(2, "standard-module boundary", 0, [] {
    Check c;
    auto red = [](const char* t) { return standard_module_reducible(datum(t)).reducible; };
    c.expect(!red("L(St(2) v^1; T{1*S4})"), "St(2) v^1 over {1*S4}");
    c.expect(red("L(St(2) v^1; T{1*S6})"), "St(2) v^1 over {1*S6}");
    c.expect(!red("L(St(1) v^1/2; T{1*S2})"), "v^1/2 over {1*S2}");
    c.expect(red("L(St(1) v^1/2; T{})"), "v^1/2 over {}");
    return c;
  });

  criterion(3, "genericity constraint a >= 4s", 0, [] {
    Check c;
    for (const char* t : {"L(St(2) v^1; T{1*S2})", "L(St(2) v^1; T{1*S2,1*S4})", "L(St(2) v^1; T{1*S2,chi:a*S2})"}) {
      auto v = is_generic_lq(datum(t));
      bool found = false;
      for (const auto& w : v.witnesses) found = found || w.condition == "a=2 < 4s=4";
      c.expect(!v.generic && found, t);
    }
    return c;
  });

  criterion(4, "route equivalence over " + std::to_string(universe.size()) + " data", kRouteSeconds, [&] {
    Check c;
    auto r = check_route_equivalence(universe);
    c.expect(r.pass(), std::to_string(r.failures) + " mismatches, first " + r.first_failure);
    classify_breaches += r.failures;
    generic = generic_subset(universe);
    return c;
  });

  criterion(5, "conservation over the generic universe", 0, [&] {
    Check c;
    auto r = check_conservation(generic, QuadChar::trivial());
    c.expect(r.pass(), std::to_string(r.failures) + " violations, first " + r.first_failure);
    c.detail = c.ok ? std::to_string(r.checked) + " generic data" : c.detail;
    return c;
  });

  criterion(6, "first-occurrence fixtures", 0, [] {
    Check c;
    auto a = first_occurrence(datum("T{}"));
    c.expect(a.m_down == 1 && a.m_up == 3 && a.down == Branch::split, "mu_0");
    auto b = first_occurrence(datum("L(St(1) v^1/2; T{})"));
    c.expect(b.m_down == 1 && b.m_up == 7 && b.l == 2, "omega_psi^+");
    c.expect(first_occurrence(datum("T{1*S2}")).l == 2, "phi = {1*S2}");
    return c;
  });

  criterion(7, "lift fixtures", 0, [] {
    Check c;
    auto w = datum("L(St(1) v^1/2; T{})");
    const Tower split{{}, Branch::split}, nonsplit{{}, Branch::nonsplit};
    auto is = [](const LiftResult& r, std::vector<Segment> gl, int level, const std::string& param) {
      return r.datum && r.datum->gl_factors == gl && r.datum->tempered.level == level && r.datum->tempered.param &&
             *r.datum->tempered.param == parse_param(param);
    };
    c.expect(is(theta_lift(w, split, 2), {}, 0, "{}"), "theta_2(omega)");
    c.expect(is(theta_lift(w, split, 0), {steinberg(1, h(1, 2))}, 0, "{}"), "theta_0(omega)");
    c.expect(is(theta_lift(w, nonsplit, -4), {steinberg(2, h(1))}, -2, "{1*S2}"), "theta_-4(omega)");
    auto s = datum("L(St(2) v^1; T{1*S4})");
    c.expect(is(theta_lift(s, split, 0), {steinberg(2, h(1))}, 0, "{1*S4}"), "St(2) v^1 over {1*S4}, l=0");
    c.expect(is(theta_lift(s, nonsplit, -2), {steinberg(2, h(1))}, -2, "{1*S2,1*S4}"), "St(2) v^1 over {1*S4}, l=-2");
    return c;
  });

  criterion(8, "lift properties, depth 4, both branches", kLiftSeconds, [&] {
    Check c;
    for (auto r : {check_lift_properties(generic, 4, QuadChar::trivial()), check_smc_inputs(generic)})
      c.expect(r.pass(), r.name + ": " + std::to_string(r.failures) + " violations, first " + r.first_failure);
    return c;
  });

  criterion(9, "gamma orders against brute force (" + std::to_string(kGammaTrials) + " trials)", 0, [] {
    Check c;
    std::mt19937 g(kSeed);
    std::vector<Cuspidal> bases = {Cuspidal::trivial(), Cuspidal::chi("a"), Cuspidal::make("s", 2, SelfDual::symplectic),
                                   Cuspidal::make("r", 2, SelfDual::none)};
    bases.push_back(dual(bases.back()));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(bases.size()) - 1), len(1, 4), s2(-6, 6), u2(-8, 8);
    auto random_segment = [&] {
      int k = len(g);
      int c2 = s2(g);
      return Segment(bases[pick(g)], HalfInt::from_twice(c2 - (k - 1)), HalfInt::from_twice(c2 + (k - 1)));
    };
    long long bad = 0;
    for (int i = 0; i < kGammaTrials; ++i) {
      Segment x = random_segment(), y = random_segment();
      long long u = u2(g);
      HalfInt uh = HalfInt::from_twice(u);
      bad += ord_gamma_rs(x, y, uh) != oracle::rs(x, y, u);
      bad += ord_gamma_sym2(x, uh) != oracle::sym2(x, u);
      bad += ord_gamma_std(x, uh) != oracle::std_gamma(x, u);
    }
    c.expect(bad == 0, std::to_string(bad) + " mismatches");
    return c;
  });

  criterion(10, "CLI round-trip (" + std::to_string(kRoundTrips) + ") and no classify exit 2", 0, [&] {
    Check c;
    std::mt19937 g(kSeed);
    int done = 0;
    while (done < kRoundTrips) {
      std::string text = gen::expression(g);
      RepExpr e;
      try {
        e = parse_rep(text);
      } catch (const ParseError&) {
        continue;
      }
      ++done;
      std::string once = render(e);
      c.expect(parse_rep(once) == e && render(parse_rep(once)) == once, "round-trip of " + text);
    }
    for (const auto& d : universe) {
      try {
        classify_breaches += cli::classify(render(d)).exit_code == 2;
      } catch (const InvariantError&) {
        ++classify_breaches;
      }
    }
    c.expect(classify_breaches == 0, std::to_string(classify_breaches) + " exit-2 outcomes");
    return c;
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
