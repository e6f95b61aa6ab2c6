#include <catch_amalgamated.hpp>

#include "mptheta/mptheta.hpp"
#include "oracles.hpp"

using namespace mptheta;

namespace {

LanglandsDatum datum(const char* t) { return normalize_datum(parse_datum(t)); }
HalfInt h(long long num, long long den = 1) { return HalfInt::frac(num, den); }

const std::vector<LanglandsDatum>& universe() {
  static const auto data = universe_data();
  return data;
}

}  // namespace

TEST_CASE("parameter fixtures") {
  auto r = validate_parameter(parse_param("{1*S2}"));
  CHECK(r.ok);
  CHECK(r.rank == 1);
  CHECK(r.discrete);
  CHECK_FALSE(validate_parameter(parse_param("{1*S3}")).ok);
  CHECK(validate_parameter(parse_param("{rho:s:2:s*S1,1*S2}")).rank == 2);
}

TEST_CASE("l of tempered") {
  CHECK(l_of_tempered(mu0()) == 0);
  auto s = parse_tempered("T{1*S2}");
  CHECK(l_of_tempered(s) == 2);
  CHECK(l_of_tempered(s, QuadChar::named("a")) == 0);
}

TEST_CASE("genericity fixtures") {
  CHECK(is_generic_lq(datum("L(St(1) v^1/2; T{})")).generic);
  CHECK_FALSE(is_generic_lq(datum("L(St(1) v^1/2; T{}) twist chi:a")).generic);
  auto v = is_generic_lq(datum("L(St(2) v^1; T{1*S2})"));
  CHECK_FALSE(v.generic);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].condition == "a=2 < 4s=4");
  CHECK(v.witnesses[0].factors == std::vector<int>{1});
  CHECK_FALSE(is_generic_lq(datum("L(St(1) v^1/2, St(1) v^1/2; T{})")).generic);
  CHECK(is_generic_lq_via_coeff(datum("L(St(1) v^1/2; T{})")).generic);
  CHECK_FALSE(is_generic_lq_via_coeff(datum("L(St(2) v^1; T{1*S2})")).generic);
}

TEST_CASE("primjer family") {
  for (int m = 0; m <= 3; ++m) {
    LanglandsDatum d{{Segment(Cuspidal::trivial(), h(1, 2), h(2 * m + 1, 2))}, mu0(), {}};
    CHECK(is_generic_lq(d).generic);
    CHECK(standard_module_reducible(d).reducible);
    CHECK_FALSE(mp_rank1_irreducible(d.gl_factors[0], mu0()));
    d.psi_twist = QuadChar::named("a");
    CHECK_FALSE(is_generic_lq(d).generic);
    CHECK_FALSE(is_generic_lq_via_coeff(d).generic);
  }
}

TEST_CASE("rank-one and standard-module fixtures") {
  CHECK(mp_rank1_irreducible(steinberg(2, h(1)), parse_tempered("T{1*S4}")));
  CHECK_FALSE(mp_rank1_irreducible(steinberg(2, h(1)), parse_tempered("T{1*S6}")));
  CHECK(mp_rank1_irreducible(steinberg(1, h(1, 2)), parse_tempered("T{1*S2}")));
  CHECK_FALSE(standard_module_reducible(datum("L(St(2) v^1; T{1*S4})")).reducible);
  CHECK(standard_module_reducible(datum("L(St(2) v^1; T{1*S6})")).reducible);
  CHECK_FALSE(standard_module_reducible(datum("L(St(1) v^1/2; T{1*S2})")).reducible);
  CHECK(standard_module_reducible(datum("L(St(1) v^1/2; T{})")).reducible);
  CHECK_THROWS_AS(standard_module_reducible(datum("L(St(2) v^1; T{1*S2})")), ValidationError);
}

TEST_CASE("transfer") {
  auto d = datum("L(St(1) v^1/2; T{})");
  auto t = theta_psi_transfer(d);
  CHECK(t.tempered.flavor == Flavor::odd_orthogonal);
  CHECK(t.gl_factors == d.gl_factors);
  CHECK(theta_psi_transfer(t) == d);
  CHECK_FALSE(generic_transfer_is_generic(d));
  CHECK(generic_transfer_is_generic(datum("T{1*S2}")));
  CHECK(generic_transfer_is_generic(datum("L(D(rho:c:1:n;1/2,3/2); T{})")));
  CHECK_FALSE(is_generic_lq(datum("L(D(chi:a;1/2,3/2); T{chi:a*S4})")).generic);
}

TEST_CASE("cuspidal reducibility fixtures") {
  auto r = cuspidal_reducibility_point(Cuspidal::trivial(), LParameter{}, false);
  CHECK(r.point == h(1, 2));
  CHECK(r.position == GenericPosition::quotient);
  r = cuspidal_reducibility_point(Cuspidal::trivial(), parse_param("{1*S2}"), true);
  CHECK(r.point == h(3, 2));
  CHECK(r.position == GenericPosition::subrepresentation);
  auto s = Cuspidal::make("s", 2, SelfDual::symplectic);
  r = cuspidal_reducibility_point(s, parse_param("{rho:s:2:s*S1}"), false);
  CHECK(r.point == h(1));
  r = cuspidal_reducibility_point(s, LParameter{}, false);
  CHECK(r.on_unitary_axis);
  CHECK_THROWS_AS(cuspidal_reducibility_point(Cuspidal::make("r", 1, SelfDual::none), LParameter{}, false),
                  ValidationError);
  CHECK_THROWS_AS(cuspidal_reducibility_point(Cuspidal::trivial(), parse_param("{1*S2}"), false), ValidationError);
  CHECK_THROWS_AS(cuspidal_reducibility_point(s, parse_param("{rho:s:2:s*S1,rho:s:2:s*S3}"), false), ValidationError);
  r = cuspidal_reducibility_point(Cuspidal::chi("a"), parse_param("{chi:a*S2}"), false);
  CHECK(r.point == h(3, 2));
  CHECK(r.position == GenericPosition::subrepresentation);
}

TEST_CASE("cuspidal reducibility points match the Plancherel scan") {
  auto s = Cuspidal::make("s", 2, SelfDual::symplectic);
  std::vector<Cuspidal> taus = {Cuspidal::trivial(), Cuspidal::chi("a"), s};
  std::vector<const char*> params = {"{}", "{1*S2}", "{rho:s:2:s*S1}", "{1*S2,rho:s:2:s*S1}", "{chi:a*S2}",
                                     "{rho:t:4:s*S1}", "{1*S2,chi:a*S2,rho:s:2:s*S1}", "{1*S2,chi:a*S2}"};
  for (const auto& tau : taus)
    for (const char* p : params) {
      LParameter phi = parse_param(p);
      auto r = cuspidal_reducibility_point(tau, phi, phi.contains(Cuspidal::trivial(), 2));
      INFO(render(tau) << " over " << p);
      CHECK(oracle::plancherel_point2(tau, phi) == r.point.twice_ll());
    }
}

TEST_CASE("discrete series embeddings") {
  auto e = discrete_series_embedding(parse_param("{1*S2,1*S4}"));
  REQUIRE(e.segments.size() == 1);
  CHECK(e.segments[0] == Segment(Cuspidal::trivial(), h(-1, 2), h(3, 2)));
  e = discrete_series_embedding(parse_param("{1*S2}"));
  REQUIRE(e.segments.size() == 1);
  CHECK(e.segments[0] == steinberg(1, h(1, 2)));
  e = discrete_series_embedding(parse_param("{rho:s:2:s*S1}"));
  CHECK(e.segments.empty());
  CHECK(e.residual.dim() == 2);
  CHECK_THROWS_AS(discrete_series_embedding(parse_param("{1*S2^2}")), ValidationError);
}

TEST_CASE("universe: both routes and the term-by-term oracle agree") {
  long long mismatches = 0, oracle_mismatches = 0;
  for (const auto& d : universe()) {
    bool a = is_generic_lq(d).generic;
    if (a != is_generic_lq_via_coeff(d).generic) ++mismatches;
    if (a != (oracle::datum_coeff(d) >= 0)) ++oracle_mismatches;
  }
  CHECK(universe().size() == 50616);
  CHECK(mismatches == 0);
  CHECK(oracle_mismatches == 0);
}

TEST_CASE("universe: generic data") {
  long long st_violations = 0, l2_reducible = 0, transfer_violations = 0, twist_violations = 0;
  for (const auto& d : universe()) {
    auto twisted = d;
    twisted.psi_twist = QuadChar::named("a");
    if (is_generic_lq(twisted).generic != is_generic_lq(untwisted(twisted)).generic) ++twist_violations;
    if (!is_generic_lq(d).generic) continue;
    int st = 0;
    for (const auto& s : d.gl_factors) st += is_trivial_steinberg_form(s);
    if (st > 1) ++st_violations;
    if (l_of_tempered(d.tempered) == 2 && standard_module_reducible(d).reducible) ++l2_reducible;
    if (generic_transfer_is_generic(d) && !is_generic_lq_via_coeff(theta_psi_transfer(d)).generic)
      ++transfer_violations;
  }
  CHECK(st_violations == 0);
  CHECK(l2_reducible == 0);
  CHECK(transfer_violations == 0);
  CHECK(twist_violations == 0);
}
