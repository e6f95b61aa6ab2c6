#include <catch_amalgamated.hpp>

#include "mptheta/mptheta.hpp"

using namespace mptheta;

namespace {

LanglandsDatum datum(const char* t) { return normalize_datum(parse_datum(t)); }
HalfInt h(long long num, long long den = 1) { return HalfInt::frac(num, den); }
Segment nu(HalfInt x) { return steinberg(1, x); }

const Tower split{{}, Branch::split};
const Tower nonsplit{{}, Branch::nonsplit};

const std::vector<LanglandsDatum>& generic_universe() {
  static const auto data = generic_subset(universe_data());
  return data;
}

}  // namespace

TEST_CASE("first occurrence fixtures") {
  auto fo = first_occurrence(datum("T{}"));
  CHECK(fo.l == 0);
  CHECK(fo.m_down == 1);
  CHECK(fo.m_up == 3);
  CHECK(fo.down == Branch::split);
  fo = first_occurrence(datum("L(St(1) v^1/2; T{})"));
  CHECK(fo.l == 2);
  CHECK(fo.m_down == 1);
  CHECK(fo.m_up == 7);
  CHECK(first_occurrence(datum("T{1*S2}")).l == 2);
  CHECK(first_occurrence(datum("L(St(1) v^2; T{1*S2})")).l == 2);
  fo = first_occurrence(datum("T{1*S2}"), QuadChar::named("a"));
  CHECK(fo.l == 0);
  CHECK(fo.m_down == 3);
  CHECK(fo.m_up == 5);
  CHECK_THROWS_AS(first_occurrence(datum("L(St(2) v^1; T{1*S2})")), ValidationError);
}

TEST_CASE("tempered lifts") {
  auto d = tempered_lift(mu0(), split, -6);
  REQUIRE(d);
  CHECK(d->gl_factors == std::vector<Segment>{nu(h(5, 2)), nu(h(3, 2)), nu(h(1, 2))});
  CHECK(d->tempered.level == 0);
  CHECK(d->tempered.param == LParameter{});

  d = tempered_lift(mu0(), nonsplit, -6);
  REQUIRE(d);
  CHECK(d->gl_factors == std::vector<Segment>{nu(h(5, 2)), nu(h(3, 2))});
  CHECK(d->tempered.level == -2);
  CHECK(d->tempered.param == parse_param("{1*S2}"));

  d = tempered_lift(parse_tempered("T{1*S2^2}"), nonsplit, -8);
  REQUIRE(d);
  CHECK(d->gl_factors == std::vector<Segment>{nu(h(7, 2)), nu(h(5, 2)), steinberg(3, h(1, 2))});
  CHECK(d->tempered.level == -2);
  CHECK(d->tempered.source == "sigma'");
  CHECK(d->tempered.param == parse_param("{1*S2}"));

  d = tempered_lift(parse_tempered("T{1*S2}"), nonsplit, -4);
  REQUIRE(d);
  CHECK(d->gl_factors.empty());
  CHECK(d->tempered.level == -4);
  CHECK(d->tempered.param == parse_param("{1*S2,1*S4}"));
  CHECK_FALSE(tempered_lift(parse_tempered("T{1*S2}"), nonsplit, -2));
}

TEST_CASE("first lifts of the even Weil representation") {
  auto w = datum("L(St(1) v^1/2; T{})");
  auto r = theta_lift(w, split, 2);
  REQUIRE(r.datum);
  CHECK(r.m == 1);
  CHECK(r.datum->gl_factors.empty());
  CHECK(r.datum->tempered.level == 0);

  r = theta_lift(w, split, 0);
  REQUIRE(r.datum);
  CHECK(r.m == 3);
  CHECK(r.datum->gl_factors == std::vector<Segment>{nu(h(1, 2))});
  CHECK(r.datum->tempered.level == 0);

  r = theta_lift(w, nonsplit, -4);
  REQUIRE(r.datum);
  CHECK(r.m == 7);
  CHECK(r.datum->gl_factors == std::vector<Segment>{steinberg(2, h(1))});
  CHECK(r.datum->tempered.level == -2);
  CHECK(r.datum->tempered.param == parse_param("{1*S2}"));
  CHECK_FALSE(theta_lift(w, nonsplit, -2).datum);
}

TEST_CASE("lifts with an irreducible standard module") {
  auto d = datum("L(St(2) v^1; T{1*S4})");
  auto r = theta_lift(d, split, 0);
  REQUIRE(r.datum);
  CHECK(r.datum->gl_factors == std::vector<Segment>{steinberg(2, h(1))});
  CHECK(r.datum->tempered.level == 0);
  CHECK(r.datum->tempered.param == parse_param("{1*S4}"));

  r = theta_lift(d, split, -2);
  REQUIRE(r.datum);
  CHECK(r.datum->gl_factors == std::vector<Segment>{steinberg(2, h(1)), nu(h(1, 2))});
  CHECK(r.datum->tempered.level == 0);
}

TEST_CASE("twisted towers") {
  auto a = QuadChar::named("a");
  auto w = datum("L(St(1) v^1/2; T{})");
  auto r = theta_lift(w, Tower{a, Branch::split}, 0);
  REQUIRE(r.datum);
  CHECK(r.datum->gl_factors == std::vector<Segment>{Segment(Cuspidal::chi("a"), h(1, 2), h(1, 2))});
  r = theta_lift(datum("T{1*S2}"), Tower{a, Branch::split}, 0);
  REQUIRE(r.datum);
  CHECK(r.extrapolated);
  CHECK_FALSE(r.datum->tempered.param);
}

TEST_CASE("lift tables") {
  auto rows = lift_table(datum("T{}"), QuadChar::trivial(), 2);
  std::vector<std::pair<Branch, long long>> got;
  for (const auto& r : rows) got.push_back({r.tower.branch, r.m});
  CHECK(got == std::vector<std::pair<Branch, long long>>{{Branch::split, 1},    {Branch::split, 3},
                                                         {Branch::split, 5},    {Branch::nonsplit, 3},
                                                         {Branch::nonsplit, 5}, {Branch::nonsplit, 7}});
  rows = lift_table(datum("L(St(1) v^1/2; T{})"), QuadChar::trivial(), 1);
  got.clear();
  for (const auto& r : rows) got.push_back({r.tower.branch, r.m});
  CHECK(got == std::vector<std::pair<Branch, long long>>{
                   {Branch::split, 1}, {Branch::split, 3}, {Branch::nonsplit, 7}, {Branch::nonsplit, 9}});
  CHECK(lift_table(datum("T{1*S2}"), QuadChar::trivial(), 0).size() == 2);
}

TEST_CASE("levels out of range") {
  auto w = datum("L(St(1) v^1/2; T{})");
  CHECK(theta_lift(w, split, 2).datum);
  CHECK_THROWS_AS(theta_lift(w, split, 4), ValidationError);
  CHECK_THROWS_AS(theta_lift(w, split, 1), ValidationError);
}

TEST_CASE("conservation over the generic universe") {
  for (const auto& chi : {QuadChar::trivial(), QuadChar::named("b")}) {
    auto r = check_conservation(generic_universe(), chi);
    INFO(r.first_failure);
    CHECK(r.pass());
  }
}

TEST_CASE("lift properties over the generic universe") {
  for (const auto& chi : {QuadChar::trivial(), QuadChar::named("b")}) {
    auto r = check_lift_properties(generic_universe(), 4, chi);
    INFO(r.first_failure);
    CHECK(r.pass());
  }
  auto r = check_smc_inputs(generic_universe());
  INFO(r.first_failure);
  CHECK(r.pass());
}

TEST_CASE("rank accounting on every emitted datum") {
  long long violations = 0;
  for (const auto& d : generic_universe()) {
    for (const auto& r : lift_table(d, QuadChar::trivial(), 2)) {
      long long gl = 0;
      for (const auto& s : r.datum->gl_factors) gl += s.gl_dim();
      if (2 * gl + r.datum->tempered.param_dim != r.m - 1) ++violations;
    }
  }
  CHECK(violations == 0);
}
