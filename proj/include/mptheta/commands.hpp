#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/gamma.hpp"
#include "mptheta/json_io.hpp"
#include "mptheta/properties.hpp"
#include "mptheta/text.hpp"
#include "mptheta/theta.hpp"
#include "mptheta/verdicts.hpp"

namespace mptheta::cli {

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 parse/validation, 2 invariant breach
  json body;
  std::string text;
};

inline LanglandsDatum read_datum(const std::string& expr) {
  LanglandsDatum d = normalize_datum(parse_datum(expr));
  require_valid(d);
  return d;
}

inline QuadChar read_chi(const std::string& label) {
  if (label.empty() || label == "1") return QuadChar::trivial();
  std::string l = label.rfind("chi:", 0) == 0 ? label.substr(4) : label;
  return parse_cuspidal("chi:" + l).twist;
}

/// "split", "nonsplit", "chi:LABEL", "chi:LABEL:split", "chi:LABEL:nonsplit".
inline Tower read_tower(const std::string& spec) {
  Tower t;
  std::string rest = spec;
  if (rest.rfind("chi:", 0) == 0) {
    std::string body = rest.substr(4);
    auto colon = body.find(':');
    std::string label = colon == std::string::npos ? body : body.substr(0, colon);
    rest = colon == std::string::npos ? "split" : body.substr(colon + 1);
    t.chi_v = read_chi(label);
  }
  if (rest == "split") {
    t.branch = Branch::split;
  } else if (rest == "nonsplit") {
    t.branch = Branch::nonsplit;
  } else {
    throw ValidationError("unknown tower '" + spec + "' (split, nonsplit, chi:LABEL[:split|:nonsplit])");
  }
  return t;
}

/// "l" as an even integer, or "m=<odd>".
inline int read_level(const std::string& spec, long long n) {
  try {
    if (spec.rfind("m=", 0) == 0) {
      long long m = std::stoll(spec.substr(2));
      require(m >= 1 && m % 2 == 1, "m must be odd and >= 1");
      return static_cast<int>(2 * n + 1 - m);
    }
    std::size_t used = 0;
    int l = std::stoi(spec, &used);
    require(used == spec.size(), "bad level '" + spec + "'");
    return l;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ValidationError*>(&e)) throw;
    throw ValidationError("bad level '" + spec + "'");
  }
}

inline Outcome classify(const std::string& expr) {
  LanglandsDatum d = read_datum(expr);
  Outcome o;
  auto a = is_generic_lq(d);
  auto b = is_generic_lq_via_coeff(d);
  o.body = {{"input", render(d)},
            {"generic", a.generic},
            {"generic_via_coeff", b.generic},
            {"witnesses", to_json(a.witnesses)},
            {"coeff_witnesses", to_json(b.witnesses)},
            {"notes", a.notes},
            {"local_coefficient", to_json(local_coeff_report(d))}};
  if (a.generic && d.tempered.flavor == Flavor::metaplectic) {
    auto r = standard_module_reducible(d);
    o.body["standard_reducible"] = r.reducible;
    o.body["reducibility_witnesses"] = to_json(r.witnesses);
    o.body["transfer_generic"] = generic_transfer_is_generic(d);
  } else {
    o.body["standard_reducible"] = nullptr;
  }
  o.text = render(d) + ": " + (a.generic ? "generic" : "not generic");
  for (const auto& w : a.witnesses) o.text += "\n  " + w.condition;
  if (a.generic && o.body["standard_reducible"].is_boolean())
    o.text += std::string("\n  standard module ") + (o.body["standard_reducible"].get<bool>() ? "reducible" : "irreducible");
  if (a.generic != b.generic) {
    o.exit_code = 2;
    o.body["error"] = "route A and route B disagree";
    o.text += "\n  INVARIANT BREACH: route A and route B disagree";
  }
  return o;
}

inline Outcome occurrence(const std::string& expr, const std::string& chi) {
  LanglandsDatum d = read_datum(expr);
  auto fo = first_occurrence(d, read_chi(chi));
  Outcome o;
  o.body = {{"input", render(d)}, {"first_occurrence", to_json(fo)}};
  o.text = render(d) + ": l=" + std::to_string(fo.l) + " m_down=" + std::to_string(fo.m_down) +
           " m_up=" + std::to_string(fo.m_up);
  return o;
}

inline std::string lift_line(const LiftResult& r) {
  std::string s = std::string(branch_name(r.tower.branch)) + " m=" + std::to_string(r.m) + " l=" +
                  std::to_string(r.level) + ": ";
  s += r.datum ? render(*r.datum) : std::string("0");
  if (r.extrapolated) s += "  [extrapolated]";
  return s;
}

inline Outcome lift(const std::string& expr, const std::string& tower, const std::string& level) {
  LanglandsDatum d = read_datum(expr);
  Tower t = read_tower(tower);
  auto r = theta_lift(d, t, read_level(level, d.rank()));
  Outcome o;
  o.body = {{"input", render(d)}, {"lifts", json::array({to_json(r)})}};
  o.text = lift_line(r);
  return o;
}

inline Outcome table(const std::string& expr, const std::string& chi, int depth) {
  LanglandsDatum d = read_datum(expr);
  QuadChar q = read_chi(chi);
  auto rows = lift_table(d, q, depth);
  Outcome o;
  json lifts = json::array();
  o.text = render(d);
  for (const auto& r : rows) {
    lifts.push_back(to_json(r));
    o.text += "\n  " + lift_line(r);
  }
  o.body = {{"input", render(d)}, {"first_occurrence", to_json(first_occurrence(d, q))}, {"lifts", lifts}};
  return o;
}

inline json terms_json(const std::vector<ElementaryTerm>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back({{"factor", t.factor}, {"argument", t.at}, {"order", t.order}});
  return arr;
}

/// kinds: std SEG | rs SEG SEG | sym2 SEG | param PARAM SEG | coeff SEG TEMPERED [orthogonal]
inline Outcome gamma_ord(const std::string& kind, const std::vector<std::string>& args, const std::string& at) {
  HalfInt u0 = parse_whole<HalfInt>(at, [](TextParser& p) { return p.half(); });
  auto need = [&](std::size_t k) {
    require(args.size() >= k, "gamma-ord " + kind + " needs " + std::to_string(k) + " argument(s)");
  };
  Outcome o;
  long long order = 0;
  json terms = json::array();
  if (kind == "std") {
    need(1);
    Segment s = parse_segment(args[0]);
    order = ord_gamma_std(s, u0);
    terms = terms_json(breakdown_std(s, u0));
  } else if (kind == "rs") {
    need(2);
    Segment s1 = parse_segment(args[0]), s2 = parse_segment(args[1]);
    order = ord_gamma_rs(s1, s2, u0);
    terms = terms_json(breakdown_rs(s1, s2, u0));
  } else if (kind == "sym2") {
    need(1);
    Segment s = parse_segment(args[0]);
    order = ord_gamma_sym2(s, u0);
    terms = terms_json(breakdown_sym2(s, u0));
  } else if (kind == "param") {
    need(2);
    LParameter p = parse_param(args[0]);
    Segment s = parse_segment(args[1]);
    order = ord_gamma_vs_parameter(p, s, u0);
    for (const auto& it : p.items())
      for (auto t : breakdown_rs(s, summand_segment(it.rho, it.a), u0)) {
        t.order *= it.mult;
        terms.push_back({{"factor", t.factor}, {"argument", t.at}, {"order", t.order}});
      }
  } else if (kind == "coeff") {
    need(2);
    Segment s = parse_segment(args[0]);
    TemperedRep t = parse_tempered(args[1]);
    CoeffMode mode = args.size() > 2 && args[2] == "orthogonal" ? CoeffMode::orthogonal : CoeffMode::metaplectic;
    require(args.size() <= 2 || args[2] == "orthogonal" || args[2] == "metaplectic", "mode must be metaplectic or orthogonal");
    auto b = local_coeff_breakdown(s, t, mode, u0);
    order = b.total();
    terms.push_back({{"factor", "gamma(Delta, Sym2, 2u)"}, {"order", b.sym2}});
    terms.push_back({{"factor", "gamma(sigma x Delta, u)"}, {"order", b.vs_param}});
    terms.push_back({{"factor", "1/gamma(Delta, u+1/2)"}, {"order", -b.std_denom}});
  } else {
    throw ValidationError("unknown gamma kind '" + kind + "' (std, rs, sym2, param, coeff)");
  }
  o.body = {{"kind", kind}, {"at", u0.twice_str()}, {"order", order}, {"terms", terms}};
  o.text = "ord_" + kind + " at " + u0.str() + " = " + std::to_string(order);
  for (const auto& t : terms) o.text += "\n  " + t["factor"].get<std::string>() + ": " + std::to_string(t["order"].get<long long>());
  return o;
}

inline Outcome selftest(int depth = 4) {
  auto data = universe_data();
  auto generic = generic_subset(data);
  std::vector<PropertyReport> reps;
  reps.push_back(check_route_equivalence(data));
  reps.push_back(check_conservation(generic, QuadChar::trivial()));
  reps.push_back(check_conservation(generic, QuadChar::named("b")));
  reps.push_back(check_lift_properties(generic, depth, QuadChar::trivial()));
  reps.push_back(check_lift_properties(generic, depth, QuadChar::named("b")));
  reps.push_back(check_smc_inputs(generic));
  Outcome o;
  json arr = json::array();
  for (const auto& r : reps) {
    arr.push_back({{"property", r.name}, {"pass", r.pass()}, {"checked", r.checked}, {"failures", r.failures},
                   {"first_failure", r.first_failure}});
    o.text += std::string(r.pass() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checked) + " checked)\n";
    if (!r.pass()) o.exit_code = 2;
  }
  o.body = {{"universe", data.size()}, {"generic", generic.size()}, {"properties", arr}};
  return o;
}

}  // namespace mptheta::cli
