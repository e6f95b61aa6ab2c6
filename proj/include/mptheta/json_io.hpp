#pragma once

#include <json.hpp>

#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"
#include "mptheta/text.hpp"
#include "mptheta/theta.hpp"
#include "mptheta/verdicts.hpp"

namespace mptheta {

using nlohmann::json;

// Half-integers are always serialized as "p/2" strings.

inline json to_json(const Segment& s) { return {{"rho", render(s.rho)}, {"b", s.b.twice_str()}, {"a", s.a.twice_str()}}; }

inline json to_json(const LParameter& p) {
  json arr = json::array();
  for (const auto& it : p.items()) arr.push_back({{"rho", render(it.rho)}, {"a", it.a}, {"mult", it.mult}});
  return arr;
}

inline json to_json(const std::vector<Witness>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back({{"condition", w.condition}, {"factors", w.factors}});
  return arr;
}

inline json to_json(const LiftSymbol& t) {
  return {{"symbol", "theta"},
          {"level", t.level},
          {"source", t.source},
          {"param", t.param ? to_json(*t.param) : json(nullptr)},
          {"param_dim", t.param_dim},
          {"st2_prefix", t.st2_prefix}};
}

inline std::string tower_chi_text(const QuadChar& q) { return q.is_trivial() ? "1" : "chi:" + q.joined(); }

inline json to_json(const LiftResult& r) {
  json j = {{"branch", branch_name(r.tower.branch)},
            {"chi_v", tower_chi_text(r.tower.chi_v)},
            {"l", r.level},
            {"m", r.m},
            {"zero", !r.datum.has_value()},
            {"extrapolated", r.extrapolated},
            {"rule", r.rule}};
  if (r.datum) {
    json gl = json::array();
    for (const auto& s : r.datum->gl_factors) gl.push_back(to_json(s));
    j["gl_factors"] = gl;
    j["tempered"] = to_json(r.datum->tempered);
    j["text"] = render(*r.datum);
  }
  return j;
}

inline json to_json(const FirstOccurrence& fo) {
  return {{"l", fo.l}, {"m_down", fo.m_down}, {"m_up", fo.m_up}, {"down_branch", branch_name(fo.down)}};
}

inline json to_json(const CoeffReport& r) {
  json pairs = json::array();
  for (const auto& [ij, o] : r.pairs) pairs.push_back({{"factors", {ij.first, ij.second}}, {"order", o}});
  json ranks = json::array();
  for (std::size_t i = 0; i < r.rank_one.size(); ++i) {
    const auto& b = r.rank_one[i];
    ranks.push_back({{"factor", i + 1},
                     {"sym2", b.sym2},
                     {"vs_param", b.vs_param},
                     {"std_denominator", b.std_denom},
                     {"total", b.total()}});
  }
  return {{"total", r.total}, {"pairs", pairs}, {"rank_one", ranks}};
}

}  // namespace mptheta
