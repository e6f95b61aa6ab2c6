#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/text.hpp"
#include "mptheta/theta.hpp"
#include "mptheta/universe.hpp"
#include "mptheta/verdicts.hpp"

namespace mptheta {

struct PropertyReport {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && checked > 0; }

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline PropertyReport check_route_equivalence(const std::vector<LanglandsDatum>& data) {
  PropertyReport r;
  r.name = "route equivalence";
  for (const auto& d : data) {
    ++r.checked;
    if (is_generic_lq(d).generic != is_generic_lq_via_coeff(d).generic) r.fail(render(d));
  }
  return r;
}

inline std::vector<LanglandsDatum> generic_subset(const std::vector<LanglandsDatum>& data) {
  std::vector<LanglandsDatum> out;
  for (const auto& d : data)
    if (is_generic_lq(d).generic) out.push_back(d);
  return out;
}

inline PropertyReport check_conservation(const std::vector<LanglandsDatum>& generic, const QuadChar& chi) {
  PropertyReport r;
  r.name = "conservation" + std::string(chi.is_trivial() ? "" : " (chi:" + chi.joined() + ")");
  for (const auto& d : generic) {
    ++r.checked;
    auto fo = first_occurrence(d, chi);
    long long n = d.rank();
    if (fo.m_down + fo.m_up != 4 * n + 4 || fo.down != Branch::split || fo.m_down > fo.m_up) r.fail(render(d));
  }
  return r;
}

namespace detail {

/// True when `longer` equals `shorter` plus one nu^x with x > 0.
inline bool one_nu_inserted(const std::vector<Segment>& shorter, const std::vector<Segment>& longer) {
  if (longer.size() != shorter.size() + 1) return false;
  std::vector<bool> used(longer.size(), false);
  for (const auto& s : shorter) {
    bool found = false;
    for (std::size_t i = 0; i < longer.size() && !found; ++i)
      if (!used[i] && longer[i] == s) used[i] = found = true;
    if (!found) return false;
  }
  for (std::size_t i = 0; i < longer.size(); ++i)
    if (!used[i]) return longer[i].rho.is_trivial() && longer[i].length() == 1 && longer[i].b > HalfInt(0);
  return false;
}

inline bool has_nu(const std::vector<Segment>& f, const HalfInt& x) {
  for (const auto& s : f)
    if (s.rho.is_trivial() && s.b == x && s.a == x) return true;
  return false;
}

}  // namespace detail

/// Rank accounting, zero above first occurrence, monotone chains, standard form, and
/// no nu^1/2 with nu^3/2 in outputs claimed to have an irreducible standard module.
inline PropertyReport check_lift_properties(const std::vector<LanglandsDatum>& generic, int depth,
                                            const QuadChar& chi) {
  PropertyReport r;
  r.name = "lift properties" + std::string(chi.is_trivial() ? "" : " (chi:" + chi.joined() + ")");
  for (const auto& d : generic) {
    long long n = d.rank();
    std::vector<LiftResult> rows;
    try {
      rows = lift_table(d, chi, depth);
    } catch (const InvariantError& e) {
      r.fail(render(d) + ": " + e.what());
      continue;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& res = rows[k];
      auto where = [&] { return render(d) + " on " + branch_name(res.tower.branch) + " l=" + std::to_string(res.level) + ": "; };
      bool first = k == 0 || rows[k - 1].tower.branch != res.tower.branch;
      if (first) {
        ++r.checked;
        int above = res.level + 2;
        if (2 * n + 1 - above >= 1 && theta_lift(d, res.tower, above).datum) r.fail(where() + "nonzero above first occurrence");
      }
      const auto& cur = *res.datum;
      if (!in_standard_form(cur.gl_factors)) r.fail(where() + "non-standard form");
      if (res.irreducible_standard_claim && detail::has_nu(cur.gl_factors, HalfInt::half()) &&
          detail::has_nu(cur.gl_factors, HalfInt::frac(3, 2)))
        r.fail(where() + "nu^1/2 and nu^3/2 together");
      if (!first) {
        const auto& prev = *rows[k - 1].datum;
        bool same_symbol = prev.tempered == cur.tempered;
        bool chain_step = same_symbol && detail::one_nu_inserted(prev.gl_factors, cur.gl_factors);
        bool theta2_step = prev.tempered.level == 2 && cur.tempered.level == 0 && prev.gl_factors == cur.gl_factors;
        if (!chain_step && !theta2_step) r.fail(where() + "chain broken");
      }
    }
  }
  return r;
}

/// Inputs whose standard module is irreducible never contain both nu^1/2 and nu^3/2.
inline PropertyReport check_smc_inputs(const std::vector<LanglandsDatum>& generic) {
  PropertyReport r;
  r.name = "no nu^1/2 with nu^3/2 in irreducible standard modules";
  for (const auto& d : generic) {
    if (standard_module_reducible(d).reducible) continue;
    ++r.checked;
    if (detail::has_nu(d.gl_factors, HalfInt::half()) && detail::has_nu(d.gl_factors, HalfInt::frac(3, 2)))
      r.fail(render(d));
  }
  return r;
}

}  // namespace mptheta
