#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"
#include "mptheta/verdicts.hpp"

namespace mptheta {

enum class Branch { split, nonsplit };

inline const char* branch_name(Branch b) { return b == Branch::split ? "split" : "nonsplit"; }

struct Tower {
  QuadChar chi_v;
  Branch branch = Branch::split;
  friend bool operator==(const Tower&, const Tower&) = default;
};

struct FirstOccurrence {
  int l = 0;  // first level on the going-down branch
  long long m_down = 0;
  long long m_up = 0;
  Branch down = Branch::split;
};

/// theta_level(source) on the orthogonal side, optionally preceded by st2_prefix copies of St_2.
struct LiftSymbol {
  int level = 0;
  std::string source = "sigma";  // "sigma" or "sigma'" (sigma with every 1*S2 removed)
  std::optional<LParameter> param;  // absent when the parameter is not determined
  long long param_dim = 0;
  int st2_prefix = 0;
  friend bool operator==(const LiftSymbol&, const LiftSymbol&) = default;
};

struct LiftDatum {
  std::vector<Segment> gl_factors;
  LiftSymbol tempered;
  friend bool operator==(const LiftDatum&, const LiftDatum&) = default;
};

struct LiftResult {
  Tower tower;
  int level = 0;
  long long m = 0;
  std::optional<LiftDatum> datum;  // nullopt: the lift is zero
  bool extrapolated = false;       // chi_V tower shape not displayed in the source formulas
  bool irreducible_standard_claim = false;
  std::string rule;
};

namespace detail {

inline void require_metaplectic_generic(const LanglandsDatum& pi) {
  require(pi.tempered.flavor == Flavor::metaplectic, "theta lifts start from a metaplectic datum");
  require(is_generic_lq(pi).generic, "theta lifts are computed for generic data only");
}

/// nu^{(L-1)/2}, ..., nu^{low} (empty when (L-1)/2 < low).
inline std::vector<Segment> nu_chain(int L, const HalfInt& low) {
  std::vector<Segment> out;
  HalfInt top = HalfInt::from_twice(L - 1);
  for (HalfInt x = top; x >= low; x -= HalfInt(1)) out.push_back(Segment(Cuspidal::trivial(), x, x));
  return out;
}

inline std::optional<std::size_t> steinberg_index(const std::vector<Segment>& f) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (is_trivial_steinberg_form(f[i])) {
      ensure(!idx, "two trivial-Steinberg-form factors in a generic datum");
      idx = i;
    }
  return idx;
}

inline LiftSymbol symbol(int level, const std::optional<LParameter>& param, long long dim, std::string source = "sigma",
                         int st2 = 0) {
  LiftSymbol s;
  s.level = level;
  s.param = param;
  s.param_dim = dim;
  s.source = std::move(source);
  s.st2_prefix = st2;
  if (param) ensure(param->dim() == dim, "lift symbol dimension mismatch");
  return s;
}

}  // namespace detail

namespace detail {

// pi: untwisted, generic, metaplectic.
inline FirstOccurrence first_occurrence_unchecked(const LanglandsDatum& pi, const QuadChar& chi_v) {
  long long n = pi.rank();
  FirstOccurrence fo;
  if (!chi_v.is_trivial()) {
    fo.l = 0;
    fo.m_down = 2 * n + 1;
    fo.m_up = 2 * n + 3;
    return fo;
  }
  fo.l = l_of_tempered(pi.tempered);
  for (const auto& s : pi.gl_factors)
    if (s.rho.is_trivial() && s.b == HalfInt::half() && s.a == HalfInt::half()) fo.l = 2;
  fo.m_down = 2 * n + 1 - fo.l;
  fo.m_up = 4 * n + 4 - fo.m_down;
  ensure(fo.m_down + fo.m_up == 4 * n + 4, "conservation relation violated");
  return fo;
}

}  // namespace detail

inline FirstOccurrence first_occurrence(const LanglandsDatum& input, const QuadChar& chi_v = QuadChar::trivial()) {
  detail::require_metaplectic_generic(input);
  return detail::first_occurrence_unchecked(untwisted(input), chi_v);
}

/// First nonzero level on a branch.
inline int first_level(const FirstOccurrence& fo, long long n, Branch b) {
  long long m = b == fo.down ? fo.m_down : fo.m_up;
  return static_cast<int>(2 * n + 1 - m);
}

/// Lift of a tempered sigma; GL part of the result is the inserted nu-chain.
inline std::optional<LiftDatum> tempered_lift(const TemperedRep& sigma, const Tower& tower, int l) {
  require(sigma.flavor == Flavor::metaplectic, "tempered_lift expects a metaplectic sigma");
  require_valid(sigma);
  require(l % 2 == 0, "level must be even");
  const LParameter& phi = sigma.param;
  long long n = sigma.rank();
  require(2 * n + 1 - l >= 1, "level beyond the bottom of the tower");
  const Cuspidal one = Cuspidal::trivial();
  const int L = -l;
  LiftDatum out;
  if (!tower.chi_v.is_trivial()) {
    if (tower.branch == Branch::split) {
      if (l > 0) return std::nullopt;
      out.tempered = detail::symbol(0, std::nullopt, 2 * n);
      if (l < 0) out.gl_factors = detail::nu_chain(L, HalfInt::half());
    } else {
      if (l > -2) return std::nullopt;
      out.tempered = detail::symbol(-2, std::nullopt, 2 * n + 2);
      if (l < -2) out.gl_factors = detail::nu_chain(L, HalfInt::frac(3, 2));
    }
    return out;
  }
  int lsig = l_of_tempered(sigma);
  if (tower.branch == Branch::split) {
    if (l > lsig) return std::nullopt;
    if (l == 2) {
      LParameter p = phi;
      p.remove(one, 2);
      out.tempered = detail::symbol(2, p, 2 * n - 2);
      return out;
    }
    out.tempered = detail::symbol(0, phi, 2 * n);
    if (l < 0) out.gl_factors = detail::nu_chain(L, HalfInt::half());
    return out;
  }
  if (lsig == 0) {
    if (l > -2) return std::nullopt;
    LParameter p = phi;
    p.add(one, 2);
    out.tempered = detail::symbol(-2, p, 2 * n + 2);
    if (l < -2) out.gl_factors = detail::nu_chain(L, HalfInt::frac(3, 2));
    return out;
  }
  if (l > -4) return std::nullopt;
  int ms2 = phi.m_s2();
  ensure(ms2 >= 1, "l(sigma)=2 without 1*S2");
  out.gl_factors = detail::nu_chain(L, HalfInt::frac(5, 2));
  if (ms2 % 2 == 1) {
    LParameter p = phi;
    p.add(one, 4);
    out.tempered = detail::symbol(-4, p, 2 * n + 4);
    return out;
  }
  int h = ms2 / 2;
  LParameter p = phi;
  p.remove(one, 2, ms2);
  p.add(one, 2, 2 * h - 1);
  out.gl_factors.push_back(steinberg(3, HalfInt::half()));
  out.tempered = detail::symbol(-2, p, p.dim(), "sigma'", h - 1);
  return out;
}

namespace detail {

inline void check_rank(const LiftDatum& d, long long m) {
  long long total = d.tempered.param_dim;
  for (const auto& s : d.gl_factors) total += 2 * s.gl_dim();
  if (total != m - 1)
    throw InvariantError("rank accounting failed: 2*gl + dim(param) = " + std::to_string(total) +
                         " but m - 1 = " + std::to_string(m - 1));
}

inline void merge_into(LiftDatum& d, const std::vector<Segment>& extra) {
  d.gl_factors.insert(d.gl_factors.end(), extra.begin(), extra.end());
  sort_standard(d.gl_factors);
}

}  // namespace detail

namespace detail {

// pi: untwisted, generic, metaplectic.
inline LiftResult theta_lift_unchecked(const LanglandsDatum& pi, const FirstOccurrence& fo, const Tower& tower, int l) {
  require(l % 2 == 0, "level must be even");
  long long n = pi.rank();
  LiftResult r;
  r.tower = tower;
  r.level = l;
  r.m = 2 * n + 1 - l;
  if (r.m < 1) throw ValidationError("level " + std::to_string(l) + " is beyond the bottom of the tower (m < 1)");
  if (l > first_level(fo, n, tower.branch)) {
    r.rule = "above first occurrence";
    return r;
  }
  const auto& factors = pi.gl_factors;
  const TemperedRep& sigma = pi.tempered;
  auto st = detail::steinberg_index(factors);
  const int L = -l;
  LiftDatum d;

  if (!tower.chi_v.is_trivial()) {
    auto t = tempered_lift(sigma, tower, l);
    ensure(t.has_value(), "tempered lift vanished at or below first occurrence");
    d = *t;
    std::vector<Segment> twisted;
    for (const auto& s : factors) twisted.push_back(twist_segment(s, tower.chi_v));
    detail::merge_into(d, twisted);
    r.extrapolated = !st.has_value();
    r.rule = "chi_V tower: factors twisted by chi_V";
  } else if (l_of_tempered(sigma) == 0 && st && factors[*st].center() == HalfInt::half()) {
    std::vector<Segment> others = factors;
    others.erase(others.begin() + static_cast<long>(*st));
    if (tower.branch == Branch::split) {
      d.tempered = detail::symbol(0, sigma.param, 2 * sigma.rank());
      if (l == 2) {
        d.gl_factors = others;
        r.rule = "nu^1/2 over l(sigma)=0: first lift drops nu^1/2";
      } else {
        d.gl_factors = factors;
        detail::merge_into(d, detail::nu_chain(L, HalfInt::half()));
        r.rule = "nu^1/2 over l(sigma)=0, going down";
      }
    } else {
      LParameter p = sigma.param;
      p.add(Cuspidal::trivial(), 2);
      d.tempered = detail::symbol(-2, p, 2 * sigma.rank() + 2);
      d.gl_factors = others;
      d.gl_factors.push_back(steinberg(2, HalfInt(1)));
      detail::merge_into(d, detail::nu_chain(L, HalfInt::frac(5, 2)));
      r.rule = "nu^1/2 over l(sigma)=0, going up: nu^1/2 becomes St_2 nu^1";
    }
  } else {
    bool drop_half = l == 2 && tower.branch == Branch::split;
    std::vector<Segment> kept;
    bool dropped = false;
    for (const auto& s : factors) {
      if (drop_half && !dropped && s == steinberg(1, HalfInt::half())) {
        dropped = true;
        continue;
      }
      kept.push_back(s);
    }
    if (dropped) {
      d.tempered = detail::symbol(0, sigma.param, 2 * sigma.rank());
      r.rule = "nu^1/2 over l(sigma)=2: first lift drops nu^1/2";
    } else {
      auto t = tempered_lift(sigma, tower, l);
      ensure(t.has_value(), "tempered lift vanished at or below first occurrence");
      d = *t;
      r.rule = "factors merged with the tempered lift";
    }
    detail::merge_into(d, kept);
  }
  detail::check_rank(d, r.m);
  ensure(in_standard_form(d.gl_factors), "lift datum not in standard form");
  r.irreducible_standard_claim =
      tower.chi_v.is_trivial() && tower.branch == fo.down && l == 0 && !st.has_value();
  r.datum = std::move(d);
  return r;
}

}  // namespace detail

/// theta_l(pi) on the given tower.
inline LiftResult theta_lift(const LanglandsDatum& input, const Tower& tower, int l) {
  detail::require_metaplectic_generic(input);
  LanglandsDatum pi = untwisted(input);
  return detail::theta_lift_unchecked(pi, detail::first_occurrence_unchecked(pi, tower.chi_v), tower, l);
}

/// Lifts at m_first, m_first + 2, ..., m_first + 2*depth on both branches (split first).
inline std::vector<LiftResult> lift_table(const LanglandsDatum& input, const QuadChar& chi_v, int depth) {
  require(depth >= 0, "depth must be >= 0");
  detail::require_metaplectic_generic(input);
  LanglandsDatum pi = untwisted(input);
  long long n = pi.rank();
  FirstOccurrence fo = detail::first_occurrence_unchecked(pi, chi_v);
  std::vector<LiftResult> out;
  for (Branch b : {Branch::split, Branch::nonsplit}) {
    int l0 = first_level(fo, n, b);
    for (int k = 0; k <= depth; ++k) {
      auto r = detail::theta_lift_unchecked(pi, fo, Tower{chi_v, b}, l0 - 2 * k);
      ensure(r.datum.has_value(), "zero lift at or below first occurrence");
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace mptheta
