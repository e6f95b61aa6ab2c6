#pragma once

#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"

namespace mptheta {

// Orders of gamma factors at half-integer points: pole = -1, zero = +1.
// Elementary factors: gamma(u, chi) for rho trivial, gamma(u, rho1 x rho2) when
// rho2 = dual(rho1), gamma(u, rho, Sym^2) when rho is orthogonal. Each has a
// simple pole at u = 1 and a simple zero at u = 0 and no other real zeros or poles.

namespace detail {

// #{(x, y) in s1 x s2 : x + y = t}.
inline long long pairs_summing_to(const Segment& s1, const Segment& s2, const HalfInt& t) {
  if (!(t - s1.b - s2.b).is_integer()) return 0;
  HalfInt lo = std::max(s1.b, t - s2.a);
  HalfInt hi = std::min(s1.a, t - s2.b);
  if (hi < lo) return 0;
  return (hi - lo).to_ll() + 1;
}

inline HalfInt::Int floor_div(const HalfInt::Int& n, long long d) {
  HalfInt::Int q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

// #{(i, j) in s x s : i < j, i + j = t}.
inline long long ordered_pairs_summing_to(const Segment& s, const HalfInt& t) {
  if (!(t - s.b - s.b).is_integer()) return 0;
  HalfInt lo = std::max(s.b, t - s.a);
  HalfInt hi = std::min(s.a, t - s.b);
  if (hi < lo) return 0;
  // twice-units: I in {L, L+2, ..., H} with 2I < T.
  const HalfInt::Int& L = lo.twice();
  HalfInt::Int top = floor_div(t.twice() - 1, 2);
  top -= (((top - L) % 2) + 2) % 2;
  if (hi.twice() < top) top = hi.twice();
  if (top < L) return 0;
  return static_cast<long long>((top - L) / 2) + 1;
}

inline bool contains_point(const Segment& s, const HalfInt& x) {
  return (x - s.b).is_integer() && s.b <= x && x <= s.a;
}

}  // namespace detail

inline bool elementary_rs_active(const Cuspidal& r1, const Cuspidal& r2) { return r2 == dual(r1); }

/// ord at u0 of gamma(u, Delta, psi), rho trivial only.
inline long long ord_gamma_std(const Segment& seg, const HalfInt& u0) {
  if (!seg.rho.is_trivial()) return 0;
  long long ord = 0;
  if (u0 == HalfInt(1) - seg.b) ord -= 1;
  if (u0 == -seg.a) ord += 1;
  return ord;
}

/// ord at u0 of gamma(u, Delta1 x Delta2, psi).
inline long long ord_gamma_rs(const Segment& s1, const Segment& s2, const HalfInt& u0) {
  if (!elementary_rs_active(s1.rho, s2.rho)) return 0;
  return detail::pairs_summing_to(s1, s2, -u0) - detail::pairs_summing_to(s1, s2, HalfInt(1) - u0);
}

/// ord at u0 of gamma(u, Delta, Sym^2, psi).
inline long long ord_gamma_sym2(const Segment& seg, const HalfInt& u0) {
  long long ord = 0;
  if (seg.rho.is_self_dual())
    ord += detail::ordered_pairs_summing_to(seg, -u0) - detail::ordered_pairs_summing_to(seg, HalfInt(1) - u0);
  if (seg.rho.type == SelfDual::orthogonal) {
    // 2i = -u0 and 2i = 1 - u0
    HalfInt z = -u0, p = HalfInt(1) - u0;
    if (z.is_integer() && detail::contains_point(seg, z.halved())) ord += 1;
    if (p.is_integer() && detail::contains_point(seg, p.halved())) ord -= 1;
  }
  return ord;
}

/// sum over summands of mult * ord gamma(u, Delta x (rho_i (x) S_{a_i})).
inline long long ord_gamma_vs_parameter(const LParameter& phi, const Segment& seg, const HalfInt& u0) {
  require_valid(phi);
  long long ord = 0;
  for (const auto& s : phi.items()) ord += s.mult * ord_gamma_rs(seg, summand_segment(s.rho, s.a), u0);
  return ord;
}

enum class CoeffMode { metaplectic, orthogonal };

struct LocalCoeffBreakdown {
  long long sym2 = 0;       // gamma(Delta, Sym^2, 2u)
  long long vs_param = 0;   // gamma(sigma x Delta, u)
  long long std_denom = 0;  // gamma(Delta, u + 1/2), metaplectic only; subtracted
  long long total() const { return sym2 + vs_param - std_denom; }
};

inline LocalCoeffBreakdown local_coeff_breakdown(const Segment& seg, const TemperedRep& sigma, CoeffMode mode,
                                                 const HalfInt& u0) {
  require_valid(sigma.param);
  LocalCoeffBreakdown b;
  b.sym2 = ord_gamma_sym2(seg, u0 * 2);
  b.vs_param = ord_gamma_vs_parameter(sigma.param, seg, u0);
  if (mode == CoeffMode::metaplectic) b.std_denom = ord_gamma_std(seg, u0 + HalfInt::half());
  return b;
}

/// ord at u0 of the rank-one local coefficient of Delta nu^u over sigma.
inline long long ord_local_coeff(const Segment& seg, const TemperedRep& sigma, CoeffMode mode, const HalfInt& u0) {
  return local_coeff_breakdown(seg, sigma, mode, u0).total();
}

/// delta nu^{s0} x| Theta(sigma) on the odd orthogonal side is irreducible iff its
/// local coefficient is holomorphic at the Langlands point.
inline bool so_rank1_standard_irreducible(const Segment& unitary_seg, const LParameter& phi, const HalfInt& s0) {
  require(s0 > HalfInt(0), "rank-one exponent must be > 0");
  require(unitary_seg.center().is_zero(), "expected a unitary segment (center 0)");
  TemperedRep t{Flavor::odd_orthogonal, phi, TowerSign::plus};
  return ord_local_coeff(shift(unitary_seg, s0), t, CoeffMode::orthogonal, HalfInt(0)) >= 0;
}

// Elementary breakdown for display.

struct ElementaryTerm {
  std::string factor;  // e.g. "gamma(u, rho x rho')"
  std::string at;      // elementary argument at u0
  long long order;
};

inline std::vector<ElementaryTerm> breakdown_rs(const Segment& s1, const Segment& s2, const HalfInt& u0) {
  std::vector<ElementaryTerm> out;
  if (!elementary_rs_active(s1.rho, s2.rho)) return out;
  for (HalfInt x = s1.b; x <= s1.a; x += HalfInt(1))
    for (HalfInt y = s2.b; y <= s2.a; y += HalfInt(1)) {
      HalfInt v = u0 + x + y;
      long long o = v == HalfInt(0) ? 1 : (v == HalfInt(1) ? -1 : 0);
      if (o != 0)
        out.push_back({"gamma(u, " + render(s1.rho) + " x " + render(s2.rho) + ") x=" + x.str() + " y=" + y.str(),
                       v.str(), o});
    }
  return out;
}

inline std::vector<ElementaryTerm> breakdown_sym2(const Segment& s, const HalfInt& u0) {
  std::vector<ElementaryTerm> out;
  for (HalfInt i = s.b; i <= s.a; i += HalfInt(1)) {
    if (s.rho.type == SelfDual::orthogonal) {
      HalfInt v = u0 + i * 2;
      long long o = v == HalfInt(0) ? 1 : (v == HalfInt(1) ? -1 : 0);
      if (o != 0) out.push_back({"gamma(u, " + render(s.rho) + ", Sym2) i=" + i.str(), v.str(), o});
    }
    if (!s.rho.is_self_dual()) continue;
    for (HalfInt j = i + HalfInt(1); j <= s.a; j += HalfInt(1)) {
      HalfInt v = u0 + i + j;
      long long o = v == HalfInt(0) ? 1 : (v == HalfInt(1) ? -1 : 0);
      if (o != 0)
        out.push_back({"gamma(u, " + render(s.rho) + " x " + render(s.rho) + ") i=" + i.str() + " j=" + j.str(),
                       v.str(), o});
    }
  }
  return out;
}

inline std::vector<ElementaryTerm> breakdown_std(const Segment& s, const HalfInt& u0) {
  std::vector<ElementaryTerm> out;
  if (!s.rho.is_trivial()) return out;
  for (HalfInt x = s.b; x <= s.a; x += HalfInt(1)) {
    HalfInt v = u0 + x;
    long long o = v == HalfInt(0) ? 1 : (v == HalfInt(1) ? -1 : 0);
    if (o != 0) out.push_back({"gamma(u, 1) x=" + x.str(), v.str(), o});
  }
  return out;
}

}  // namespace mptheta
