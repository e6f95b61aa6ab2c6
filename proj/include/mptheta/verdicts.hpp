#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/gamma.hpp"
#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"

namespace mptheta {

struct Witness {
  std::string condition;
  std::vector<int> factors;  // 1-based positions in the normalized datum
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Witnesses are non-empty exactly when `generic` is false.
struct GenericityVerdict {
  bool generic = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

/// Witnesses are non-empty exactly when `reducible` is true.
struct ReducibilityVerdict {
  bool reducible = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

/// 2 when chi_V is trivial and 1 (x) S_2 occurs in the parameter, else 0.
inline int l_of_tempered(const TemperedRep& sigma, const QuadChar& chi_v = QuadChar::trivial()) {
  if (!chi_v.is_trivial()) return 0;
  return sigma.param.contains(Cuspidal::trivial(), 2) ? 2 : 0;
}

/// Rank-one standard module gamma_psi^{-1} delta nu^s x| sigma, with sigma metaplectic.
/// `note` receives the reasoning when non-null.
inline bool mp_rank1_irreducible(const Segment& seg, const TemperedRep& sigma, std::string* note = nullptr) {
  require(seg.center() > HalfInt(0), "rank-one exponent must be > 0");
  require_valid(sigma.param);
  auto say = [&](const std::string& s) {
    if (note) *note = s;
  };
  HalfInt s = seg.center();
  if (!is_trivial_steinberg_form(seg)) {
    bool ok = so_rank1_standard_irreducible(shift(seg, -s), sigma.param, s);
    say(std::string("not of trivial-Steinberg form; orthogonal rank-one module ") +
        (ok ? "irreducible" : "reducible"));
    return ok;
  }
  int l = l_of_tempered(sigma);
  if (s == HalfInt::half()) {
    say("nu^1/2 over sigma with l(sigma)=" + std::to_string(l));
    return l == 2;
  }
  auto a0 = sigma.param.a0();
  long long four_s = (s * 4).to_ll();
  if (l == 0) {
    bool ok = a0 && *a0 == four_s;
    say("l(sigma)=0, 4s=" + std::to_string(four_s) + ", a0=" + (a0 ? std::to_string(*a0) : std::string("inf")));
    return ok;
  }
  // l(sigma) = 2: irreducible exactly when the genericity constraint a >= 4s holds.
  for (const auto& sm : sigma.param.items())
    if (sm.rho.is_trivial() && sm.a % 2 == 0 && sm.a < four_s) {
      say("l(sigma)=2 and a=" + std::to_string(sm.a) + " < 4s=" + std::to_string(four_s));
      return false;
    }
  say("l(sigma)=2 and every even a >= 4s");
  return true;
}

namespace detail {

inline void check_datum_for_verdict(const LanglandsDatum& d) {
  require_valid(d);
}

inline std::string pair_text(const Segment& x, const Segment& y) { return render(x) + " x " + render(y); }

}  // namespace detail

/// Route A: the structural criterion.
inline GenericityVerdict is_generic_lq(const LanglandsDatum& input) {
  detail::check_datum_for_verdict(input);
  LanglandsDatum d = untwisted(input);
  GenericityVerdict v;
  if (!input.psi_twist.is_trivial()) v.notes.push_back("factors twisted by chi:" + input.psi_twist.joined());
  const auto& f = d.gl_factors;
  int k = static_cast<int>(f.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (segments_linked(f[i], f[j]))
        v.witnesses.push_back({detail::pair_text(f[i], f[j]) + " reducible (linked)", {i + 1, j + 1}});
      if (segments_linked(f[i], segment_dual(f[j])))
        v.witnesses.push_back(
            {render(f[i]) + " x dual(" + render(f[j]) + ") reducible (linked)", {i + 1, j + 1}});
    }
  bool meta = d.tempered.flavor == Flavor::metaplectic;
  int st_count = 0;
  for (int i = 0; i < k; ++i) {
    if (meta && is_trivial_steinberg_form(f[i])) {
      ++st_count;
      long long four_s = (f[i].center() * 4).to_ll();
      for (const auto& sm : d.tempered.param.items())
        if (sm.rho.is_trivial() && sm.a % 2 == 0 && sm.a < four_s)
          v.witnesses.push_back(
              {"a=" + std::to_string(sm.a) + " < 4s=" + std::to_string(four_s), {i + 1}});
      continue;
    }
    HalfInt s = f[i].center();
    bool ok = meta ? mp_rank1_irreducible(f[i], d.tempered)
                   : so_rank1_standard_irreducible(shift(f[i], -s), d.tempered.param, s);
    if (!ok) v.witnesses.push_back({"rank-one induction from " + render(f[i]) + " reducible", {i + 1}});
  }
  v.generic = v.witnesses.empty();
  if (v.generic) ensure(st_count <= 1, "generic datum with two trivial-Steinberg-form factors");
  return v;
}

struct CoeffReport {
  long long total = 0;
  std::vector<LocalCoeffBreakdown> rank_one;  // per factor
  std::vector<std::pair<std::pair<int, int>, long long>> pairs;  // 1-based factor pair, order
};

/// Order of the full local coefficient at the Langlands point, grouped by equal exponents.
inline CoeffReport local_coeff_report(const LanglandsDatum& input) {
  detail::check_datum_for_verdict(input);
  LanglandsDatum d = untwisted(input);
  CoeffMode mode = d.tempered.flavor == Flavor::metaplectic ? CoeffMode::metaplectic : CoeffMode::orthogonal;
  CoeffReport r;
  const auto& f = d.gl_factors;
  int k = static_cast<int>(f.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      long long o = ord_gamma_rs(f[i], f[j], HalfInt(0));
      if (f[i].center() != f[j].center()) o += ord_gamma_rs(f[i], segment_dual(f[j]), HalfInt(0));
      r.pairs.push_back({{i + 1, j + 1}, o});
      r.total += o;
    }
  for (int i = 0; i < k; ++i) {
    r.rank_one.push_back(local_coeff_breakdown(f[i], d.tempered, mode, HalfInt(0)));
    r.total += r.rank_one.back().total();
  }
  return r;
}

/// Route B: holomorphy of the full local coefficient.
inline GenericityVerdict is_generic_lq_via_coeff(const LanglandsDatum& input) {
  auto r = local_coeff_report(input);
  GenericityVerdict v;
  v.generic = r.total >= 0;
  if (!v.generic) {
    for (const auto& [ij, o] : r.pairs)
      if (o < 0) v.witnesses.push_back({"pole of order " + std::to_string(-o) + " in pair term", {ij.first, ij.second}});
    for (std::size_t i = 0; i < r.rank_one.size(); ++i)
      if (r.rank_one[i].total() < 0)
        v.witnesses.push_back({"pole of order " + std::to_string(-r.rank_one[i].total()) + " in rank-one term",
                               {static_cast<int>(i) + 1}});
    if (v.witnesses.empty())
      v.witnesses.push_back({"total order " + std::to_string(r.total) + " < 0", {}});
  }
  return v;
}

inline ReducibilityVerdict standard_module_reducible(const LanglandsDatum& input) {
  auto g = is_generic_lq(input);
  if (!g.generic) throw ValidationError("standard_module_reducible needs a generic datum");
  LanglandsDatum d = untwisted(input);
  require(d.tempered.flavor == Flavor::metaplectic, "standard_module_reducible expects a metaplectic datum");
  ReducibilityVerdict v;
  if (l_of_tempered(d.tempered) == 2) {
    v.notes.push_back("l(sigma)=2: standard module irreducible");
    return v;
  }
  for (std::size_t i = 0; i < d.gl_factors.size(); ++i) {
    const auto& seg = d.gl_factors[i];
    if (!is_trivial_steinberg_form(seg)) continue;
    std::string why;
    if (!mp_rank1_irreducible(seg, d.tempered, &why))
      v.witnesses.push_back({"rank-one " + render(seg) + " over sigma reducible: " + why, {static_cast<int>(i) + 1}});
    else
      v.notes.push_back(why);
  }
  v.reducible = !v.witnesses.empty();
  return v;
}

/// Whether the orthogonal-side transfer of a generic datum is generic.
inline bool generic_transfer_is_generic(const LanglandsDatum& input) {
  if (!is_generic_lq(input).generic) throw ValidationError("generic_transfer_is_generic needs a generic datum");
  LanglandsDatum d = untwisted(input);
  for (const auto& s : d.gl_factors)
    if (is_trivial_steinberg_form(s)) return false;
  return true;
}

enum class GenericPosition { subrepresentation, quotient };

struct CuspidalReducibility {
  HalfInt point;
  GenericPosition position = GenericPosition::subrepresentation;
  bool on_unitary_axis = false;  // s = 0: both constituents generic-equivalent, position by convention
};

/// Reducibility point s > 0 (or 0) of gamma_psi^{-1} tau nu^s x| sigma for sigma cuspidal generic.
inline CuspidalReducibility cuspidal_reducibility_point(const Cuspidal& tau, const LParameter& phi, bool has_s2) {
  require_valid(phi);
  require(tau.is_self_dual(), "tau must be self-dual");
  require(phi.is_discrete(), "cuspidal sigma needs a discrete parameter");
  const Cuspidal one = Cuspidal::trivial();
  require(has_s2 == phi.contains(one, 2), "has_s2 flag disagrees with the parameter");
  LParameter rest = phi;
  if (has_s2) rest.remove(one, 2);
  // A generic cuspidal has at most one block per rho, and that block is S1 or S2.
  for (const auto& s : rest.items()) {
    require(s.a <= 2, "generic cuspidal parameter has only S1 and S2 blocks");
    int blocks = 0;
    for (const auto& t : rest.items()) blocks += t.rho == s.rho;
    require(blocks == 1, "generic cuspidal parameter has one block per rho");
  }
  require(!rest.contains(one, 2), "cuspidal parameter with 1*S2 outside the S2 flag");
  CuspidalReducibility r;
  if (tau.type == SelfDual::symplectic) {
    if (!rest.contains(tau, 1)) {
      r.point = HalfInt(0);
      r.on_unitary_axis = true;
      return r;
    }
    r.point = HalfInt(1);
    return r;
  }
  if (!tau.is_trivial() && rest.contains(tau, 2)) {
    // tau (x) S2 in the parameter moves the Plancherel pole to 3/2, as for tau = 1 in case 2.
    r.point = HalfInt::frac(3, 2);
    return r;
  }
  if (!has_s2) {
    r.point = HalfInt::half();
    r.position = tau.is_trivial() ? GenericPosition::quotient : GenericPosition::subrepresentation;
    return r;
  }
  r.point = tau.is_trivial() ? HalfInt::frac(3, 2) : HalfInt::half();
  return r;
}

struct DiscreteEmbedding {
  std::vector<Segment> segments;
  LParameter residual;  // parameter of the partial cuspidal support
};

/// Embedding of the generic discrete series of parameter phi (odd orthogonal side).
inline DiscreteEmbedding discrete_series_embedding(const LParameter& phi) {
  require_valid(phi);
  require(phi.is_discrete(), "discrete series needs a multiplicity-free parameter");
  DiscreteEmbedding e;
  std::vector<Cuspidal> seen;
  for (const auto& s : phi.items()) {
    bool dup = false;
    for (const auto& c : seen) dup = dup || c == s.rho;
    if (dup) continue;
    seen.push_back(s.rho);
    std::vector<int> as;
    for (const auto& t : phi.items())
      if (t.rho == s.rho) as.push_back(t.a);
    std::sort(as.begin(), as.end());
    std::size_t i = 0;
    for (; i + 1 < as.size(); i += 2) {
      HalfInt lo = -HalfInt::from_twice(as[i] - 1);
      HalfInt hi = HalfInt::from_twice(as[i + 1] - 1);
      e.segments.push_back(Segment(s.rho, lo, hi));
    }
    if (i < as.size()) {
      int a = as[i];
      HalfInt top = HalfInt::from_twice(a - 1);
      HalfInt bottom = a % 2 == 0 ? HalfInt::half() : HalfInt(1);
      if (bottom <= top) e.segments.push_back(Segment(s.rho, bottom, top));
      if (a % 2 == 1) e.residual.add(s.rho, 1);
    }
  }
  long long gl = 0;
  for (const auto& seg : e.segments) gl += seg.gl_dim();
  ensure(2 * gl + e.residual.dim() == phi.dim(), "embedding dimension mismatch");
  return e;
}

}  // namespace mptheta
