#pragma once

#include <vector>

#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"

namespace mptheta {

/// Bounds of the exhaustive enumeration used by the property checks.
struct UniverseBounds {
  int max_factors = 2;
  std::vector<HalfInt> exponents = {HalfInt::half(), HalfInt(1), HalfInt::frac(3, 2), HalfInt(2)};
  int max_length = 3;
  long long max_tempered_rank = 4;
};

/// Bases: trivial, one quadratic character, one symplectic-type rho of dimension 2.
inline std::vector<Cuspidal> universe_bases() {
  return {Cuspidal::trivial(), Cuspidal::chi("a"), Cuspidal::make("r", 2, SelfDual::symplectic)};
}

/// Every parameter over the universe bases with rank <= max_rank.
inline std::vector<LParameter> universe_parameters(long long max_rank) {
  std::vector<Summand> atoms;
  for (const auto& c : universe_bases())
    for (int a = 1; c.dim * a <= 2 * max_rank; ++a) {
      bool ok = (c.type == SelfDual::orthogonal && a % 2 == 0) || (c.type == SelfDual::symplectic && a % 2 == 1);
      if (ok) atoms.push_back({c, a, 1});
    }
  std::vector<LParameter> out;
  LParameter cur;
  // multisets via non-decreasing atom index
  auto rec = [&](auto&& self, std::size_t start, long long dim) -> void {
    out.push_back(cur);
    for (std::size_t i = start; i < atoms.size(); ++i) {
      long long d = static_cast<long long>(atoms[i].rho.dim) * atoms[i].a;
      if (dim + d > 2 * max_rank) continue;
      LParameter saved = cur;
      cur.add(atoms[i].rho, atoms[i].a);
      self(self, i, dim + d);
      cur = saved;
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::vector<Segment> universe_segments(const UniverseBounds& b = {}) {
  std::vector<Segment> out;
  for (const auto& c : universe_bases())
    for (int k = 1; k <= b.max_length; ++k)
      for (const auto& s : b.exponents) out.push_back(steinberg(k, s, c));
  return out;
}

/// Every standard-form metaplectic datum within the bounds (GL part normalized, no duplicates).
inline std::vector<LanglandsDatum> universe_data(const UniverseBounds& b = {}) {
  auto segs = universe_segments(b);
  std::vector<std::vector<Segment>> gl_parts{{}};
  std::vector<Segment> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == b.max_factors) return;
    for (std::size_t i = start; i < segs.size(); ++i) {
      cur.push_back(segs[i]);
      auto sorted = cur;
      sort_standard(sorted);
      gl_parts.push_back(sorted);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<LanglandsDatum> out;
  auto params = universe_parameters(b.max_tempered_rank);
  out.reserve(gl_parts.size() * params.size());
  for (const auto& gl : gl_parts)
    for (const auto& p : params) {
      LanglandsDatum d;
      d.gl_factors = gl;
      d.tempered.param = p;
      out.push_back(std::move(d));
    }
  return out;
}

}  // namespace mptheta
