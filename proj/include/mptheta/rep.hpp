#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/symbols.hpp"

namespace mptheta {

/// One summand rho (x) S_a of an L-parameter, with multiplicity.
struct Summand {
  Cuspidal rho;
  int a = 1;
  int mult = 1;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Multiset of summands, kept merged and sorted by (label, a).
class LParameter {
 public:
  LParameter() = default;
  explicit LParameter(const std::vector<Summand>& items) {
    for (const auto& s : items) add(s.rho, s.a, s.mult);
  }

  void add(const Cuspidal& rho, int a, int mult = 1) {
    require(a >= 1, "summand needs a >= 1");
    require(mult >= 1, "summand needs multiplicity >= 1");
    for (auto& s : items_)
      if (s.rho == rho && s.a == a) {
        s.mult += mult;
        return;
      }
    items_.push_back({rho, a, mult});
    std::stable_sort(items_.begin(), items_.end(), [](const Summand& x, const Summand& y) {
      auto kx = label_key(x.rho), ky = label_key(y.rho);
      return kx != ky ? kx < ky : x.a < y.a;
    });
  }
  /// Removes `mult` copies; they must be present.
  void remove(const Cuspidal& rho, int a, int mult = 1) {
    for (auto it = items_.begin(); it != items_.end(); ++it)
      if (it->rho == rho && it->a == a) {
        require(it->mult >= mult, "parameter lacks the summand to remove");
        it->mult -= mult;
        if (it->mult == 0) items_.erase(it);
        return;
      }
    throw ValidationError("parameter lacks the summand to remove");
  }

  const std::vector<Summand>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  int multiplicity(const Cuspidal& rho, int a) const {
    for (const auto& s : items_)
      if (s.rho == rho && s.a == a) return s.mult;
    return 0;
  }
  bool contains(const Cuspidal& rho, int a) const { return multiplicity(rho, a) > 0; }

  long long dim() const {
    long long d = 0;
    for (const auto& s : items_) d += static_cast<long long>(s.rho.dim) * s.a * s.mult;
    return d;
  }
  long long rank() const { return dim() / 2; }
  bool is_discrete() const {
    return std::all_of(items_.begin(), items_.end(), [](const Summand& s) { return s.mult == 1; });
  }
  /// Smallest even a with 1 (x) S_a present; nullopt stands for +infinity.
  std::optional<int> a0() const {
    for (const auto& s : items_)
      if (s.rho.is_trivial() && s.a % 2 == 0) return s.a;  // items sorted by a within a label
    return std::nullopt;
  }
  int m_s2() const { return multiplicity(Cuspidal::trivial(), 2); }

  friend bool operator==(const LParameter&, const LParameter&) = default;

 private:
  std::vector<Summand> items_;
};

struct ParameterReport {
  bool ok = true;
  std::vector<std::string> errors;
  long long rank = 0;
  bool discrete = true;
};

/// Checks the symplectic-type condition on each summand and evenness of the dimension.
inline ParameterReport validate_parameter(const LParameter& phi) {
  ParameterReport r;
  for (const auto& s : phi.items()) {
    bool good = (s.rho.type == SelfDual::orthogonal && s.a % 2 == 0) ||
                (s.rho.type == SelfDual::symplectic && s.a % 2 == 1);
    if (!good) {
      r.ok = false;
      std::string why = s.rho.type == SelfDual::none ? "rho is not self-dual"
                        : s.rho.type == SelfDual::orthogonal ? "orthogonal rho needs even a"
                                                             : "symplectic rho needs odd a";
      r.errors.push_back(render(s.rho) + "*S" + std::to_string(s.a) + ": " + why);
    }
  }
  if (phi.dim() % 2 != 0) {
    r.ok = false;
    r.errors.push_back("parameter dimension " + std::to_string(phi.dim()) + " is odd");
  }
  r.rank = phi.dim() / 2;
  r.discrete = phi.is_discrete();
  return r;
}

inline void require_valid(const LParameter& phi) {
  auto r = validate_parameter(phi);
  if (!r.ok) {
    std::string msg = "invalid L-parameter:";
    for (const auto& e : r.errors) msg += " " + e + ";";
    throw ValidationError(msg);
  }
}

/// The unitary segment of rho (x) S_a.
inline Segment summand_segment(const Cuspidal& rho, int a) { return steinberg(a, HalfInt(0), rho); }

enum class Flavor { metaplectic, odd_orthogonal };
enum class TowerSign { plus, minus };

/// Generic member of the tempered packet of its parameter.
struct TemperedRep {
  Flavor flavor = Flavor::metaplectic;
  LParameter param;
  TowerSign sign = TowerSign::plus;

  long long rank() const { return param.rank(); }
  friend bool operator==(const TemperedRep&, const TemperedRep&) = default;
};

inline TemperedRep mu0() { return {}; }

inline void require_valid(const TemperedRep& t) {
  require_valid(t.param);
  require(t.sign == TowerSign::plus, "generic tempered representations sit on the + tower; sign - rejected");
}

/// L(delta_1 nu^{s_1}, ..., delta_k nu^{s_k}; sigma), optionally relative to psi twisted by psi_twist.
struct LanglandsDatum {
  std::vector<Segment> gl_factors;
  TemperedRep tempered;
  QuadChar psi_twist;

  long long rank() const {
    long long r = tempered.rank();
    for (const auto& s : gl_factors) r += s.gl_dim();
    return r;
  }
  friend bool operator==(const LanglandsDatum&, const LanglandsDatum&) = default;
};

/// Center descending, then length descending, then cuspidal label ascending; stable.
inline void sort_standard(std::vector<Segment>& segs) {
  std::stable_sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
    auto cx = x.center(), cy = y.center();
    if (cx != cy) return cx > cy;
    if (x.length() != y.length()) return x.length() > y.length();
    return label_key(x.rho) < label_key(y.rho);
  });
}

inline bool in_standard_form(const std::vector<Segment>& segs) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].center() <= HalfInt(0)) return false;
    if (i > 0 && segs[i].center() > segs[i - 1].center()) return false;
  }
  return true;
}

inline LanglandsDatum normalize_datum(LanglandsDatum d) {
  for (const auto& s : d.gl_factors)
    if (s.center() <= HalfInt(0))
      throw ValidationError("exponent must be > 0, got " + s.center().str() + " in " + render(s));
  long long r = d.rank();
  sort_standard(d.gl_factors);
  ensure(d.rank() == r, "normalization changed the rank");
  return d;
}

inline void require_valid(const LanglandsDatum& d) {
  require_valid(d.tempered);
  require(in_standard_form(d.gl_factors), "datum is not in standard form (positive, weakly decreasing exponents)");
}

/// Twists every GL factor by the psi twist and clears it.
inline LanglandsDatum untwisted(const LanglandsDatum& d) {
  if (d.psi_twist.is_trivial()) return d;
  LanglandsDatum u = d;
  for (auto& s : u.gl_factors) s = twist_segment(s, d.psi_twist);
  u.psi_twist = QuadChar::trivial();
  return u;
}

/// Theta_psi on the tempered part: swaps the flavor, keeps parameter and factors.
inline LanglandsDatum theta_psi_transfer(LanglandsDatum d) {
  long long r = d.rank();
  d.tempered.flavor = d.tempered.flavor == Flavor::metaplectic ? Flavor::odd_orthogonal : Flavor::metaplectic;
  ensure(d.rank() == r, "transfer changed the rank");
  return d;
}

}  // namespace mptheta
