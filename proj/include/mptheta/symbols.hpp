#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/half_int.hpp"

namespace mptheta {

inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '\'' || c == '~';
  });
}

/// Quadratic character of F^x. Named characters are treated as independent
/// elements of an F_2-vector space, so a product is a sorted label set.
class QuadChar {
 public:
  QuadChar() = default;
  static QuadChar trivial() { return {}; }
  static QuadChar named(const std::string& label) {
    require(valid_label(label) && label.find('~') == std::string::npos,
            "invalid quadratic character label '" + label + "'");
    QuadChar q;
    q.labels_.push_back(label);
    return q;
  }

  bool is_trivial() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend QuadChar operator*(const QuadChar& l, const QuadChar& r) {
    QuadChar out;
    std::set_symmetric_difference(l.labels_.begin(), l.labels_.end(), r.labels_.begin(), r.labels_.end(),
                                  std::back_inserter(out.labels_));
    return out;
  }
  friend bool operator==(const QuadChar&, const QuadChar&) = default;
  friend auto operator<=>(const QuadChar&, const QuadChar&) = default;

  /// "a+b"; empty for trivial.
  std::string joined() const {
    std::string s;
    for (const auto& l : labels_) s += (s.empty() ? "" : "+") + l;
    return s;
  }

 private:
  std::vector<std::string> labels_;
};

enum class SelfDual { orthogonal, symplectic, none };

/// Unitary supercuspidal of some GL(d), up to a quadratic twist.
struct Cuspidal {
  std::string base_label = "1";
  int dim = 1;
  SelfDual type = SelfDual::orthogonal;
  std::string dual_label;  // only for SelfDual::none
  QuadChar twist;

  static Cuspidal trivial() { return {}; }
  static Cuspidal quadratic(const QuadChar& chi) {
    Cuspidal c;
    c.twist = chi;
    return c;
  }
  static Cuspidal chi(const std::string& label) { return quadratic(QuadChar::named(label)); }
  /// Generic cuspidal. For SelfDual::none an empty dual label defaults to label + "~".
  static Cuspidal make(const std::string& label, int dim, SelfDual type, std::string dual = {}) {
    require(valid_label(label) && label != "1", "invalid cuspidal label '" + label + "'");
    require(dim >= 1, "cuspidal dimension must be >= 1");
    require(type != SelfDual::symplectic || dim % 2 == 0, "symplectic-type cuspidal needs even dimension");
    Cuspidal c;
    c.base_label = label;
    c.dim = dim;
    c.type = type;
    if (type == SelfDual::none) {
      c.dual_label = dual.empty() ? label + "~" : dual;
      require(valid_label(c.dual_label) && c.dual_label != "1" && c.dual_label != label,
              "invalid dual label '" + c.dual_label + "'");
    } else {
      require(dual.empty(), "self-dual cuspidal takes no dual label");
    }
    return c;
  }

  bool is_self_dual() const { return type != SelfDual::none; }
  bool is_trivial() const { return base_label == "1" && twist.is_trivial(); }
  bool is_character() const { return base_label == "1"; }

  friend bool operator==(const Cuspidal&, const Cuspidal&) = default;
};

inline Cuspidal dual(const Cuspidal& c) {
  if (c.is_self_dual()) return c;
  Cuspidal d = c;
  std::swap(d.base_label, d.dual_label);
  return d;
}

inline Cuspidal twist(const Cuspidal& c, const QuadChar& chi) {
  Cuspidal t = c;
  t.twist = c.twist * chi;
  return t;
}

inline std::string render(const Cuspidal& c) {
  if (c.base_label == "1") return c.twist.is_trivial() ? std::string("1") : "chi:" + c.twist.joined();
  std::string s = "rho:" + c.base_label + ":" + std::to_string(c.dim) + ":";
  switch (c.type) {
    case SelfDual::orthogonal: s += "o"; break;
    case SelfDual::symplectic: s += "s"; break;
    case SelfDual::none: s += "n/" + c.dual_label; break;
  }
  if (!c.twist.is_trivial()) s += ".chi:" + c.twist.joined();
  return s;
}

/// Sort key used wherever a deterministic order on cuspidals is needed.
inline std::string label_key(const Cuspidal& c) { return render(c); }

/// Segment [rho nu^b, ..., rho nu^a]; the exponent is absorbed into b and a.
struct Segment {
  Cuspidal rho;
  HalfInt b;
  HalfInt a;

  Segment() = default;
  Segment(Cuspidal r, HalfInt b_, HalfInt a_) : rho(std::move(r)), b(std::move(b_)), a(std::move(a_)) {
    if (!((a - b).is_integer() && a >= b))
      throw ValidationError("segment needs a - b a non-negative integer, got b=" + b.str() + " a=" + a.str());
  }

  long long length() const { return (a - b).to_ll() + 1; }
  long long gl_dim() const { return rho.dim * length(); }
  HalfInt center() const { return midpoint(a, b); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// delta([rho nu^{-(k-1)/2}, rho nu^{(k-1)/2}]) nu^s.
inline Segment steinberg(int k, const HalfInt& s, const Cuspidal& rho = Cuspidal::trivial()) {
  require(k >= 1, "segment length must be >= 1");
  HalfInt r = HalfInt::from_twice(k - 1);
  return Segment(rho, s - r, s + r);
}

inline Segment shift(const Segment& seg, const HalfInt& s) { return Segment(seg.rho, seg.b + s, seg.a + s); }

inline Segment segment_dual(const Segment& s) { return Segment(dual(s.rho), -s.a, -s.b); }

inline Segment twist_segment(const Segment& s, const QuadChar& chi) { return Segment(twist(s.rho, chi), s.b, s.a); }

/// Zelevinsky linkedness.
inline bool segments_linked(const Segment& s1, const Segment& s2) {
  if (!(s1.rho == s2.rho)) return false;
  if (!(s1.b - s2.b).is_integer()) return false;
  bool contains12 = s1.b <= s2.b && s2.a <= s1.a;
  bool contains21 = s2.b <= s1.b && s1.a <= s2.a;
  if (contains12 || contains21) return false;
  return s2.b <= s1.a + 1 && s1.b <= s2.a + 1;
}

/// St_{2s} nu^s with trivial rho: the segment [nu^{1/2}, ..., nu^{2s-1/2}].
inline bool is_trivial_steinberg_form(const Segment& s) { return s.rho.is_trivial() && s.b == HalfInt::half(); }

inline std::string render(const Segment& s) {
  if (s.rho.is_trivial()) {
    std::string out = "St(" + std::to_string(s.length()) + ")";
    if (!s.center().is_zero()) out += " v^" + s.center().str();
    return out;
  }
  return "D(" + render(s.rho) + ";" + s.b.str() + "," + s.a.str() + ")";
}

}  // namespace mptheta
