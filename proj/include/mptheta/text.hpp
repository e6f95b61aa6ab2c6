#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mptheta/errors.hpp"
#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"
#include "mptheta/theta.hpp"

namespace mptheta {

// Text grammar (whitespace between tokens is ignored):
//   cuspidal := "1" | "chi:" labels | "rho:" label ":" int ":" ("o" | "s" | "n" ["/" label]) [".chi:" labels]
//   labels   := label ("+" label)*
//   segment  := "D(" cuspidal ";" half "," half ")" | "St(" int ")" ["v^" half]
//   half     := ["-"] int ["/2"]
//   param    := "{" [cuspidal "*S" int ["^" int] ("," ...)*] "}"
//   tempered := ("T" | "O") param ["@" ("+" | "-")]      T: metaplectic, O: odd orthogonal
//   datum    := ("L(" [segment ("," segment)*] ";" tempered ")" | tempered) ["twist" "chi:" labels]

using RepExpr = std::variant<Cuspidal, Segment, LParameter, TemperedRep, LanglandsDatum>;

class TextParser {
 public:
  explicit TextParser(std::string_view text) : s_(text) {}

  std::size_t pos() const { return i_; }
  bool at_end() {
    skip();
    return i_ == s_.size();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + std::string(s_.substr(i_, 12)) + "'");
  }

  Cuspidal cuspidal() {
    skip();
    std::size_t start = i_;
    if (eat("chi:")) return wrap(start, [&] { return Cuspidal::quadratic(labels()); });
    if (eat("rho:")) {
      std::string label = word();
      want(":");
      int dim = integer();
      want(":");
      SelfDual type;
      std::string dual;
      if (eat("o")) {
        type = SelfDual::orthogonal;
      } else if (eat("s")) {
        type = SelfDual::symplectic;
      } else if (eat("n")) {
        type = SelfDual::none;
        if (eat("/")) dual = word();
      } else {
        fail("expected o, s or n");
      }
      Cuspidal c = wrap(start, [&] { return Cuspidal::make(label, dim, type, dual); });
      if (peek_str(".chi:")) {
        eat(".chi:");
        c = twist(c, labels());
      }
      return c;
    }
    if (eat("1")) return Cuspidal::trivial();
    fail("expected a cuspidal (1, chi:..., rho:...)");
  }

  HalfInt half() {
    skip();
    bool neg = eat("-");
    long long v = integer();
    HalfInt h = eat("/2") ? HalfInt::frac(v, 2) : HalfInt(v);
    return neg ? -h : h;
  }

  Segment segment() {
    skip();
    std::size_t start = i_;
    if (eat("D(")) {
      Cuspidal c = cuspidal();
      want(";");
      HalfInt b = half();
      want(",");
      HalfInt a = half();
      want(")");
      return wrap(start, [&] { return Segment(c, b, a); });
    }
    if (eat("St(")) {
      int k = integer();
      want(")");
      HalfInt s(0);
      if (eat("v^")) s = half();
      return wrap(start, [&] { return steinberg(k, s); });
    }
    fail("expected a segment (D(...) or St(n))");
  }

  LParameter param() {
    want("{");
    LParameter p;
    if (eat("}")) return p;
    do {
      skip();
      std::size_t at = i_;
      Cuspidal c = cuspidal();
      want("*S");
      int a = integer();
      int mult = 1;
      if (eat("^")) mult = integer();
      wrap(at, [&] {
        p.add(c, a, mult);
        return 0;
      });
    } while (eat(","));
    want("}");
    return p;
  }

  TemperedRep tempered() {
    skip();
    TemperedRep t;
    if (eat("T")) {
      t.flavor = Flavor::metaplectic;
    } else if (eat("O")) {
      t.flavor = Flavor::odd_orthogonal;
    } else {
      fail("expected a tempered representation (T{...} or O{...})");
    }
    t.param = param();
    if (eat("@")) {
      if (eat("+")) {
        t.sign = TowerSign::plus;
      } else if (eat("-")) {
        t.sign = TowerSign::minus;
      } else {
        fail("expected + or - after @");
      }
    }
    return t;
  }

  LanglandsDatum datum() {
    skip();
    LanglandsDatum d;
    if (eat("L(")) {
      if (!peek_str(";")) {
        do d.gl_factors.push_back(segment());
        while (eat(","));
      }
      want(";");
      d.tempered = tempered();
      want(")");
    } else {
      d.tempered = tempered();
    }
    if (eat("twist")) {
      want("chi:");
      d.psi_twist = labels();
    }
    return d;
  }

  RepExpr rep() {
    skip();
    if (peek_str("L(") || peek_str("T") || peek_str("O")) return datum();
    if (peek_str("{")) return param();
    if (peek_str("D(") || peek_str("St(")) return segment();
    return cuspidal();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  template <class F>
  auto wrap(std::size_t at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(at, e.what());
    }
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek_str(std::string_view t) {
    skip();
    return s_.substr(i_, t.size()) == t;
  }
  bool eat(std::string_view t) {
    if (!peek_str(t)) return false;
    i_ += t.size();
    return true;
  }
  void want(std::string_view t) {
    if (!eat(t)) fail("expected '" + std::string(t) + "'");
  }
  long long integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    if (i_ - start > 9) throw ParseError(start, "integer too large");
    return std::stoll(std::string(s_.substr(start, i_ - start)));
  }
  std::string word() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && valid_label(std::string(1, s_[i_]))) ++i_;
    if (start == i_) fail("expected a label");
    return std::string(s_.substr(start, i_ - start));
  }
  QuadChar labels() {
    std::size_t start = i_;
    QuadChar q = wrap(start, [&] { return QuadChar::named(word()); });
    while (eat("+")) q = q * wrap(i_, [&] { return QuadChar::named(word()); });
    return q;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

template <class T, class F>
T parse_whole(std::string_view text, F&& f) {
  TextParser p(text);
  T out = f(p);
  p.expect_end();
  return out;
}

inline Cuspidal parse_cuspidal(std::string_view t) {
  return parse_whole<Cuspidal>(t, [](TextParser& p) { return p.cuspidal(); });
}
inline Segment parse_segment(std::string_view t) {
  return parse_whole<Segment>(t, [](TextParser& p) { return p.segment(); });
}
inline LParameter parse_param(std::string_view t) {
  return parse_whole<LParameter>(t, [](TextParser& p) { return p.param(); });
}
inline TemperedRep parse_tempered(std::string_view t) {
  return parse_whole<TemperedRep>(t, [](TextParser& p) { return p.tempered(); });
}
inline LanglandsDatum parse_datum(std::string_view t) {
  return parse_whole<LanglandsDatum>(t, [](TextParser& p) { return p.datum(); });
}
inline RepExpr parse_rep(std::string_view t) {
  return parse_whole<RepExpr>(t, [](TextParser& p) { return p.rep(); });
}

inline std::string render(const LParameter& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& it : p.items()) {
    if (!first) s += ",";
    first = false;
    s += render(it.rho) + "*S" + std::to_string(it.a);
    if (it.mult > 1) s += "^" + std::to_string(it.mult);
  }
  return s + "}";
}

inline std::string render(const TemperedRep& t) {
  std::string s = (t.flavor == Flavor::metaplectic ? "T" : "O") + render(t.param);
  if (t.sign == TowerSign::minus) s += "@-";
  return s;
}

inline std::string render(const LanglandsDatum& d) {
  std::string s;
  if (d.gl_factors.empty()) {
    s = render(d.tempered);
  } else {
    s = "L(";
    for (std::size_t i = 0; i < d.gl_factors.size(); ++i) s += (i ? ", " : "") + render(d.gl_factors[i]);
    s += "; " + render(d.tempered) + ")";
  }
  if (!d.psi_twist.is_trivial()) s += " twist chi:" + d.psi_twist.joined();
  return s;
}

inline std::string render(const RepExpr& e) {
  return std::visit([](const auto& x) { return render(x); }, e);
}

inline std::string render(const LiftSymbol& t) {
  std::string s;
  if (t.st2_prefix > 0) s += "(St(2)^" + std::to_string(t.st2_prefix) + ") x| ";
  s += "theta_" + std::to_string(t.level) + "(" + t.source + ")";
  if (t.param) s += render(*t.param);
  return s;
}

inline std::string render(const LiftDatum& d) {
  if (d.gl_factors.empty()) return render(d.tempered);
  std::string s = "L(";
  for (std::size_t i = 0; i < d.gl_factors.size(); ++i) s += (i ? ", " : "") + render(d.gl_factors[i]);
  return s + "; " + render(d.tempered) + ")";
}

}  // namespace mptheta
