// nu^{1/2} St_{m+1} over the trivial representation of Mp(0): generic for psi, not for psi_a.

#include <iostream>

#include "mptheta/mptheta.hpp"

int main() {
  using namespace mptheta;
  for (int m = 0; m <= 3; ++m) {
    LanglandsDatum d;
    d.gl_factors.push_back(Segment(Cuspidal::trivial(), HalfInt::half(), HalfInt::frac(2 * m + 1, 2)));
    LanglandsDatum twisted = d;
    twisted.psi_twist = QuadChar::named("a");
    auto b = local_coeff_breakdown(d.gl_factors[0], d.tempered, CoeffMode::metaplectic, HalfInt(0));
    std::cout << render(d) << "\n"
              << "  psi-generic:   " << std::boolalpha << is_generic_lq(d).generic << "\n"
              << "  psi_a-generic: " << is_generic_lq(twisted).generic << "\n"
              << "  standard module reducible: " << standard_module_reducible(d).reducible << "\n"
              << "  ord Sym2 numerator " << b.sym2 << ", ord denominator " << b.std_denom << "\n";
  }
}
