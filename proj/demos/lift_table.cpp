// Theta lifts of a datum given on the command line, down both branches.

#include <iostream>

#include "mptheta/mptheta.hpp"

int main(int argc, char** argv) {
  using namespace mptheta;
  std::string expr = argc > 1 ? argv[1] : "L(St(1) v^1/2; T{})";
  try {
    LanglandsDatum d = normalize_datum(parse_datum(expr));
    auto fo = first_occurrence(d);
    std::cout << render(d) << "  l=" << fo.l << " m_down=" << fo.m_down << " m_up=" << fo.m_up << "\n";
    for (const auto& r : lift_table(d, QuadChar::trivial(), 3))
      std::cout << "  " << branch_name(r.tower.branch) << " m=" << r.m << ": " << render(*r.datum) << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
