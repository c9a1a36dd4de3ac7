// Prints, for each degree, the number of curves tangent to two lines and
// how many of them the alternating sign sequence makes real.

#include <iostream>

#include "tz/counts.hpp"

int main(int argc, char** argv) {
  const int max_degree = argc > 1 ? std::atoi(argv[1]) : 6;
  for (int d = 2; d <= max_degree; ++d) {
    const auto r = tz::maximality_report(d);
    std::cout << "d=" << d << "  complex=" << r.complex.total_complex
              << "  real=" << r.real.total_real.value_or(0)
              << (r.maximal ? "  (all real)" : "") << '\n';
  }
  return 0;
}
