// Largest character degree of GL_n(q) against the Steinberg degree,
// with the certified bracket on the ratio.
//
//   bounds_demo [n_max] [q]   defaults: n_max = 12, q = 3

#include <lie_degrees/maxdegree.hpp>

#include <cstdlib>
#include <iostream>

using namespace lie_degrees;

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 12;
  const long q = argc > 2 ? std::atol(argv[2]) : 3;

  for (const BGLResult& r : b_gl_table(n_max, q)) {
    BoundBracket br = bound_bracket(GroupSpec(GroupFamily::A, r.n, q));
    std::cout << "n=" << r.n << "  b=" << r.b << "  b/St=" << to_decimal(r.c) << "  in [" << to_decimal(br.lower.lo)
              << ", " << to_decimal(br.upper.hi) << "]  " << (br.certifies(r.c) ? "ok" : "OUTSIDE") << "  via "
              << to_string(r.witness) << "\n";
  }

  GroupSpec g(GroupFamily::A, n_max, q);
  EpsilonCertificate e = epsilon_certificate(g);
  std::cout << to_string(g) << ": " << to_string(e.verdict) << " (" << e.reason << ")\n";
}
