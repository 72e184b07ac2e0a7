// Unipotent degrees of GL_n(q), GU_n(q) and the classical groups.
//
//   degrees_demo [n] [q]      defaults: n = 6, q = 2

#include <lie_degrees/unipotent.hpp>

#include <cstdlib>
#include <iostream>

using namespace lie_degrees;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  const long q = argc > 2 ? std::atol(argv[2]) : 2;

  HookDegreeTable gl(n, q, false), gu(n, q, true);
  std::cout << "partition  GL_" << n << "(" << q << ")  GU_" << n << "(" << q << ")\n";
  for_each_partition(n, [&](const Partition& p) {
    std::cout << to_string(p) << "  " << gl.degree(p) << "  " << gu.degree(p) << "\n";
  });

  // The Steinberg character should be the unique largest in each family.
  for (Family f : {Family::GL, Family::GU, Family::BC, Family::D, Family::D2}) {
    if (n < 2 && (f == Family::D || f == Family::D2)) continue;
    SteinbergVerdict v = verify_steinberg_max(n, q, f);
    std::cout << to_string(f) << ": St = " << v.steinberg << (v.ok ? " beats " : " ties or loses to ") << v.runner_up
              << " = " << v.runner_up_degree << "\n";
  }
}
