// Walks every partition lambda of n and prints the cycle-count polynomial
// P_lambda(q) together with what is known about its zeros: all of them sit
// on the imaginary axis, and the coefficient sequence of the reduced part
// R_lambda is log-concave with no internal zeros.
//
// Usage: polynomial_zoo [n]   (default 6)

#include <cstdlib>
#include <iostream>

#include <cycleforge/cycleforge.hpp>

int main(int argc, char** argv) {
  using namespace cycleforge;

  int n = 6;
  if (argc > 1) n = std::atoi(argv[1]);
  if (n < 1) n = 1;

  for (const Partition& lambda : partitions_of(n)) {
    const Polynomial p = p_lambda(lambda).poly;
    const RootLocationReport report = verify_real_part(p, Rational(0));
    const CoeffProfile profile = coeff_profile(r_part(p));

    std::cout << "P_" << lambda.to_string() << "(q) = " << to_display_string(p)
              << '\n';
    std::cout << "  zeros on Re = 0: " << (report.verdict ? "yes" : "NO")
              << ", R log-concave: " << (profile.log_concave ? "yes" : "NO")
              << ", unimodal: " << (profile.unimodal ? "yes" : "NO") << '\n';
    if (!report.verdict) std::cout << "  witness: " << report.witness << '\n';
  }

  std::cout << "\nEvery P_lambda above has degree n - l(lambda) + 1 and mass\n"
               "P_lambda(1) = n!/z_lambda, the number of permutations with\n"
               "cycle type lambda.\n";
  return 0;
}
