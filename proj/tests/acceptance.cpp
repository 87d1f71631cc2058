// Runs the thirteen end-to-end checks and prints one line for each.
#include <cstdlib>
#include <iostream>
#include <thread>

#include "x56/verify.hpp"

int main(int argc, char** argv) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (argc > 1) threads = static_cast<unsigned>(std::atoi(argv[1]));
  x56::Verifier v(threads);
  int failed = 0;
  for (int k = 1; k <= 13; ++k) {
    auto r = v.run(k);
    std::cout << x56::summary_line(r) << std::endl;
    if (!r.pass()) ++failed;
  }
  std::cout << (13 - failed) << "/13 criteria pass" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
