#include <cstdlib>
#include <iostream>

#include "grasscoh/acceptance.hpp"

// One line per acceptance criterion; exits nonzero if any line fails.
int main(int argc, char** argv) {
  const bool details = argc > 1 && std::string(argv[1]) == "--details";
  int failed = 0;
  grasscoh::run_acceptance({}, [&](const grasscoh::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::cout << grasscoh::format_result(r, details || !r.passed) << std::flush;
  });
  std::cout << (failed == 0 ? "all criteria pass\n" : std::to_string(failed) + " criterion line(s) fail\n");
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
