// Acceptance suite: runs every criterion and prints one line per check.
// Exit code 0 when all pass.  --full adds the extended sweeps.

#include <cstring>
#include <iostream>

#include "eqmon/verify.hpp"

int main(int argc, char** argv) {
  eqmon::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) options.full = true;
  }
  eqmon::Report report = eqmon::verify_all(options);
  std::cout << report.text();
  return report.overall_pass() ? 0 : 1;
}
