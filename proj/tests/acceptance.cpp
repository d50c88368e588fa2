#include <cstdio>
#include <iostream>

#include "nilcent/verify.hpp"

using namespace nilcent;

/// One line per acceptance criterion; exits nonzero when any criterion fails.
int main() {
  VerifyOptions opt;
  opt.stretch = true;
  std::vector<CriterionResult> all;
  for (const char* suite : {"classical", "exceptional-structural", "exceptional-groups", "properties"})
    for (auto& r : run_suite(suite, opt)) all.push_back(std::move(r));
  for (const auto& r : all) {
    std::string outcome = r.outcome;
    for (auto& ch : outcome) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::cout << "criterion " << r.id << ": " << outcome << " (" << secs << ") " << r.title << " -- " << r.detail << "\n";
  }
  int code = exit_code(all);
  std::cout << (code == 0 ? "acceptance: all criteria pass" : "acceptance: not all criteria pass") << "\n";
  return code == 1 ? 1 : 0;
}
