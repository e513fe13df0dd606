#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "bmt/selftest.hpp"

// Usage: acceptance [--quick] [N]   (N = run criterion N only)
int main(int argc, char** argv) {
  int threads = 1;
  if (const char* env = std::getenv("BMT_THREADS")) threads = std::max(1, std::atoi(env));
  bool quick = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--quick")
      quick = true;
    else
      only = std::atoi(a.c_str());
  }
  if (only < 0 || only > 9) {
    std::cerr << "criterion must be 1..9\n";
    return 2;
  }
  bool all = true;
  const auto results = bmt::run_acceptance(quick ? bmt::SelftestLevel::Quick : bmt::SelftestLevel::Full, threads,
                                           [&](const bmt::CriterionResult& r) {
                                             std::cout << bmt::format_result(r) << std::endl;
                                             all = all && r.pass;
                                           },
                                           only);
  std::cout << (all ? "all criteria pass" : "some criteria FAILED") << " (" << results.size() << " run)" << std::endl;
  return all ? 0 : 1;
}
