#include <cstdio>
#include <cstring>

#include "amalgam/selftest.hpp"

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
int main(int argc, char** argv) {
  amalgam::SelftestOptions options;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;

  int failed = 0;
  for (std::size_t id = 1; id <= amalgam::criterion_names().size(); ++id) {
    const auto r = amalgam::run_criterion(static_cast<int>(id), options);
    std::printf("%s %2d %-30s %6.1fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, amalgam::criterion_names().size());
  return failed == 0 ? 0 : 1;
}
