#include <cstdio>

#include "grmir/acceptance.hpp"

int main() {
  auto results = grmir::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%2d] %s  %6.2fs  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.seconds, r.name.c_str());
    std::printf("     %s\n", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
