// Release checklist runner: one pass/fail line per criterion.
#include <cstdio>
#include <iostream>

#include "cover/acceptance.hpp"

int main() {
  auto results = cover::run_acceptance(nullptr);
  bool ok = true;
  for (const auto& r : results) {
    std::printf("criterion %2d: %s - %s [%.1fs]\n    %s\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    ok = ok && r.pass;
  }
  std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}
