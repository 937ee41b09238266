#pragma once

#include <string>
#include <vector>

namespace cmglue {

struct VerifyItem {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic summary (no timings)
  double seconds = 0.0;
};

struct VerifyReport {
  int bound = 2;
  unsigned long seed = 0;
  std::vector<VerifyItem> items;
  bool pass = false;
};

// criteria 1-11; the byte-determinism criterion is exercised by the callers
VerifyReport verify_all(int bound, unsigned long seed = 0);

// canonical text rendering, one line per criterion (timings excluded)
std::string render_verify_report(const VerifyReport& r);

}  // namespace cmglue
