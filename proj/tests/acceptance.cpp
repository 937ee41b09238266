// acceptance gate: one line per criterion, exit 0 iff all 12 pass
#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "cmglue/verify.hpp"

namespace {

// run a command, capture stdout bytes and exit code
std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main(int argc, char** argv) {
  auto rep = cmglue::verify_all(2, 0);
  bool all = true;
  for (const auto& item : rep.items) {
    std::printf("criterion %2d [%s] %s: %s\n", item.criterion, item.pass ? "pass" : "FAIL",
                item.name.c_str(), item.detail.c_str());
    all = all && item.pass;
  }

  bool c12 = false;
  std::string detail;
  if (argc > 1) {
    std::string cmd = std::string(argv[1]) + " verify-all --bound 2";
    auto [code1, out1] = capture(cmd);
    auto [code2, out2] = capture(cmd);
    c12 = code1 == 0 && code2 == 0 && !out1.empty() && out1 == out2;
    detail = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) +
             (out1 == out2 ? ", byte-identical output" : ", OUTPUT DIFFERS");
  } else {
    // no CLI path supplied: check determinism of the library report rendering
    auto rep2 = cmglue::verify_all(2, 0);
    c12 = rep.pass && rep2.pass &&
          cmglue::render_verify_report(rep) == cmglue::render_verify_report(rep2);
    detail = "library fallback (no cm-glue path given)";
  }
  std::printf("criterion 12 [%s] verify-all determinism: %s\n", c12 ? "pass" : "FAIL",
              detail.c_str());
  all = all && c12;
  std::printf("acceptance: %s\n", all ? "pass" : "FAIL");
  return all ? 0 : 1;
}
