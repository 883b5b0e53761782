// Acceptance suite: one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "redux/acceptance.hpp"

int main(int argc, char** argv) {
  redux::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--serial") {
      opt.exec = redux::Exec::serial;
    } else {
      opt.only.push_back(std::atoi(a.c_str()));
    }
  }
  int failed = 0;
  redux::acceptance::run(opt, [&](const redux::acceptance::CriterionResult& r) {
    std::printf("%s\n", redux::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
