// Acceptance run: one PASS/FAIL line per criterion, INFO lines for records
// that report without judging.

#include <iostream>

#include "skw/suite.hpp"

int main() {
  using namespace skw;
  Report rep("acceptance");
  suite::SuiteConfig cfg;
  try {
    suite::run_all(rep, CyclotomicField{}, cfg);
  } catch (const std::exception& e) {
    std::cout << "FAIL internal: " << e.what() << "\n";
    return 2;
  }
  int failed = 0;
  for (int c = 1; c <= 12; ++c) {
    bool ok = rep.criterion_pass(c);
    failed += !ok;
    double seconds = 0;
    for (const auto& r : rep.records()) {
      if (r.criterion == c) seconds += r.seconds;
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c << ": " << suite::kCriteria[static_cast<std::size_t>(c - 1)] << " ("
              << seconds << " s)\n";
    for (const auto& r : rep.records()) {
      if (r.criterion != c) continue;
      if (r.info) {
        std::cout << "  INFO " << r.name << ": " << r.computed.dump();
        if (!r.note.empty()) std::cout << " -- " << r.note;
        std::cout << "\n";
      } else if (!r.pass) {
        std::cout << "  failed " << r.name << ": expected " << r.expected.dump() << " [" << to_string(r.provenance)
                  << "], computed " << r.computed.dump();
        if (!r.note.empty()) std::cout << " -- " << r.note;
        std::cout << "\n";
      }
    }
  }
  std::cout << (12 - failed) << "/12 criteria pass, total " << rep.elapsed() << " s\n";
  return failed == 0 ? 0 : 1;
}
