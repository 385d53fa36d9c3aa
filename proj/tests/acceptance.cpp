// Prints one line per acceptance criterion and exits nonzero if any fails.

#include "mackey/selftest.hpp"
#include "mackey/serialize.hpp"

#include <cstdio>
#include <string>

using namespace mackey;

int main() {
  bool all = true;
  auto line = [&](int id, const std::string& title, bool pass, double seconds, double limit) {
    const bool in_time = limit <= 0 || seconds <= limit;
    all = all && pass && in_time;
    std::printf("criterion %2d: %s  %-52s %8.2fs", id, pass && in_time ? "PASS" : "FAIL", title.c_str(), seconds);
    if (limit > 0) std::printf(" (limit %.0fs)", limit);
    std::printf("\n");
    std::fflush(stdout);
  };

  VerificationReport first = run_selftest({}, [&](const Criterion& c, const CheckResult& r, double seconds) {
    line(c.id, c.title, r.pass, seconds, c.time_limit_seconds);
    if (!r.pass) std::printf("%s\n", r.details.dump(2).c_str());
  });
  VerificationReport second = run_selftest();
  const bool same = dump(report_to_json(first)) == dump(report_to_json(second));
  line(10, "two selftest runs give identical reports", same, 0, 0);
  return all ? 0 : 1;
}
