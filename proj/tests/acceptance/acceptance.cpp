#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tverberg/suites.hpp"

using namespace tverberg;

namespace {

struct Timed {
  Report report;
  double seconds = 0;
};

Timed timed(const std::string& suite, const SuiteOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  Report r = run_suite(suite, options);
  return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

std::size_t failures(const Report& r) {
  std::size_t n = 0;
  for (const auto& rec : r.records) n += rec.pass ? 0 : 1;
  return n;
}

int failed = 0;

void line(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %-44s %s\n", pass ? "PASS" : "FAIL", number, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

std::string summary(const Report& r, double seconds) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks, %.2f s", r.records.size() - failures(r), r.records.size(), seconds);
  return buf;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

int main() {
  SuiteOptions timing;
  timing.timing = true;

  {
    auto t = timed("chessboard-connectivity", timing);
    double slowest = 0;
    std::size_t golden = 0;
    bool golden_pass = true, vanish_pass = true;
    std::size_t boards = 0;
    for (const auto& rec : t.report.records) {
      if (starts_with(rec.id, "betti/")) {
        ++golden;
        golden_pass = golden_pass && rec.pass && rec.elapsed_ms < 1000;
        slowest = std::max(slowest, rec.elapsed_ms);
      } else {
        ++boards;
        vanish_pass = vanish_pass && rec.pass;
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu boards, slowest %.1f ms", golden, slowest);
    line(1, "chessboard Betti numbers 2x3 and 3x4", golden_pass && golden == 2, buf);
    std::snprintf(buf, sizeof buf, "%zu boards, %.2f s", boards, t.seconds);
    line(2, "chessboard vanishing range, m,n <= 7", vanish_pass && boards == 49 && t.seconds < 300, buf);
  }
  {
    SuiteOptions o = timing;
    o.primes = {3, 5, 7};
    auto t = timed("degree-factorial", o);
    const std::vector<std::string> expected = {"2", "24", "720"};
    bool ok = t.report.records.size() == 3 && t.report.pass();
    double p7 = 0;
    for (std::size_t i = 0; ok && i < 3; ++i) {
      std::string d = t.report.records[i].observed["degree"].get<std::string>();
      if (!d.empty() && d[0] == '-') d.erase(0, 1);
      ok = d == expected[i];
    }
    if (ok) p7 = t.report.records[2].elapsed_ms / 1000;
    char buf[96];
    std::snprintf(buf, sizeof buf, "|deg| = 2, 24, 720; p=7 in %.2f s", p7);
    line(3, "column map degree is (p-1)!", ok && p7 < 120, buf);
  }
  {
    auto t = timed("deleted-product-connectivity");
    line(4, "deleted product connectivity N-r", t.report.pass() && !t.report.records.empty(),
         summary(t.report, t.seconds));
  }
  {
    auto t = timed("deleted-join-iso");
    const bool instances = std::count_if(t.report.records.begin(), t.report.records.end(),
                                         [](const CheckRecord& r) { return starts_with(r.id, "join-split/"); }) == 50;
    line(5, "deleted join isomorphisms", t.report.pass() && instances && t.seconds < 60, summary(t.report, t.seconds));
  }
  {
    auto t = timed("radon-random");
    line(6, "Radon certificates, 1000 configurations",
         t.report.pass() && t.report.records.size() == 1000 && t.seconds < 30, summary(t.report, t.seconds));
  }
  {
    auto t = timed("witness-none");
    line(7, "witness configurations have no partition", t.report.pass() && t.report.records.size() == 5 && t.seconds < 300,
         summary(t.report, t.seconds));
  }
  {
    auto t = timed("tverberg-random");
    line(8, "Tverberg partitions, 6 x 100 configurations",
         t.report.pass() && t.report.records.size() == 600 && t.seconds < 600, summary(t.report, t.seconds));
  }
  {
    auto c = timed("colored");
    auto s = timed("soberon");
    const double seconds = c.seconds + s.seconds;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu + %zu checks, %zu failed, %.2f s", c.report.records.size(),
                  s.report.records.size(), failures(c.report) + failures(s.report), seconds);
    line(9, "colored and equal-coefficient partitions",
         c.report.pass() && s.report.pass() && c.report.records.size() == 500 && s.report.records.size() == 150 &&
             seconds < 900,
         buf);
  }
  {
    auto t = timed("collapse");
    line(10, "equivariant collapse to dimension r-2", t.report.pass() && t.report.records.size() == 4,
         summary(t.report, t.seconds));
  }
  {
    auto t = timed("quotient-euler");
    line(11, "free quotient Euler characteristic", t.report.pass() && t.report.records.size() == 6,
         summary(t.report, t.seconds));
  }
  {
    auto snf = timed("snf-props");
    auto lp = timed("lp-oracle");
    const double seconds = snf.seconds + lp.seconds;
    const auto smith = std::count_if(snf.report.records.begin(), snf.report.records.end(),
                                     [](const CheckRecord& r) { return starts_with(r.id, "smith/"); });
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu + %zu checks, %zu failed, %.2f s", snf.report.records.size(),
                  lp.report.records.size(), failures(snf.report) + failures(lp.report), seconds);
    line(12, "Smith form, boundary and LP engine checks",
         snf.report.pass() && lp.report.pass() && smith == 500 && lp.report.records.size() == 200 && seconds < 120, buf);
  }
  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
