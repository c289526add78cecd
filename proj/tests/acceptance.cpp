// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "maxff/classify.hpp"
#include "maxff/suites.hpp"

using namespace maxff;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<SuiteResult()> run;
  double time_limit_s;  // 0 = none
};

SuiteResult class_count_examples() {
  SuiteResult r{"class counts"};
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{13, 6}, {16, 5}, {15, 2}})
    r.expect(class_count(m) == n, [m = m] { return "N(" + std::to_string(m) + ")=" + std::to_string(class_count(m)); });
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "q=25 gap tables (12 sequences)", [] { return check_tables25(); }, 1.0},
      {2, "genus m-1 at P0, Pinf (m<=400) and P(+-alpha) (m<=100)",
       [] { return check_genus_consistency(400, 100); }, 0},
      {3, "monomial oracle = closed form up to 4m, m<=200", [] { return check_oracle_equivalence(200); }, 0},
      {4, "Apery minimality of listed generators, m<=400", [] { return check_apery_minimality(400); }, 0},
      {5, "proper divisors of m are gaps at Pinf, m<=400", [] { return check_divisor_gaps(400); }, 0},
      {6, "compact generators = full generators, m<=200", [] { return check_compact_generators(200); }, 0},
      {7, "special semigroups for i=1 and i=(m-2)/2, m<=100", [] { return check_special_semigroups(100); }, 0},
      {8, "maximality for q in {5,...,49}",
       [] { return check_maximality({5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 31, 49}); }, 60.0},
      {9, "phi2 to 1e5, class counts to 1e4, N(13)=6 N(16)=5 N(15)=2",
       [] {
         auto r = check_counting(100'000, 10'000);
         r.absorb(class_count_examples());
         return r;
       },
       0},
      {10, "maps verify on >=100 points; sigma_4 order 4 with 4-cycle", [] { return check_maps({}); }, 0},
      {11, "distinguishing gaps for m<=60; six distinct m=13 profiles", [] { return check_distinguishing(60); }, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{c.title};
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
    const bool ok = error.empty() && r.ok() && in_time;
    if (!ok) ++failed;
    std::printf("%s criterion %2d: %s [%lld/%lld checks, %.2fs%s]\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), static_cast<long long>(r.passed), static_cast<long long>(r.checks), secs,
                c.time_limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.time_limit_s)) + "s").c_str()
                                   : "");
    for (const auto& n : r.notes) std::printf("      %s\n", n.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (r.first_failure) std::printf("      first failure: %s\n", r.first_failure->c_str());
    if (!in_time) std::printf("      over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
