// One PASS/FAIL line per acceptance criterion, from the reproduction suite.

#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "wicks/verify.hpp"

int main(int argc, char** argv) {
  wicks::SuiteOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-slow") == 0) opts.skip_slow = true;
    if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
  }
  wicks::FormLibrary library;
  const wicks::VerificationReport report = wicks::run_reproduction_suite(opts, library);

  std::map<int, std::vector<const wicks::ClaimResult*>> by_criterion;
  for (const auto& c : report.claims) by_criterion[c.criterion].push_back(&c);

  bool all = true;
  auto summarize = [&](const std::string& label, const std::vector<const wicks::ClaimResult*>& claims) {
    bool failed = false, skipped = false;
    double seconds = 0;
    std::string ids;
    for (const auto* c : claims) {
      failed = failed || c->status == wicks::ClaimStatus::fail;
      skipped = skipped || c->status == wicks::ClaimStatus::skipped;
      seconds += c->seconds;
      ids += (ids.empty() ? "" : " ") + c->id;
    }
    const char* verdict = claims.empty() || failed ? "FAIL" : skipped ? "SKIP" : "PASS";
    all = all && !(claims.empty() || failed);
    std::cout << label << ": " << verdict << "  [" << ids << "] " << seconds << " s\n";
    for (const auto* c : claims) {
      if (verbose || c->status != wicks::ClaimStatus::pass) {
        std::cout << "    " << c->id << " " << wicks::to_string(c->status) << ": " << c->details << "\n";
      }
    }
  };
  for (int k = 1; k <= 13; ++k) summarize("criterion " + std::to_string(k), by_criterion[k]);
  if (by_criterion.count(0)) summarize("supplementary", by_criterion[0]);
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << "\n";
  return all ? 0 : 1;
}
