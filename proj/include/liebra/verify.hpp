#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liebra/util.hpp"

namespace liebra {

struct CheckFailure {
  std::string check;       // violated property
  std::string reproducer;  // serialized offending object(s)
};

struct SuiteReport {
  std::string name;
  int max_n = 0;
  long long checks = 0;
  std::vector<CheckFailure> failures;  // first few only
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  int max_n = 4;
  int samples = 1000;
  std::uint64_t seed = 7;
};

// Suite names: trees, counting, monomials, rewrite, relations, pairing,
// orders, eil, poisson.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt);

struct AcceptanceResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // summary counts, or the first failure
  double seconds = 0.0;
};

// The ten release gates; exact integer checks throughout.
std::vector<AcceptanceResult> run_acceptance();

}  // namespace liebra
