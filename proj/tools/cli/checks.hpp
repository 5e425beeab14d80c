#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dimfree::cli {

struct LawResult {
  std::string suite;
  std::string law;
  double max_residual = 0.0;
  double tol = 0.0;
  long samples = 0;
  bool pass = true;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  int trials = 200;
};

// stp_laws, hyper_ring, perm, geometry, lie; "all" runs each in turn.
const std::vector<std::string>& suite_names();
std::vector<LawResult> run_suite(const std::string& suite, const CheckOptions& opt);

}  // namespace dimfree::cli
