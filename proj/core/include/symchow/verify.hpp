#pragma once

#include <string>
#include <vector>

namespace symchow {

/// Term counts grow like Bell numbers; 12 keeps the verify sweep
/// interactive. Raise per call when you know what you are doing.
inline constexpr int kDefaultAmbientCap = 12;

struct VerifyRow {
  std::string identity;
  int n = 0;  // 0 for grid-level rows
  bool pass = false;
  std::string computed;
  std::string expected;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<VerifyRow> rows;
  bool all_pass = true;
};

/// Re-derives every closed-form identity with the engine for n = 2..n_max
/// with g, d, r symbolic, and checks the Bogomolov-gap grid properties.
/// Requires 2 <= n_max <= ambient_cap.
VerifyReport run_verification(int n_max, int ambient_cap = kDefaultAmbientCap);

}  // namespace symchow
