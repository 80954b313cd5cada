#ifndef MATCUT_BUDGET_HPP
#define MATCUT_BUDGET_HPP

#include <string>

namespace matcut {

// Iteration counts behind the CLI's --budget presets. One table, documented
// in the README; every knob can also be set individually.
struct Budget {
  int als_iterations = 40;    // 0 disables the ALS upper-bound route
  int dual_restarts = 16;
  int dual_iterations = 80;
  int rounding_trials = 128;  // discrepancy hyperplane rounding
  int maxcut_trials = 256;    // cut rounding trials
  int local_restarts = 64;    // local-search restarts

  static Budget fast() { return {0, 2, 25, 64, 128, 16}; }
  static Budget standard() { return {40, 16, 80, 128, 256, 64}; }
  static Budget thorough() { return {120, 32, 160, 512, 1024, 256}; }

  static Budget from_name(const std::string& name);
};

}  // namespace matcut

#endif
