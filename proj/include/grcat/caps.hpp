#pragma once

namespace grcat {

/// Size guards for the exponential-cost operations.  All limits are
/// configurable per call; the defaults keep every operation at desk scale.
struct Caps {
  int group_order = 12;           // automorphism search, cohomology base groups
  int extension_order = 32;      // materialized extension multiplication tables
  int object_count = 512;        // object sets of strict monoidal categories
  long long enumeration = 2'000'000;  // brute-force enumeration guard
};

}  // namespace grcat
