#pragma once

#include <string>
#include <vector>

namespace hyperalg {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Worked examples with known answers: table spot checks, the unit octonion with
/// angle pi/4 and its image in O(2,4,7), and the single-root split case.
std::vector<CheckResult> run_reference_examples();

}  // namespace hyperalg
