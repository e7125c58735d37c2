#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/dag.hpp"

namespace indep::fixtures {

Dag p4lin();
Dag p4tr();
Dag p4bl();
Dag p4br();
Dag p3lin();
Dag p5lin();
Dag p6lin();
/// 3x3 grid, vertices "(c,r)", edges (c,r) -> (c+1,r) and (c,r) -> (c,r-1).
Dag grid3();
Dag tam6();
Dag nu5();

/// Linearly oriented path n -> n-1 -> ... -> 1.
Dag path(int n);

/// Catalog names in a fixed order.
const std::vector<std::string>& names();
std::optional<Dag> by_name(const std::string& name);

}  // namespace indep::fixtures
