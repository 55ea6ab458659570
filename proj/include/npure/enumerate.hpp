#pragma once

#include <vector>

#include "npure/modules.hpp"

namespace npure {

/// Every submodule of a finite module exactly once, canonical, in
/// deterministic order: breadth-first closure over generator sets starting
/// from zero, deduplicated by canonical basis.
std::vector<Submodule> enumerate_submodules(const ModulePresentation& m,
                                            long budget = kDefaultElementBudget);

}  // namespace npure
