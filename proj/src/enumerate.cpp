#include "npure/enumerate.hpp"

#include <deque>
#include <map>

namespace npure {

std::vector<Submodule> enumerate_submodules(const ModulePresentation& m, long budget) {
  const auto elems = element_vectors(m, budget);  // throws for infinite/over-budget
  std::vector<Submodule> result;
  std::map<IntMatrix, bool, MatrixLess> seen;
  std::deque<Submodule> queue;

  Submodule zero = zero_submodule(m);
  seen[zero.lattice().basis()] = true;
  queue.push_back(std::move(zero));

  while (!queue.empty()) {
    Submodule current = std::move(queue.front());
    queue.pop_front();
    for (const IntRowVector& v : elems) {
      IntMatrix gens(current.lattice().rank() + 1, m.ambient_rank());
      gens.topRows(current.lattice().rank()) = current.lattice().basis();
      gens.row(current.lattice().rank()) = v;
      Submodule grown = submodule_span(m, gens);
      if (!seen.emplace(grown.lattice().basis(), true).second) continue;
      queue.push_back(std::move(grown));
    }
    result.push_back(std::move(current));
  }
  return result;
}

}  // namespace npure
