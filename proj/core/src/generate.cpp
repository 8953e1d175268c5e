#include "elimtree/generate.hpp"

#include "elimtree/history_free.hpp"
#include "elimtree/loopless.hpp"

namespace elimtree {

namespace {

template <class Generator>
GenerationStats drive(Generator& gen, const ForestVisitor& visit) {
  GenerationStats stats;
  stats.forests = 1;
  if (!visit(gen.current(), nullptr)) return stats;
  while (gen.next()) {
    ++stats.forests;
    const Step step = gen.last_step();
    stats.total_ops = gen.ops().total;
    stats.max_step_ops = gen.ops().max_step;
    if (!visit(gen.current(), &step)) return stats;
  }
  stats.complete = true;
  return stats;
}

}  // namespace

GenerationStats generate_all(const PeoGraph& pg, const ForestVisitor& visit, Engine engine) {
  if (engine == Engine::automatic) engine = is_tree(pg.graph()) ? Engine::loopless : Engine::history_free;
  if (engine == Engine::loopless) {
    LooplessTreeGenerator gen(pg);
    return drive(gen, visit);
  }
  HistoryFreeGenerator gen(pg);
  return drive(gen, visit);
}

std::vector<ElimForest> generate_list(const PeoGraph& pg, Engine engine) {
  std::vector<ElimForest> out;
  generate_all(pg, [&out](const ElimForest& f, const Step*) {
    out.push_back(f);
    return true;
  }, engine);
  return out;
}

}  // namespace elimtree
