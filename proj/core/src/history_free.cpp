#include "elimtree/history_free.hpp"

#include <numeric>

namespace elimtree {

namespace {
// Fixed charge for the selection and bookkeeping of steps H3 and H6.
constexpr std::uint64_t kStepOverhead = 6;
}  // namespace

HistoryFreeGenerator::HistoryFreeGenerator(const PeoGraph& pg)
    : pg_(&pg),
      f_(initial_forest(pg)),
      o_(static_cast<std::size_t>(pg.size()) + 1, Direction::up),
      s_(static_cast<std::size_t>(pg.size()) + 1),
      q_(static_cast<std::size_t>(pg.size()) + 1, 0),
      paths_(static_cast<std::size_t>(pg.size()) + 1),
      scratch_(pg.size()) {
  std::iota(s_.begin(), s_.end(), 0);
}

bool HistoryFreeGenerator::next() {
  if (done_) return false;
  const Vertex rho = pg_->rho();
  const Vertex j = rho == 0 ? 1 : s_[static_cast<std::size_t>(rho)];
  if (j == 1) {
    done_ = true;
    return false;
  }
  const auto uj = static_cast<std::size_t>(j);
  std::uint64_t ops = kStepOverhead;
  if (o_[uj] == Direction::down) {
    auto& path = paths_[uj];
    if (q_[uj] == 0) ops += insertion_path_of(*pg_, f_, j, scratch_, path);
    const auto pos = static_cast<std::size_t>(q_[uj]) + 1;
    const Vertex path_next = pos < path.size() ? path[pos] : 0;
    ops += rotate_down_fast(*pg_, f_, j, path_next);
    ++q_[uj];
  } else {
    ops += rotate_up_fast(*pg_, f_, j);
  }
  last_ = {j, o_[uj]};
  s_[static_cast<std::size_t>(rho)] = rho;
  bool flip = false;
  if (o_[uj] == Direction::up) {
    const Vertex p = f_.parent(j);
    if (p == 0 || p > j) {
      o_[uj] = Direction::down;
      q_[uj] = 0;
      flip = true;
    }
  } else if (f_.smaller_child_count(j) == 0) {
    o_[uj] = Direction::up;
    flip = true;
  }
  if (flip) {
    const Vertex k = pg_->alpha(j);
    s_[uj] = s_[static_cast<std::size_t>(k)];
    s_[static_cast<std::size_t>(k)] = k;
  }
  ops_.finish_step(ops);
  return true;
}

}  // namespace elimtree
