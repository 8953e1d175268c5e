#include "elimtree/loopless.hpp"

#include <algorithm>
#include <numeric>

namespace elimtree {

TreeRotationTables::TreeRotationTables(const Graph& g) : n_(g.size()) {
  if (!is_tree(g)) throw GraphError("the loopless generator needs a tree");
  const auto cells = static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1);
  beta_.assign(cells, 0);
  gamma_.assign(cells, 0);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n_));
  for (Vertex i = 1; i <= n_; ++i) {
    // BFS from i; every vertex inherits the first step of the path to it.
    queue.clear();
    for (Vertex a : g.neighbors(i)) {
      beta_[at(i, a)] = a;
      queue.push_back(a);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbors(v))
        if (w != i && beta_[at(i, w)] == 0) {
          beta_[at(i, w)] = beta_[at(i, v)];
          queue.push_back(w);
        }
    }
  }
}

void TreeRotationTables::reset_gamma(const ElimForest& f) {
  std::fill(gamma_.begin(), gamma_.end(), 0);
  for (Vertex v = 1; v <= n_; ++v)
    if (const Vertex p = f.parent(v); p != 0) gamma_[at(p, beta(p, v))] = v;
}

bool TreeRotationTables::gamma_consistent(const ElimForest& f) const {
  TreeRotationTables fresh = *this;
  fresh.reset_gamma(f);
  return fresh.gamma_ == gamma_;
}

LooplessTreeGenerator::LooplessTreeGenerator(const PeoGraph& pg)
    : pg_(&pg),
      f_(initial_forest(pg)),
      tables_(pg.graph()),
      o_(static_cast<std::size_t>(pg.size()) + 1, Direction::up),
      s_(static_cast<std::size_t>(pg.size()) + 1) {
  std::iota(s_.begin(), s_.end(), 0);
  tables_.reset_gamma(f_);
}

std::uint64_t LooplessTreeGenerator::rotate_up(Vertex x) {
  const Vertex y = f_.parent(x);
  const Vertex p = f_.parent(y);
  const Vertex a = p != 0 ? tables_.beta(p, y) : 0;
  const Vertex b = tables_.beta(y, x);
  const Vertex c = tables_.beta(x, y);
  const Vertex k = tables_.gamma(x, c);
  std::uint64_t ops = 6;
  f_.unlink(x);
  if (k != 0) {
    f_.unlink(k);
    f_.link(k, y);
    ops += 2;
  }
  f_.unlink(y);
  f_.link(x, p);
  f_.link(y, x);
  if (p != 0) {
    tables_.set_gamma(p, a, x);
    ++ops;
  }
  tables_.set_gamma(y, b, k);
  tables_.set_gamma(x, c, y);
  // six reads, then one per splice and per table write
  return ops + 6;
}

bool LooplessTreeGenerator::next() {
  if (done_) return false;
  const Vertex rho = pg_->rho();
  const Vertex j = rho == 0 ? 1 : s_[static_cast<std::size_t>(rho)];
  if (j == 1) {
    done_ = true;
    return false;
  }
  const auto uj = static_cast<std::size_t>(j);
  std::uint64_t ops = 6;
  if (o_[uj] == Direction::down) ops += rotate_up(f_.smaller_child(j));
  else ops += rotate_up(j);
  last_ = {j, o_[uj]};
  s_[static_cast<std::size_t>(rho)] = rho;
  bool flip = false;
  if (o_[uj] == Direction::up) {
    const Vertex p = f_.parent(j);
    flip = p == 0 || p > j;
    if (flip) o_[uj] = Direction::down;
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
