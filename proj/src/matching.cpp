#include "posetkit/matching.hpp"

#include <limits>
#include <queue>

namespace posetkit {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

BipartiteMatching::BipartiteMatching(std::size_t left, std::size_t right,
                                     std::vector<std::vector<std::size_t>> adjacency)
    : adj_(std::move(adjacency)),
      mate_left_(left, kFree),
      mate_right_(right, kFree),
      layer_(left, kUnreached),
      cursor_(left, 0) {
  adj_.resize(left);
  while (bfs()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (std::size_t u = 0; u < left; ++u) {
      if (mate_left_[u] == kFree && dfs(u)) ++size_;
    }
  }
}

bool BipartiteMatching::bfs() {
  std::queue<std::size_t> queue;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (mate_left_[u] == kFree) {
      layer_[u] = 0;
      queue.push(u);
    } else {
      layer_[u] = kUnreached;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t v : adj_[u]) {
      const std::size_t w = mate_right_[v];
      if (w == kFree) {
        found = true;
      } else if (layer_[w] == kUnreached) {
        layer_[w] = layer_[u] + 1;
        queue.push(w);
      }
    }
  }
  return found;
}

bool BipartiteMatching::dfs(std::size_t u) {
  for (std::size_t& i = cursor_[u]; i < adj_[u].size(); ++i) {
    const std::size_t v = adj_[u][i];
    const std::size_t w = mate_right_[v];
    if (w == kFree || (layer_[w] == layer_[u] + 1 && dfs(w))) {
      mate_left_[u] = v;
      mate_right_[v] = u;
      ++i;
      return true;
    }
  }
  layer_[u] = kUnreached;
  return false;
}

void BipartiteMatching::alternating_reach(std::vector<bool>& left_reached,
                                          std::vector<bool>& right_reached) const {
  left_reached.assign(adj_.size(), false);
  right_reached.assign(mate_right_.size(), false);
  std::queue<std::size_t> queue;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (mate_left_[u] == kFree) {
      left_reached[u] = true;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t v : adj_[u]) {
      if (right_reached[v] || mate_left_[u] == v) continue;
      right_reached[v] = true;
      const std::size_t w = mate_right_[v];
      if (w != kFree && !left_reached[w]) {
        left_reached[w] = true;
        queue.push(w);
      }
    }
  }
}

}  // namespace posetkit
