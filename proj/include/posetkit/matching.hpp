#pragma once

#include <cstddef>
#include <vector>

namespace posetkit {

// Maximum cardinality matching in a bipartite graph by Hopcroft-Karp.
// Left vertices 0..left-1, right vertices 0..right-1; adjacency lists are
// scanned in the given order, so the result is deterministic.
class BipartiteMatching {
 public:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  BipartiteMatching(std::size_t left, std::size_t right,
                    std::vector<std::vector<std::size_t>> adjacency);

  std::size_t size() const noexcept { return size_; }
  std::size_t mate_of_left(std::size_t u) const { return mate_left_[u]; }
  std::size_t mate_of_right(std::size_t v) const { return mate_right_[v]; }

  // Left and right vertices reachable from free left vertices along
  // alternating paths; the König vertex cover is (L \ Z) + (R & Z).
  void alternating_reach(std::vector<bool>& left_reached,
                         std::vector<bool>& right_reached) const;

 private:
  bool bfs();
  bool dfs(std::size_t u);

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> layer_;
  std::vector<std::size_t> cursor_;
  std::size_t size_ = 0;
};

}  // namespace posetkit
