#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace indel {

// Dense undirected graph with bitset adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t row_words() const { return row_words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  const std::uint64_t* row(std::size_t v) const { return &bits_[v * row_words_]; }

 private:
  std::size_t order_;
  std::size_t row_words_;
  std::vector<std::uint64_t> bits_;
};

struct CliqueSearchStats {
  std::uint64_t nodes = 0;
};

// Exact maximum clique by bitset branch-and-bound with greedy-coloring bounds.
// Vertices are returned in increasing order. `incumbent`, when given, must be a
// clique; the search only looks for strictly larger ones. Deterministic.
std::vector<std::size_t> maximum_clique(const Graph& graph,
                                        const std::vector<std::size_t>& incumbent = {},
                                        CliqueSearchStats* stats = nullptr);

// Exhaustive subset enumeration; only for tiny graphs (order <= 24).
std::vector<std::size_t> maximum_clique_naive(const Graph& graph);

}  // namespace indel
