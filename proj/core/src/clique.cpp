#include "indel/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace indel {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

bool any(const std::uint64_t* set, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (set[w] != 0) return true;
  }
  return false;
}

// Branch-and-bound over a relabelled graph in which vertex 0 is colored first.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& graph, std::size_t best_size, CliqueSearchStats* stats)
      : graph_(graph),
        words_(graph.row_words()),
        best_size_(best_size),
        stats_(stats) {}

  void run() {
    const std::size_t order = graph_.order();
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < order; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(all);
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  struct Level {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colors;
    std::vector<std::uint64_t> uncolored;
    std::vector<std::uint64_t> klass;
    std::vector<std::uint64_t> candidates;
  };

  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) {
      Level l;
      l.uncolored.resize(words_);
      l.klass.resize(words_);
      l.candidates.resize(words_);
      levels_.push_back(std::move(l));
    }
    return levels_[depth];
  }

  // Greedy sequential coloring; only vertices whose color could still lead to
  // an improvement are listed, in non-decreasing color order.
  void color_sort(const std::vector<std::uint64_t>& pool, Level& lv) {
    lv.vertices.clear();
    lv.colors.clear();
    std::copy(pool.begin(), pool.end(), lv.uncolored.begin());
    const std::size_t current = current_.size();
    const std::size_t min_color = best_size_ >= current ? best_size_ - current + 1 : 1;
    std::size_t color = 0;
    while (any(lv.uncolored.data(), words_)) {
      ++color;
      std::copy(lv.uncolored.begin(), lv.uncolored.end(), lv.klass.begin());
      for (std::size_t w = 0; w < words_; ++w) {
        while (lv.klass[w] != 0) {
          const std::size_t bit = std::countr_zero(lv.klass[w]);
          const std::size_t v = w * 64 + bit;
          const std::uint64_t mask = ~(std::uint64_t{1} << bit);
          lv.uncolored[w] &= mask;
          lv.klass[w] &= mask;
          const std::uint64_t* row = graph_.row(v);
          for (std::size_t u = w; u < words_; ++u) lv.klass[u] &= ~row[u];
          if (color >= min_color) {
            lv.vertices.push_back(v);
            lv.colors.push_back(color);
          }
        }
      }
    }
  }

  void expand(std::vector<std::uint64_t> pool) {
    if (stats_ != nullptr) ++stats_->nodes;
    const std::size_t depth = current_.size();
    Level& lv = level(depth);
    color_sort(pool, lv);
    // Copy out: deeper calls reuse levels_ storage and may reallocate it.
    const std::vector<std::size_t> vertices = lv.vertices;
    const std::vector<std::size_t> colors = lv.colors;
    std::vector<std::uint64_t> next(words_);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_size_) return;
      const std::size_t v = vertices[i];
      const std::uint64_t* row = graph_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = pool[w] & row[w];
      current_.push_back(v);
      if (any(next.data(), words_)) {
        expand(next);
      } else if (current_.size() > best_size_) {
        best_size_ = current_.size();
        best_ = current_;
      }
      current_.pop_back();
      pool[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const Graph& graph_;
  std::size_t words_;
  std::size_t best_size_;
  CliqueSearchStats* stats_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::vector<Level> levels_;
};

// Degeneracy order, reversed: high-core vertices come first and are colored first.
std::vector<std::size_t> search_order(const Graph& graph) {
  const std::size_t n = graph.order();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order(n);
  for (std::size_t slot = n; slot-- > 0;) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (pick == n || degree[v] < degree[pick]) pick = v;
    }
    removed[pick] = true;
    order[slot] = pick;
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && graph.adjacent(pick, u)) --degree[u];
    }
  }
  return order;
}

}  // namespace

Graph::Graph(std::size_t order)
    : order_(order), row_words_(std::max<std::size_t>(1, words_for(order))), bits_(order * row_words_, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order_ || v >= order_) throw std::out_of_range("Graph::add_edge: vertex out of range");
  if (u == v) return;
  bits_[u * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return (bits_[u * row_words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t total = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < row_words_; ++w) total += std::popcount(r[w]);
  return total;
}

std::vector<std::size_t> maximum_clique(const Graph& graph, const std::vector<std::size_t>& incumbent,
                                        CliqueSearchStats* stats) {
  const std::size_t n = graph.order();
  if (n == 0) return {};
  for (std::size_t i = 0; i < incumbent.size(); ++i) {
    for (std::size_t j = i + 1; j < incumbent.size(); ++j) {
      if (!graph.adjacent(incumbent[i], incumbent[j])) {
        throw std::invalid_argument("maximum_clique: incumbent is not a clique");
      }
    }
  }

  const std::vector<std::size_t> order = search_order(graph);
  Graph relabelled(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph.adjacent(order[i], order[j])) relabelled.add_edge(i, j);
    }
  }

  std::vector<std::size_t> best = incumbent;
  if (best.empty()) best.push_back(0);
  CliqueSearch search(relabelled, best.size(), stats);
  search.run();
  if (!search.best().empty()) {
    best.clear();
    for (std::size_t v : search.best()) best.push_back(order[v]);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<std::size_t> maximum_clique_naive(const Graph& graph) {
  const std::size_t n = graph.order();
  if (n > 24) throw std::invalid_argument("maximum_clique_naive: graph too large");
  std::uint32_t best_mask = n > 0 ? 1U : 0U;
  int best_size = n > 0 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool clique = true;
    for (std::size_t u = 0; u < n && clique; ++u) {
      if (!((mask >> u) & 1U)) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (((mask >> v) & 1U) && !graph.adjacent(u, v)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) {
      best_size = size;
      best_mask = mask;
    }
  }
  std::vector<std::size_t> best;
  for (std::size_t v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1U) best.push_back(v);
  }
  return best;
}

}  // namespace indel
