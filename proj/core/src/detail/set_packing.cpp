#include "detail/set_packing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>

namespace indel::detail {

namespace {

constexpr std::size_t kMaxTableauEntries = std::size_t{1} << 23;
constexpr double kPivotTolerance = 1e-9;
// Integer bounds are floor(b + kBoundSlack); absorbs rounding in the sums.
constexpr double kBoundSlack = 1e-6;

std::vector<std::vector<std::uint32_t>> cliques_of_vertices(const PackingInstance& instance) {
  std::vector<std::vector<std::uint32_t>> member_of(instance.vertices);
  for (std::uint32_t k = 0; k < instance.cliques.size(); ++k) {
    for (std::uint32_t x : instance.cliques[k]) member_of[x].push_back(k);
  }
  return member_of;
}

// Raises weights until every vertex is covered, largest clique first.
void repair_cover(const PackingInstance& instance, std::vector<double>& w) {
  const auto member_of = cliques_of_vertices(instance);
  std::vector<double> covered(instance.vertices, 0.0);
  for (double& v : w) v = std::max(v, 0.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (std::uint32_t x : instance.cliques[k]) covered[x] += w[k];
  }
  for (std::size_t x = 0; x < instance.vertices; ++x) {
    if (covered[x] >= 1.0) continue;
    std::uint32_t pick = member_of[x].front();
    for (std::uint32_t k : member_of[x]) {
      if (instance.cliques[k].size() > instance.cliques[pick].size()) pick = k;
    }
    const double add = 1.0 - covered[x];
    w[pick] += add;
    for (std::uint32_t y : instance.cliques[pick]) covered[y] += add;
  }
  for (double& v : w) v *= 1.0 + 1e-12;
}

// max sum(v) s.t. sum_{x in K} v_x <= 1 per clique, v >= 0, by a dense primal
// simplex from the slack basis. Right-hand sides get a tiny deterministic
// perturbation against degenerate cycling; the duals it returns are feasible
// for the original problem whatever the right-hand side.
bool packing_lp_duals(const PackingInstance& instance, std::vector<double>& duals, double& value) {
  const std::size_t m = instance.cliques.size();
  const std::size_t nv = instance.vertices;
  const std::size_t cols = nv + m;
  if (m == 0 || m * cols > kMaxTableauEntries) return false;

  std::vector<double> tab(m * cols, 0.0);
  std::vector<double> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint32_t x : instance.cliques[i]) tab[i * cols + x] = 1.0;
    tab[i * cols + nv + i] = 1.0;
    rhs[i] = 1.0 + 1e-7 * static_cast<double>((i * 2654435761U) % 1000) / 1000.0;
    basis[i] = nv + i;
  }
  std::vector<double> reduced(cols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) reduced[j] = -1.0;
  double objective = 0.0;

  const std::size_t max_pivots = 50 * cols;
  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots == max_pivots) return false;
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] < -kPivotTolerance && (enter == cols || reduced[j] < reduced[enter])) enter = j;
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double a = tab[i * cols + enter];
      if (a <= kPivotTolerance) continue;
      const double r = rhs[i] / a;
      if (r < ratio || (r == ratio && basis[i] < basis[leave])) {
        ratio = r;
        leave = i;
      }
    }
    if (leave == m) return false;  // unbounded cannot happen; bail out on numerical trouble

    double* prow = &tab[leave * cols];
    const double inv = 1.0 / prow[enter];
    for (std::size_t j = 0; j < cols; ++j) prow[j] *= inv;
    rhs[leave] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double* row = &tab[i * cols];
      const double f = row[enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) row[j] -= f * prow[j];
      rhs[i] -= f * rhs[leave];
    }
    const double f = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= f * prow[j];
    objective -= f * rhs[leave];
    basis[leave] = enter;
  }

  duals.assign(reduced.begin() + static_cast<std::ptrdiff_t>(nv), reduced.end());
  value = objective;
  return true;
}

class PackingSearch {
 public:
  PackingSearch(const PackingInstance& instance, const std::vector<double>& cover, std::vector<std::uint32_t> incumbent,
                const ExactSearchLimits& limits)
      : instance_(instance),
        weight_(cover),
        words_((instance.vertices + 63) / 64),
        member_of_(cliques_of_vertices(instance)),
        best_(std::move(incumbent)),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {
    const std::size_t m = instance.cliques.size();
    clique_bits_.assign(m * words_, 0);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::uint32_t x : instance.cliques[k]) clique_bits_[k * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
    }
    closed_nbhd_.assign(instance.vertices * words_, 0);
    for (std::size_t x = 0; x < instance.vertices; ++x) {
      std::uint64_t* row = &closed_nbhd_[x * words_];
      for (std::uint32_t k : member_of_[x]) {
        const std::uint64_t* c = &clique_bits_[k * words_];
        for (std::size_t w = 0; w < words_; ++w) row[w] |= c[w];
      }
    }
    count_.resize(m);
    slack_.resize(instance.vertices);
  }

  PackingResult run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t x = 0; x < instance_.vertices; ++x) all[x / 64] |= std::uint64_t{1} << (x % 64);
    search(std::move(all));
    PackingResult result;
    result.best = best_;
    std::sort(result.best.begin(), result.best.end());
    result.complete = !aborted_;
    result.nodes = nodes_;
    return result;
  }

 private:
  bool in(const std::vector<std::uint64_t>& set, std::uint32_t x) const { return (set[x / 64] >> (x % 64)) & 1U; }

  bool out_of_budget() {
    if (limits_.node_limit != 0 && nodes_ >= limits_.node_limit) return true;
    if (limits_.time_limit_seconds > 0 && nodes_ % 256 == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() >= limits_.time_limit_seconds) return true;
    }
    return false;
  }

  bool cannot_improve(double bound) const {
    return static_cast<double>(current_.size()) + std::floor(bound + kBoundSlack) <=
           static_cast<double>(best_.size());
  }

  // Lowers clique weights while every vertex of P stays covered.
  double tightened_bound(const std::vector<std::uint64_t>& pool) {
    const std::size_t m = instance_.cliques.size();
    for (std::size_t x = 0; x < instance_.vertices; ++x) {
      if (!in(pool, static_cast<std::uint32_t>(x))) continue;
      double s = -1.0;
      for (std::uint32_t k : member_of_[x]) s += weight_[k];
      slack_[x] = s;
    }
    double bound = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (count_[k] == 0) continue;
      double cut = weight_[k];
      for (std::uint32_t x : instance_.cliques[k]) {
        if (in(pool, x)) cut = std::min(cut, slack_[x]);
      }
      cut = std::max(cut, 0.0);
      if (cut > 0.0) {
        for (std::uint32_t x : instance_.cliques[k]) {
          if (in(pool, x)) slack_[x] -= cut;
        }
      }
      bound += weight_[k] - cut;
    }
    return bound;
  }

  // Branches on the clique with the fewest members left: take one of them, or
  // none, in which case the loop continues on the smaller pool.
  void search(std::vector<std::uint64_t> pool) {
    const std::size_t m = instance_.cliques.size();
    while (true) {
      if (out_of_budget()) {
        aborted_ = true;
        return;
      }
      ++nodes_;
      double bound = 0.0;
      std::size_t branch = m;
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t* c = &clique_bits_[k * words_];
        std::uint32_t cnt = 0;
        for (std::size_t w = 0; w < words_; ++w) cnt += std::popcount(c[w] & pool[w]);
        count_[k] = cnt;
        if (cnt == 0) continue;
        bound += weight_[k];
        if (branch == m || cnt < count_[branch]) branch = k;
      }
      if (branch == m) {
        if (current_.size() > best_.size()) best_ = current_;
        return;
      }
      if (cannot_improve(bound) || cannot_improve(tightened_bound(pool))) return;

      std::vector<std::uint64_t> child(words_);
      for (std::uint32_t x : instance_.cliques[branch]) {
        if (!in(pool, x)) continue;
        const std::uint64_t* nb = &closed_nbhd_[static_cast<std::size_t>(x) * words_];
        for (std::size_t w = 0; w < words_; ++w) child[w] = pool[w] & ~nb[w];
        current_.push_back(x);
        search(child);
        current_.pop_back();
        if (aborted_) return;
        pool[x / 64] &= ~(std::uint64_t{1} << (x % 64));
      }
    }
  }

  const PackingInstance& instance_;
  const std::vector<double>& weight_;
  std::size_t words_;
  std::vector<std::vector<std::uint32_t>> member_of_;
  std::vector<std::uint64_t> clique_bits_;
  std::vector<std::uint64_t> closed_nbhd_;
  std::vector<std::uint32_t> count_;
  std::vector<double> slack_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  ExactSearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::vector<double> clique_cover_weights(const PackingInstance& instance, double* lp_value) {
  std::vector<double> w;
  double value = 0.0;
  const bool solved = packing_lp_duals(instance, w, value);
  if (!solved) w.assign(instance.cliques.size(), 0.0);
  repair_cover(instance, w);
  if (!solved) {
    value = 0.0;
    for (double v : w) value += v;
  }
  if (lp_value != nullptr) *lp_value = value;
  return w;
}

PackingResult max_packing(const PackingInstance& instance, const std::vector<double>& cover,
                          std::vector<std::uint32_t> incumbent, const ExactSearchLimits& limits) {
  PackingSearch search(instance, cover, std::move(incumbent), limits);
  return search.run();
}

}  // namespace indel::detail
