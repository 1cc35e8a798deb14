#include "treecount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treecount {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False if a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void check_vertex_range(int n, int v) {
  if (v < 1 || v > n)
    throw std::domain_error("oracle: vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
}

void check_oracle_size(const char* op, int n, int min_n) {
  if (n < min_n)
    throw std::domain_error(std::string(op) + ": n must be >= " +
                            std::to_string(min_n));
  if (n > kMaxOracleVertices)
    throw std::domain_error(std::string(op) + ": n > " +
                            std::to_string(kMaxOracleVertices) +
                            " refused (subset scan grows too fast)");
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return edges;
}

// Calls visit(edge_subset) for every (n-1)-subset of the complete graph's
// edges that forms a tree, in lexicographic subset order.
template <typename Visit>
void scan_tree_subsets(int n, Visit visit) {
  const std::vector<Edge> pool = all_edges(n);
  const int m = static_cast<int>(pool.size());
  const int t = n - 1;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Edge> edges(t);
  while (true) {
    for (int i = 0; i < t; ++i) edges[i] = pool[idx[i]];
    if (is_tree(n, edges)) visit(edges);
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_tree(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw std::domain_error("is_tree: n must be >= 1");
  for (const auto& [u, v] : edges) {
    check_vertex_range(n, u);
    check_vertex_range(n, v);
    if (u == v) throw std::domain_error("is_tree: self-loop");
  }
  if (static_cast<int>(edges.size()) != n - 1) return false;
  UnionFind uf(n);
  for (const auto& [u, v] : edges)
    if (!uf.unite(u, v)) return false;  // cycle (or duplicate edge)
  // n-1 merges from n singletons leave one component.
  return true;
}

std::vector<LabeledTree> enumerate_labeled_trees(int n) {
  check_oracle_size("enumerate_labeled_trees", n, 1);
  std::vector<LabeledTree> trees;
  if (n == 1) {
    trees.push_back(LabeledTree{1, {}});
    return trees;
  }
  scan_tree_subsets(n, [&](const std::vector<Edge>& edges) {
    trees.push_back(LabeledTree{n, edges});
  });
  return trees;
}

Natural count_trees_with_edge(int n, int u, int v) {
  check_oracle_size("count_trees_with_edge", n, 2);
  check_vertex_range(n, u);
  check_vertex_range(n, v);
  if (u == v) throw std::domain_error("count_trees_with_edge: u == v");
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  Natural count = 0;
  scan_tree_subsets(n, [&](const std::vector<Edge>& edges) {
    if (std::binary_search(edges.begin(), edges.end(), e)) ++count;
  });
  return count;
}

VerificationReport edge_count_uniformity(int n) {
  check_oracle_size("edge_count_uniformity", n, 2);
  const std::vector<Edge> pool = all_edges(n);
  std::vector<long> counts(pool.size(), 0);
  scan_tree_subsets(n, [&](const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      const auto it = std::lower_bound(pool.begin(), pool.end(), e);
      ++counts[it - pool.begin()];
    }
  });
  VerificationReport report;
  report.identity = "edge-uniformity";
  report.lo = report.hi = n;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != counts[0]) {
      report.passed = false;
      report.failure_index = static_cast<long>(i);
      report.lhs = std::to_string(counts[0]);
      report.rhs = std::to_string(counts[i]);
      return report;
    }
  }
  report.lhs = report.rhs = std::to_string(counts[0]);
  report.note = "common per-edge count " + std::to_string(counts[0]);
  return report;
}

SplitProfile split_profile(int n) {
  check_oracle_size("split_profile", n, 2);
  SplitProfile profile;
  profile.n = n;
  profile.counts_by_k.assign(n - 1, Natural(0));
  const Edge anchor = profile.anchor;
  std::vector<int> stack;
  scan_tree_subsets(n, [&](const std::vector<Edge>& edges) {
    if (!std::binary_search(edges.begin(), edges.end(), anchor)) return;
    // Delete the anchor and walk the side containing vertex 1.
    std::vector<char> seen(n + 1, 0);
    stack.assign(1, 1);
    seen[1] = 1;
    int size = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& [u, v] : edges) {
        if (u == anchor.first && v == anchor.second) continue;
        const int other = u == x ? v : (v == x ? u : 0);
        if (other != 0 && !seen[other]) {
          seen[other] = 1;
          stack.push_back(other);
        }
      }
    }
    profile.counts_by_k[size - 1] += 1;
  });
  return profile;
}

}  // namespace treecount
