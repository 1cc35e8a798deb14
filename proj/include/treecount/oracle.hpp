// Brute-force ground truth: enumerate every labeled tree on n <= 8 vertices
// by scanning all (n-1)-element edge subsets of the complete graph. Nothing
// here knows about the counting formulas it is used to check.
#pragma once

#include <utility>
#include <vector>

#include "treecount/numeric.hpp"
#include "treecount/report.hpp"

namespace treecount {

using Edge = std::pair<int, int>;  // unordered pair, stored with first < second

// A labeled tree on vertices 1..n; edges kept sorted for deterministic
// iteration and equality.
struct LabeledTree {
  int n = 0;
  std::vector<Edge> edges;
  bool operator==(const LabeledTree&) const = default;
};

// Per-k tally of trees containing the anchor edge {1,2}: delete the anchor,
// take the component of vertex 1, and let k be its size minus one.
struct SplitProfile {
  int n = 0;
  Edge anchor{1, 2};
  std::vector<Natural> counts_by_k;  // indexed k = 0..n-2
};

// C(28,7) subsets at n = 8 is the desk-scale ceiling; larger n is refused.
inline constexpr int kMaxOracleVertices = 8;

// True iff |edges| == n-1 and the graph on 1..n is connected.
// Malformed edges (endpoint out of range, self-loop) are a domain error.
bool is_tree(int n, const std::vector<Edge>& edges);

// Every labeled tree on 1..n, each exactly once, in lexicographic order of
// sorted edge lists. n = 1 yields the single edgeless tree. Requires n <= 8.
std::vector<LabeledTree> enumerate_labeled_trees(int n);

// Number of labeled trees whose edge set contains {u, v}. Requires
// 2 <= n <= 8 and a well-formed pair (u != v, both in range).
Natural count_trees_with_edge(int n, int u, int v);

// Counts trees through each of the C(n,2) edges and checks the counts are
// all equal; on pass the note carries the common value.
VerificationReport edge_count_uniformity(int n);

SplitProfile split_profile(int n);

}  // namespace treecount
