#ifndef COSETLAB_TABLE_ISO_HPP
#define COSETLAB_TABLE_ISO_HPP

#include <optional>
#include <vector>

namespace cosetlab {

// Backtracking isomorphism search between two finite magmas given as square
// multiplication tables (flat, row-major). Candidates are pruned by iterated
// structural color refinement; the search maps a greedy generating sequence
// and extends by products. Returns an element bijection a -> map[a] with
// map[a*b] = map[a]*map[b], or nullopt.
std::optional<std::vector<int>> tables_isomorphic(int n1, const std::vector<int>& t1,
                                                  int n2, const std::vector<int>& t2);

// The stable colors used for pruning; exposed for fingerprinting.
std::vector<int> table_colors(int n, const std::vector<int>& t);

}  // namespace cosetlab

#endif
