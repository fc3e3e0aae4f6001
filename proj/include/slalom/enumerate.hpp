#pragma once

// Enumeration of rooted trees with a terminal root, one canonical code per
// isomorphism class. The canonical code is the lexicographically smallest
// code among all planar orderings; those are breadth-first codes, i.e. codes
// with non-decreasing entries, so it suffices to walk the breadth-first codes
// in lexicographic order and keep the first one of each class.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "slalom/tree.hpp"

namespace slalom {

namespace detail {

inline void breadth_first_codes(int length, std::vector<int>& code,
                                const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(code.size()) == length) {
    visit(code);
    return;
  }
  const int vertex = static_cast<int>(code.size()) + 1;
  const int lo = code.empty() ? 0 : std::max(1, code.back());
  const int hi = code.empty() ? 0 : vertex - 1;
  for (int p = lo; p <= hi; ++p) {
    code.push_back(p);
    breadth_first_codes(length, code, visit);
    code.pop_back();
  }
}

}  // namespace detail

/// Canonical codes of all trees with exactly `vertices` vertices, in lexicographic order.
inline std::vector<CayleyCode> trees_with_vertices(int vertices) {
  std::vector<CayleyCode> out;
  if (vertices < 2) return out;
  std::set<std::string> seen;
  std::vector<int> scratch;
  detail::breadth_first_codes(vertices - 1, scratch, [&](const std::vector<int>& code) {
    CayleyCode c{code};
    if (seen.insert(rooted_signature(parse_cayley(c))).second) out.push_back(std::move(c));
  });
  return out;
}

/// Calls `visit` for every tree with 2..max_vertices vertices, ordered by
/// vertex count and then lexicographically. Returning false stops the walk.
inline void for_each_tree(int max_vertices, const std::function<bool(const CayleyCode&)>& visit) {
  for (int n = 2; n <= max_vertices; ++n)
    for (const auto& code : trees_with_vertices(n))
      if (!visit(code)) return;
}

inline std::vector<CayleyCode> enumerate_trees(int max_vertices) {
  std::vector<CayleyCode> out;
  for_each_tree(max_vertices, [&](const CayleyCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace slalom
