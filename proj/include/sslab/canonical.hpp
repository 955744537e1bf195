#pragma once

#include <string>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

/// Canonical labeling by individualization-refinement.
///
/// `position[v]` is v's canonical label; `form` is g relabeled by it, so two
/// graphs are isomorphic iff their forms are equal. `orbit[v]` is the least
/// vertex in v's Aut(g)-orbit. The automorphisms found while searching
/// generate the full group, so orbits are exact.
struct CanonicalForm {
  std::vector<int> position;
  std::vector<int> vertex_at;  // inverse of position
  Graph form;
  std::vector<int> orbit;
  int generators = 0;
  std::size_t leaves = 0;
};

CanonicalForm canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sslab
