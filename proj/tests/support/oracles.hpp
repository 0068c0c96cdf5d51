#ifndef HOLLOW_TESTS_ORACLES_HPP
#define HOLLOW_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "hollow/graph.hpp"
#include "hollow/recognizers.hpp"

namespace testsupport {

// Exact induced-subgraph isomorphism: does g[S] (for some S) induce a
// graph isomorphic to any member of the kind's family?  Family members
// with up to max_n vertices are generated explicitly and matched by
// backtracking isomorphism search — independent of the constructive
// searches in the library.
bool oracle_contains(const hollow::Graph& g, hollow::ConfigKind kind);

// Is h isomorphic to pattern (exact, both directions)?
bool isomorphic(const hollow::Graph& h, const hollow::Graph& pattern);

// All family members of the kind with exactly n vertices.
std::vector<hollow::Graph> family_members(hollow::ConfigKind kind, int n);

// Subset-scan hole census: length -> count of induced cycles.
std::map<int, int> oracle_hole_census(const hollow::Graph& g);

// Subset-scan clique enumeration.
std::vector<hollow::VertexSet> oracle_cliques(const hollow::Graph& g, int max_size);

// Subset-scan heavy seagull count.
int oracle_heavy_seagull_count(const hollow::Graph& g);

}  // namespace testsupport

#endif
