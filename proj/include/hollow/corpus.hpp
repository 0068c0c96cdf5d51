#ifndef HOLLOW_CORPUS_HPP
#define HOLLOW_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hollow/graph.hpp"
#include "hollow/recognizers.hpp"

namespace hollow {

// The k x k wall in brick layout: k rows of horizontal paths (top and
// bottom rows shortened), vertical rungs alternating between even and
// odd columns from row to row.  Planar, maximum degree 3.
Graph gen_wall(int k);

// Subdivide edge i of g.edge_list() into lengths[i] edges (length 1 keeps
// the edge).  New vertices are appended in edge order.
Graph subdivide_edges(const Graph& g, const std::vector<int>& lengths);

Graph gen_wall_subdivision(int k, const std::vector<int>& lengths);
Graph gen_wall_subdivision(int k, std::uint64_t seed, int min_len, int max_len);

// L(G): vertices are g's edges in lexicographic order, adjacent when the
// edges share an end.
Graph gen_line_graph(const Graph& g);

Graph gen_theta(int l1, int l2, int l3);    // lengths >= 2
Graph gen_prism(int l1, int l2, int l3);    // lengths >= 1
Graph gen_pyramid(int l1, int l2, int l3);  // lengths >= 1, at most one equal to 1

// `rows` horizontal paths of `cols` vertices plus one apex per column at
// positions 0, spacing, 2*spacing, ..., each adjacent to every row's
// vertex in its column.
Graph gen_layered_grid(int rows, int cols, int apex_spacing);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);

enum class GraphClass { Sparse, VerySparse, F2 };

// Rejection sampler: Erdos-Renyi draws of decreasing density, interleaved
// with subdivided random cores (any >=2-subdivision is sparse), validated
// by class_membership; nullopt after `attempts` rejections.
std::optional<Graph> random_class_sample(int n, GraphClass cls, std::uint64_t seed,
                                         int attempts);

enum class GraphFormat { Graph6, EdgeList };

Graph parse_graph(const std::string& text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace hollow

#endif
