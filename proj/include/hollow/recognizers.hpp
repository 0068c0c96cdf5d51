#ifndef HOLLOW_RECOGNIZERS_HPP
#define HOLLOW_RECOGNIZERS_HPP

#include <array>
#include <optional>
#include <vector>

#include "hollow/budget.hpp"
#include "hollow/graph.hpp"

namespace hollow {

// Induced cycle of length >= 4, stored canonically: the rotation/
// reflection starting at the minimum vertex whose successor is the
// smaller of that vertex's two cycle neighbors.
struct Hole {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet as_set() const { return VertexSet::from(vertices); }
};

bool is_hole(const Graph& g, const std::vector<int>& cyclic);

// Every hole of length 4..max_length exactly once; max_length = 0 means
// unbounded.  Canonical order.
std::vector<Hole> enumerate_holes(const Graph& g, int max_length = 0,
                                  SearchBudget* budget = nullptr);

struct SparseCheck {
    bool sparse = true;
    std::optional<Hole> hole;  // witness on failure:
    int vertex = -1;           // v outside `hole` with offending neighbors
};

// Sparse: for every hole H and v outside it there is an edge ab of H
// with N(v) ∩ H ⊆ {a,b}.
SparseCheck is_sparse(const Graph& g, SearchBudget* budget = nullptr);

enum class ConfigKind { Diamond, Theta, Pyramid, Prism, T1Wheel, T2Wheel, Wheel };

const char* config_kind_name(ConfigKind kind);

struct ConfigurationWitness {
    ConfigKind kind;
    VertexSet vertices;
    // role map; which fields are set depends on the kind
    int end_a = -1, end_b = -1;                    // theta ends; diamond non-adjacent pair
    int apex = -1;                                 // pyramid apex, wheel outside vertex
    std::array<int, 3> triangle_a{-1, -1, -1};     // prism triangle a1a2a3
    std::array<int, 3> triangle_b{-1, -1, -1};     // pyramid/prism triangle b1b2b3
    std::vector<std::vector<int>> paths;           // P1..P3 vertex sequences (ends included)
    std::vector<int> hole;                         // wheel hole, cyclic order
};

// Checks the witness against its kind's definition.
bool validate_witness(const Graph& g, const ConfigurationWitness& w);

// Exhaustive search for an induced configuration of the given kind.
std::optional<ConfigurationWitness> find_configuration(const Graph& g, ConfigKind kind,
                                                       SearchBudget* budget = nullptr);

struct ClassMembership {
    bool sparse = false;
    bool very_sparse = false;
    bool in_F = false;
    bool in_F_t = false;
    bool in_F_2 = false;
};

ClassMembership class_membership(const Graph& g, int t, SearchBudget* budget = nullptr);

enum class ConnectorOutcome { PathOrHole, ClawCenter, Triangle };

struct MinimalConnector {
    VertexSet h;
    ConnectorOutcome outcome;
    // outcome (i): H in path order; terminals xi/xj at the two ends, xk third
    std::vector<int> h_path;
    int xi = -1, xj = -1, xk = -1;
    // outcome (ii)
    int center = -1;
    // outcome (iii)
    std::array<int, 3> triangle{-1, -1, -1};
    // outcomes (ii)/(iii): P_i from center/a_i to x_i, terminal included
    std::vector<std::vector<int>> paths;
};

// Inclusion-minimal connected H in G - {x1,x2,x3} with a neighbor of each
// terminal, found by greedy deletion in ascending id, then classified.
MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3);

// gamma_d: maximum degree of the subgraph induced by vertices of degree
// at least d; 0 if that subgraph is empty or edgeless.
int gamma(const Graph& g, int d);

struct Seagull {
    int a, v, u;  // induced path a-v-u, a < u
    bool operator==(const Seagull&) const = default;
};

// All heavy seagulls: induced paths a-v-u with deg(a) > 2 and deg(u) > 2.
std::vector<Seagull> heavy_seagulls(const Graph& g);

}  // namespace hollow

#endif
