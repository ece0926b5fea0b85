#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "flipforest/core.hpp"

namespace flipforest::oracle {

// Exhaustive machinery is gated to small n; FLIPFOREST_MAX_N overrides.
int guard_limit();
void check_guard(int n);

// All non-crossing spanning trees on n points, canonically ordered by
// tree_key. Depth-first growth over the lexicographic chord list with
// cycle/crossing pruning. Throws Error("TooLarge") past the guard rail.
std::vector<NcTree> enumerate_trees(int n);

// Independent generator: decodes every labeled tree from its Pruefer
// sequence and keeps the non-crossing ones. Same canonical order.
std::vector<NcTree> enumerate_trees_prufer(int n);

// Closed-form count C(3n-3, n-1) / (2n-1) from the literature; logged as a
// third cross-check only.
unsigned long long closed_form_count(int n);

// All trees one valid flip away.
std::vector<NcTree> neighbors(const NcTree& t);

struct FlipGraph {
    int n = 0;
    std::vector<NcTree> trees;                 // canonical order
    std::vector<std::vector<int>> adj;         // symmetric
    std::unordered_map<std::string, int> index;  // tree_key -> vertex id

    static FlipGraph build(int n);

    int id_of(const NcTree& t) const;
    std::vector<int> bfs_from(int src) const;

    // Eccentricity of every vertex; the parallel variant fans BFS roots out
    // across OpenMP threads and is checked against the serial one in tests.
    std::vector<int> eccentricities_serial() const;
    std::vector<int> eccentricities_parallel() const;

    // Snapshot format: "n <int> trees <int>", one edge-list line per tree,
    // then one adjacency line per vertex. Regenerable cache.
    void write(std::ostream& out) const;
    static FlipGraph read(std::istream& in);

    // Filename for a content-addressed cache entry of this graph.
    std::string cache_name() const;
};

// BFS shortest flip distance; always >= |T1 delta T2| / 2.
int exact_distance(const NcTree& t1, const NcTree& t2);

struct DiameterResult {
    int value = 0;
    NcTree witness_a;
    NcTree witness_b;
};

// Max pairwise distance plus one extremal pair (smallest-index witness).
DiameterResult diameter(int n, bool parallel = true);
DiameterResult diameter(const FlipGraph& g, bool parallel = true);

}  // namespace flipforest::oracle
