#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * A simple undirected graph on vertex set {0, 1, ..., n} with distinguished
 * sink vertex 0. No loops, no multi-edges. Immutable after construction;
 * both the edge set and adjacency lists are built once.
 *
 * Subsets of the non-sink vertices {1..n} are passed either as sorted
 * vertex lists or as bitmasks where bit (v-1) stands for vertex v.
 */
class Graph {
  public:
    /**
     * @param vertex_count Number of vertices (>= 1); labels are 0..vertex_count-1.
     * @param edges Unordered pairs {i, j}. Loops and duplicates are hard errors.
     */
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    /** Complete graph K_N on {0..N-1}. */
    static Graph complete(int vertex_count);

    /**
     * Parse the edge-list text format: one edge "i j" per line, blank lines
     * and '#' comments ignored, vertex count = max label + 1.
     */
    static Graph parse_text(const std::string& text);

    /** Accepts either a named family ("complete:N") or a path to an edge-list file. */
    static Graph from_spec(const std::string& spec);

    int vertex_count() const { return vertex_count_; }
    /** n, the number of non-sink vertices (= number of ring variables). */
    int non_sink_count() const { return vertex_count_ - 1; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int i, int j) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;

    /** Number of vertices adjacent to v. */
    int degree(int v) const;

    /**
     * Number of neighbors of i lying outside sigma. The sink is never a
     * member of sigma and counts as an outside vertex whenever it is
     * adjacent to i.
     *
     * @param sigma Nonempty subset of {1..n}.
     * @param i Member of sigma.
     */
    int out_degree(const std::vector<int>& sigma, int i) const;
    int out_degree(std::uint32_t sigma_mask, int i) const;

    bool is_connected() const;

    /** Bitmask (bit v-1 = vertex v) of the non-sink neighbors of v. */
    std::uint32_t neighbor_mask(int v) const;

    /** Canonical edge-list serialization, one edge per line. */
    std::string to_text() const;

  private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;          // sorted, i < j
    std::vector<std::vector<int>> adjacency_;         // sorted neighbor lists
    std::vector<std::uint32_t> adjacency_mask_;       // non-sink neighbors as masks
    std::vector<bool> sink_adjacent_;

    void check_vertex(int v) const;
};

/**
 * Weighted count of spanning subgraphs whose components are exactly one tree
 * containing the sink plus some number c of unicyclic components, each with
 * an odd cycle; every such subgraph contributes 4^c.
 *
 * Requires edge_count <= 24 (full 2^|E| sweep); throws ResourceError beyond.
 */
Int tu_weighted_count(const Graph& g);

/** Exhaustive spanning-tree enumeration; independent of any determinant. Requires |E| <= 20. */
Int spanning_tree_count_brute_force(const Graph& g);

}  // namespace parkideal
