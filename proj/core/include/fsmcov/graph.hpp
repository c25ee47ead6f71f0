// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fsmcov/errors.hpp"

namespace fsmcov {

/// One transition of the machine. Edge identity is the id string, so
/// parallel edges between the same pair of vertices are first-class.
struct Edge {
    std::string id;
    std::string source;
    std::string target;
    std::optional<std::string> input;   // Mealy stimulus
    std::optional<std::string> output;  // Mealy response

    bool labeled() const { return input.has_value(); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed-graph model of a finite state machine: a vertex set,
/// an edge list, one start vertex and a (possibly empty) set of end vertices.
///
/// Construction validates every invariant; afterwards the object is
/// read-only and safe to share across threads.
class FsmGraph {
public:
    /// Validates and canonicalizes (vertices, ends and edges are sorted).
    /// Throws ModelError / DeterminismError on invariant violations.
    static FsmGraph create(std::vector<std::string> vertices,
                           std::vector<Edge> edges,
                           std::string start,
                           std::vector<std::string> ends);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& start() const { return start_; }
    const std::vector<std::string>& ends() const { return ends_; }

    bool has_vertex(const std::string& v) const;
    bool is_end(const std::string& v) const;

    bool has_edge(const std::string& id) const;
    /// Throws UnknownEdgeError when the id is not present.
    const Edge& edge(const std::string& id) const;

    /// Outgoing edges of a vertex in canonical (edge-id) order.
    std::vector<const Edge*> out_edges(const std::string& v) const;
    int out_degree(const std::string& v) const;
    int in_degree(const std::string& v) const;

    /// True when every edge carries an input/output pair.
    bool fully_labeled() const;
    /// True when at least one edge carries labels.
    bool any_labeled() const;

    /// Non-fatal validation findings, e.g. unreachable vertices.
    const std::vector<std::string>& warnings() const { return warnings_; }

    friend bool operator==(const FsmGraph& a, const FsmGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
               a.start_ == b.start_ && a.ends_ == b.ends_;
    }

private:
    FsmGraph() = default;

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;  // sorted by id
    std::string start_;
    std::vector<std::string> ends_;
    std::vector<std::string> warnings_;

    std::map<std::string, int> edge_index_;              // id -> index
    std::map<std::string, std::vector<int>> out_index_;  // vertex -> edge indices
    std::map<std::string, int> in_degree_;
};

/// Vertices reachable from the start vertex by directed edges,
/// including the start vertex itself.
std::set<std::string> reachable_vertices(const FsmGraph& g);

/// Vertices from which some end vertex is reachable (ends included).
std::set<std::string> coreachable_vertices(const FsmGraph& g);

}  // namespace fsmcov
