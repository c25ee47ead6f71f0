// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fsmcov/graph.hpp"

namespace fsmcov {

/// A non-empty walk through a graph, identified by its edge-id sequence.
/// Two walks with the same vertex trace but different parallel edges are
/// distinct paths.
struct Path {
    std::vector<std::string> edges;

    Path() = default;
    Path(std::initializer_list<std::string> ids) : edges(ids) {}
    explicit Path(std::vector<std::string> ids) : edges(std::move(ids)) {}

    size_t length() const { return edges.size(); }
    bool empty() const { return edges.empty(); }

    /// Vertex trace of the walk (length + 1 entries). Requires validity.
    std::vector<std::string> vertex_trace(const FsmGraph& g) const;
    const std::string& first_vertex(const FsmGraph& g) const;
    const std::string& last_vertex(const FsmGraph& g) const;

    /// Input projection of the walk; throws MealyLabelsMissingError if an
    /// edge is unlabeled.
    std::vector<std::string> input_trace(const FsmGraph& g) const;

    auto operator<=>(const Path&) const = default;
};

/// A set of test paths. May be empty; duplicates are tolerated in memory
/// and removed by canonical serialization.
struct TestSuite {
    std::vector<Path> paths;

    TestSuite() = default;
    TestSuite(std::initializer_list<Path> ps) : paths(ps) {}
    explicit TestSuite(std::vector<Path> ps) : paths(std::move(ps)) {}

    size_t size() const { return paths.size(); }
    bool empty() const { return paths.empty(); }

    /// Sorted, deduplicated copy.
    TestSuite canonical() const;
};

/// True iff the edge-id sequence is a connected walk in g. Every id must
/// exist (UnknownEdgeError otherwise). A walk does not have to start at the
/// start vertex or end at an end vertex.
bool is_valid_path(const FsmGraph& g, const std::vector<std::string>& edge_ids);

/// Throws UnknownEdgeError / InvalidPathError instead of returning false.
void require_valid_path(const FsmGraph& g, const Path& p);
void require_valid_suite(const FsmGraph& g, const TestSuite& suite);

/// A path is simple when its vertex trace has no repetition, except that
/// first == last (a cycle) is allowed.
bool is_simple(const FsmGraph& g, const Path& p);

/// A prime path is a simple path that is not a proper contiguous subpath
/// of any other simple path.
bool is_prime(const FsmGraph& g, const Path& p);

/// True iff r's edge sequence occurs contiguously inside t's.
bool contains_subpath(const Path& t, const Path& r);

}  // namespace fsmcov
