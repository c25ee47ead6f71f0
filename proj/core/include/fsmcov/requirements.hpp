// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsmcov/criteria.hpp"
#include "fsmcov/graph.hpp"
#include "fsmcov/path.hpp"

namespace fsmcov {

using InputSeq = std::vector<std::string>;

enum class ReqKind { Vertex, Edge, PathSet, Basis, WmcSequences };

std::string req_kind_name(ReqKind kind);

/// The concrete obligations a suite must cover for one criterion.
/// The payload depends on the kind:
///   Vertex/Edge     -> atoms
///   PathSet/Basis   -> paths (Basis also fills cyclomatic)
///   WmcSequences    -> sequences plus the W and P sets
/// SRTC additionally groups path indices per anchor vertex.
struct RequirementSet {
    Criterion criterion;
    ReqKind kind = ReqKind::Vertex;

    std::vector<std::string> atoms;
    std::vector<Path> paths;
    std::vector<InputSeq> sequences;

    int cyclomatic = 0;
    std::vector<InputSeq> w_set;
    std::vector<InputSeq> p_set;
    std::map<std::string, std::vector<int>> anchor_groups;
    std::vector<int> truncated;  // indices of representatives cut at a dead end

    size_t total() const;
    std::string to_json_string(int indent = 2) const;
};

RequirementSet node_requirements(const FsmGraph& g);
RequirementSet edge_requirements(const FsmGraph& g);

/// Maximal decision-free segments. A branch starts at the start vertex, a
/// decision vertex (out-degree >= 2), a merge vertex (in-degree >= 2), an
/// entry vertex (in-degree 0) or an end vertex with outgoing edges, and it
/// stops on reaching any of those or a dead end. Every edge belongs to
/// exactly one branch.
RequirementSet branch_requirements(const FsmGraph& g);

RequirementSet edge_pair_requirements(const FsmGraph& g);

/// Every walk of exactly n + 1 edges (vertex repetition allowed).
/// n_switch_requirements(g, 0) equals edge_requirements lifted to length-1
/// paths and n_switch_requirements(g, 1) equals edge_pair_requirements.
RequirementSet n_switch_requirements(const FsmGraph& g, int n, size_t cap = 100000);

/// All prime paths, computed by breadth extension of simple walks.
RequirementSet prime_paths(const FsmGraph& g, size_t cap = 100000);

enum class RoundTripMode { Simple, Complete };

/// Prime cycles anchored at reachable vertices. Complete mode lists them
/// flat; simple mode also groups them per anchor, and coverage later asks
/// for one covered member per group.
RequirementSet round_trip_requirements(const FsmGraph& g, RoundTripMode mode,
                                       size_t cap = 100000);

/// Cyclomatic count of the graph: E - V + 2, computed on the end-unified
/// graph (a virtual sink absorbing all end vertices) when |V_e| > 1.
/// Throws ModelError when the end set is empty.
int cyclomatic_number(const FsmGraph& g);

/// A maximal set of linearly independent start-to-end paths, built with the
/// baseline method: a shortest baseline walk, then single-decision flips of
/// already generated paths, each completed by a shortest suffix. Linear
/// independence of edge-count vectors is decided exactly.
RequirementSet basis_paths(const FsmGraph& g, size_t candidate_cap = 100000);

/// Rank of the edge-count vectors of all complete (start-to-end) paths in
/// the suite; exact arithmetic.
int suite_edge_vector_rank(const FsmGraph& g, const TestSuite& suite);

/// One representative complete path per boundary-interior class: loop
/// behaviors are represented up to depth_bound repetitions, so each vertex
/// occurs at most depth_bound + 2 times in a representative. On graphs with
/// vertices that cannot reach an end, representatives are truncated at the
/// last extensible point and flagged.
RequirementSet boundary_interior_classes(const FsmGraph& g, int depth_bound,
                                         size_t cap = 100000);

/// Collapses immediate repetitions of the same cycle beyond depth_bound, so
/// a walk can be matched against its class representative.
Path boundary_interior_canonical(const FsmGraph& g, const Path& p, int depth_bound);

/// Every path from the start vertex to an end vertex. Throws
/// CyclicGraphError when the graph contains a cycle.
RequirementSet all_path_requirements(const FsmGraph& g, size_t cap = 100000);

RequirementSet specified_path_requirements(const FsmGraph& g, const std::vector<Path>& s);

/// Breadth-first unrolling of the machine from the start vertex. A node is
/// a leaf when its vertex already occurred earlier in breadth-first order
/// or has no outgoing edges; the first occurrence of each vertex expands
/// all its outgoing edges in id order.
struct TestingTree {
    struct Node {
        std::string vertex;
        std::string via_edge;  // empty for the root
        int parent = -1;
        std::vector<int> children;
        bool revisit = false;  // leaf because the vertex occurred before
    };
    std::vector<Node> nodes;  // breadth-first order; nodes[0] is the root

    bool is_leaf(int i) const { return nodes[i].children.empty(); }
    /// Edge paths from the root to each leaf, in canonical order.
    std::vector<Path> root_to_leaf_paths() const;
};

TestingTree testing_tree(const FsmGraph& g);

/// Outcome of feeding an input sequence to the machine from one state:
/// the emitted outputs, with "blocked" recorded when an undefined input is
/// hit (application stops there).
struct Observation {
    std::vector<std::string> outputs;
    bool blocked = false;

    friend bool operator==(const Observation&, const Observation&) = default;
};

Observation observe(const FsmGraph& g, const std::string& state, const InputSeq& inputs);

/// A characterization set: for every pair of distinct states some w yields
/// different observations (a blocked step counts as an observation).
/// Greedy-minimal; throws MealyLabelsMissingError on unlabeled graphs and
/// IndistinguishableStatesError when some pair cannot be separated.
std::vector<InputSeq> characterization_set(const FsmGraph& g);

/// The W-method obligations: concatenations p.w for every root-to-leaf
/// input sequence p of the testing tree and every w in W, truncated to the
/// prefix the machine can realize from the start vertex.
RequirementSet w_method_test_set(const FsmGraph& g);

/// The edge walk realized from the start vertex by an input sequence
/// (maximal realizable prefix).
Path realize_inputs(const FsmGraph& g, const InputSeq& inputs);

/// Requirement set for an arbitrary criterion (dispatch helper).
RequirementSet requirements_for(const FsmGraph& g, const Criterion& c);

}  // namespace fsmcov
