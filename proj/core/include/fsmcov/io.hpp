// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "fsmcov/graph.hpp"
#include "fsmcov/path.hpp"

namespace fsmcov {

/// Parses the canonical graph document:
///   {"vertices":["1","2"],"start":"1","ends":["2"],
///    "edges":[{"id":"a","from":"1","to":"2","input":"x","output":"0"}]}
/// "input"/"output" are optional as a pair. Throws SchemaError on malformed
/// documents, ModelError / DeterminismError on invariant violations.
FsmGraph parse_graph_json(const std::string& text);

/// Serializes a graph back to the canonical document (sorted keys, sorted
/// vertices/ends, edges ordered by id); parse(serialize(g)) == g.
std::string graph_to_json(const FsmGraph& g, int indent = 2);

/// Parses the DOT import subset: `digraph` only, node attribute start=true
/// (exactly one) and end=true (zero or more), edge attributes id="a"
/// (required) and label="x/y" (optional Mealy pair, split on the first '/').
FsmGraph parse_graph_dot(const std::string& text);

/// Parses {"paths":[["a","b"],["a","c"]]}. Paths are validated against g.
TestSuite parse_suite_json(const FsmGraph& g, const std::string& text);

/// Canonical suite document: deduplicated, sorted paths.
std::string suite_to_json(const TestSuite& suite, int indent = 2);

}  // namespace fsmcov
