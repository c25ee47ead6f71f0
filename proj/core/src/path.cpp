// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/path.hpp"

#include <algorithm>
#include <set>

namespace fsmcov {

std::vector<std::string> Path::vertex_trace(const FsmGraph& g) const {
    std::vector<std::string> trace;
    trace.reserve(edges.size() + 1);
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = g.edge(edges[i]);
        if (i == 0) trace.push_back(e.source);
        trace.push_back(e.target);
    }
    return trace;
}

const std::string& Path::first_vertex(const FsmGraph& g) const {
    return g.edge(edges.front()).source;
}

const std::string& Path::last_vertex(const FsmGraph& g) const {
    return g.edge(edges.back()).target;
}

std::vector<std::string> Path::input_trace(const FsmGraph& g) const {
    std::vector<std::string> inputs;
    inputs.reserve(edges.size());
    for (const auto& id : edges) {
        const Edge& e = g.edge(id);
        if (!e.labeled()) {
            throw MealyLabelsMissingError("edge '" + id + "' carries no input label");
        }
        inputs.push_back(*e.input);
    }
    return inputs;
}

TestSuite TestSuite::canonical() const {
    TestSuite out = *this;
    std::sort(out.paths.begin(), out.paths.end());
    out.paths.erase(std::unique(out.paths.begin(), out.paths.end()), out.paths.end());
    return out;
}

bool is_valid_path(const FsmGraph& g, const std::vector<std::string>& edge_ids) {
    if (edge_ids.empty()) return false;
    for (size_t i = 0; i < edge_ids.size(); ++i) {
        const Edge& e = g.edge(edge_ids[i]);  // throws UnknownEdgeError
        if (i > 0 && g.edge(edge_ids[i - 1]).target != e.source) {
            return false;
        }
    }
    return true;
}

void require_valid_path(const FsmGraph& g, const Path& p) {
    if (p.empty()) {
        throw InvalidPathError("paths must contain at least one edge");
    }
    for (size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = g.edge(p.edges[i]);
        if (i > 0 && g.edge(p.edges[i - 1]).target != e.source) {
            throw InvalidPathError("edge '" + p.edges[i - 1] + "' does not connect to edge '" +
                                   p.edges[i] + "'");
        }
    }
}

void require_valid_suite(const FsmGraph& g, const TestSuite& suite) {
    for (const Path& p : suite.paths) require_valid_path(g, p);
}

bool is_simple(const FsmGraph& g, const Path& p) {
    auto trace = p.vertex_trace(g);
    std::set<std::string> seen;
    for (size_t i = 0; i < trace.size(); ++i) {
        if (!seen.insert(trace[i]).second) {
            // Only the closing vertex of a cycle may repeat.
            bool closes_cycle = (i == trace.size() - 1) && trace[i] == trace.front();
            if (!closes_cycle) return false;
        }
    }
    return true;
}

bool is_prime(const FsmGraph& g, const Path& p) {
    if (!is_simple(g, p)) return false;
    // Any simple path properly containing p yields a one-step simple
    // extension of p, so testing single-edge extensions is exhaustive.
    Path ext = p;
    for (const Edge* e : g.out_edges(p.last_vertex(g))) {
        ext.edges.push_back(e->id);
        if (is_simple(g, ext)) return false;
        ext.edges.pop_back();
    }
    const std::string& head = p.first_vertex(g);
    for (const Edge& e : g.edges()) {
        if (e.target != head) continue;
        Path front({e.id});
        front.edges.insert(front.edges.end(), p.edges.begin(), p.edges.end());
        if (is_simple(g, front)) return false;
    }
    return true;
}

bool contains_subpath(const Path& t, const Path& r) {
    if (r.edges.empty() || r.edges.size() > t.edges.size()) {
        return r.edges.empty();
    }
    auto it = std::search(t.edges.begin(), t.edges.end(), r.edges.begin(), r.edges.end());
    return it != t.edges.end();
}

}  // namespace fsmcov
