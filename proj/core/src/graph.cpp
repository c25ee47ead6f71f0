// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/graph.hpp"

#include <algorithm>
#include <deque>

namespace fsmcov {

FsmGraph FsmGraph::create(std::vector<std::string> vertices,
                          std::vector<Edge> edges,
                          std::string start,
                          std::vector<std::string> ends) {
    if (vertices.empty()) {
        throw ModelError("vertex set must be non-empty");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    auto known = [&](const std::string& v) {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    };
    if (!known(start)) {
        throw ModelError("start vertex '" + start + "' is not in the vertex set");
    }
    for (const auto& e : ends) {
        if (!known(e)) {
            throw ModelError("end vertex '" + e + "' is not in the vertex set");
        }
    }

    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i].id == edges[i + 1].id) {
            throw ModelError("duplicate edge id '" + edges[i].id + "'");
        }
    }
    for (const auto& e : edges) {
        if (e.id.empty()) {
            throw ModelError("edge with empty id");
        }
        if (!known(e.source)) {
            throw ModelError("edge '" + e.id + "' leaves unknown vertex '" + e.source + "'");
        }
        if (!known(e.target)) {
            throw ModelError("edge '" + e.id + "' enters unknown vertex '" + e.target + "'");
        }
        if (e.input.has_value() != e.output.has_value()) {
            throw ModelError("edge '" + e.id + "' carries only half of an input/output pair");
        }
    }

    FsmGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.start_ = std::move(start);
    g.ends_ = std::move(ends);

    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.edge_index_[e.id] = static_cast<int>(i);
        g.out_index_[e.source].push_back(static_cast<int>(i));
        g.in_degree_[e.target]++;
    }

    // Determinism is only demanded where labels are present: two labeled
    // edges out of one vertex must not share an input symbol.
    for (const auto& [v, idxs] : g.out_index_) {
        std::set<std::string> seen;
        for (int i : idxs) {
            const Edge& e = g.edges_[i];
            if (!e.labeled()) continue;
            if (!seen.insert(*e.input).second) {
                throw DeterminismError("vertex '" + v + "' has two outgoing edges on input '" +
                                       *e.input + "'");
            }
        }
    }

    auto reach = reachable_vertices(g);
    for (const auto& v : g.vertices_) {
        if (!reach.count(v)) {
            g.warnings_.push_back("vertex '" + v + "' is unreachable from the start vertex");
        }
    }
    return g;
}

bool FsmGraph::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool FsmGraph::is_end(const std::string& v) const {
    return std::binary_search(ends_.begin(), ends_.end(), v);
}

bool FsmGraph::has_edge(const std::string& id) const {
    return edge_index_.count(id) > 0;
}

const Edge& FsmGraph::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) {
        throw UnknownEdgeError("unknown edge id '" + id + "'");
    }
    return edges_[it->second];
}

std::vector<const Edge*> FsmGraph::out_edges(const std::string& v) const {
    std::vector<const Edge*> result;
    auto it = out_index_.find(v);
    if (it != out_index_.end()) {
        result.reserve(it->second.size());
        for (int i : it->second) result.push_back(&edges_[i]);
    }
    return result;
}

int FsmGraph::out_degree(const std::string& v) const {
    auto it = out_index_.find(v);
    return it == out_index_.end() ? 0 : static_cast<int>(it->second.size());
}

int FsmGraph::in_degree(const std::string& v) const {
    auto it = in_degree_.find(v);
    return it == in_degree_.end() ? 0 : it->second;
}

bool FsmGraph::fully_labeled() const {
    if (edges_.empty()) return false;
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.labeled(); });
}

bool FsmGraph::any_labeled() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.labeled(); });
}

std::set<std::string> reachable_vertices(const FsmGraph& g) {
    std::set<std::string> seen{g.start()};
    std::deque<std::string> queue{g.start()};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const Edge* e : g.out_edges(v)) {
            if (seen.insert(e->target).second) {
                queue.push_back(e->target);
            }
        }
    }
    return seen;
}

std::set<std::string> coreachable_vertices(const FsmGraph& g) {
    std::map<std::string, std::vector<std::string>> rev;
    for (const Edge& e : g.edges()) rev[e.target].push_back(e.source);

    std::set<std::string> seen(g.ends().begin(), g.ends().end());
    std::deque<std::string> queue(g.ends().begin(), g.ends().end());
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const auto& u : rev[v]) {
            if (seen.insert(u).second) {
                queue.push_back(u);
            }
        }
    }
    return seen;
}

}  // namespace fsmcov
