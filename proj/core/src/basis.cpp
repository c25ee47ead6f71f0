// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsmcov/requirements.hpp"

namespace fsmcov {

namespace {

using BigInt = boost::multiprecision::cpp_int;

/// Incremental exact rank tracker over integer vectors (fraction-free
/// Gaussian elimination).
class RankTracker {
public:
    explicit RankTracker(size_t dims) : dims_(dims) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true (and keeps the vector) when it is independent of the
    /// rows accepted so far.
    bool try_add(const std::vector<long long>& vec) {
        std::vector<BigInt> row(dims_);
        for (size_t i = 0; i < dims_; ++i) row[i] = vec[i];
        for (const auto& [pivot_col, pivot_row] : rows_) {
            if (row[pivot_col] == 0) continue;
            BigInt factor = row[pivot_col];
            BigInt lead = pivot_row[pivot_col];
            for (size_t i = 0; i < dims_; ++i) {
                row[i] = row[i] * lead - pivot_row[i] * factor;
            }
        }
        auto nonzero = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
        if (nonzero == row.end()) return false;
        rows_.emplace_back(static_cast<size_t>(nonzero - row.begin()), std::move(row));
        return true;
    }

private:
    size_t dims_;
    std::vector<std::pair<size_t, std::vector<BigInt>>> rows_;
};

std::vector<long long> edge_count_vector(const FsmGraph& g, const Path& p) {
    std::map<std::string, size_t> index;
    size_t i = 0;
    for (const Edge& e : g.edges()) index[e.id] = i++;
    std::vector<long long> vec(g.edges().size(), 0);
    for (const auto& id : p.edges) vec[index.at(id)]++;
    return vec;
}

bool is_complete_path(const FsmGraph& g, const Path& p) {
    return !p.empty() && p.first_vertex(g) == g.start() && g.is_end(p.last_vertex(g));
}

/// Breadth-first distance (in edges) from every vertex to the nearest end
/// vertex; unreachable vertices keep the sentinel.
std::map<std::string, int> distance_to_end(const FsmGraph& g) {
    constexpr int kInf = std::numeric_limits<int>::max();
    std::map<std::string, int> dist;
    for (const auto& v : g.vertices()) dist[v] = kInf;
    std::map<std::string, std::vector<std::string>> rev;
    for (const Edge& e : g.edges()) rev[e.target].push_back(e.source);
    std::deque<std::string> queue;
    for (const auto& v : g.ends()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const auto& u : rev[v]) {
            if (dist[u] == kInf) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

/// Shortest completion from v to the nearest end, stepping strictly down
/// the BFS distance and breaking ties by edge id. Returns false when no end
/// is reachable from v.
bool complete_to_end(const FsmGraph& g, const std::map<std::string, int>& dist,
                     const std::string& from, Path& path) {
    std::string v = from;
    constexpr int kInf = std::numeric_limits<int>::max();
    if (dist.at(v) == kInf) return false;
    while (dist.at(v) > 0) {
        const Edge* chosen = nullptr;
        for (const Edge* e : g.out_edges(v)) {
            if (dist.at(e->target) == dist.at(v) - 1) {
                chosen = e;
                break;  // out-edges are in id order
            }
        }
        path.edges.push_back(chosen->id);
        v = chosen->target;
    }
    return true;
}

}  // namespace

int cyclomatic_number(const FsmGraph& g) {
    if (g.ends().empty()) {
        throw ModelError("cyclomatic number requires at least one end vertex");
    }
    long long v = static_cast<long long>(g.vertices().size());
    long long e = static_cast<long long>(g.edges().size());
    if (g.ends().size() > 1) {
        // Unify the ends through a virtual sink before applying E - V + 2.
        e += static_cast<long long>(g.ends().size());
        v += 1;
    }
    return static_cast<int>(e - v + 2);
}

int suite_edge_vector_rank(const FsmGraph& g, const TestSuite& suite) {
    RankTracker tracker(g.edges().size());
    for (const Path& p : suite.paths) {
        if (!is_complete_path(g, p)) continue;
        tracker.try_add(edge_count_vector(g, p));
    }
    return tracker.rank();
}

RequirementSet basis_paths(const FsmGraph& g, size_t candidate_cap) {
    auto reach = reachable_vertices(g);
    for (const auto& v : g.vertices()) {
        if (!reach.count(v)) {
            throw ModelError("basis paths require every vertex reachable from the start; '" + v +
                             "' is not");
        }
    }
    const int target = cyclomatic_number(g);  // also rejects empty end sets

    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::BPC);
    rs.kind = ReqKind::Basis;
    rs.cyclomatic = target;

    auto dist = distance_to_end(g);
    RankTracker tracker(g.edges().size());
    size_t candidates_seen = 0;

    auto admit = [&](Path p) {
        ++candidates_seen;
        if (!tracker.try_add(edge_count_vector(g, p))) return false;
        rs.paths.push_back(std::move(p));
        return true;
    };

    Path baseline;
    std::deque<Path> worklist;
    if (complete_to_end(g, dist, g.start(), baseline) && !baseline.empty()) {
        admit(baseline);
        worklist.push_back(baseline);
    }

    // Flip one decision of an already generated path and finish with a
    // shortest completion; repeat until the rank reaches the cyclomatic
    // number.
    while (!worklist.empty() && tracker.rank() < target && candidates_seen < candidate_cap) {
        Path base = std::move(worklist.front());
        worklist.pop_front();
        for (size_t i = 0; i < base.edges.size() && tracker.rank() < target; ++i) {
            const Edge& taken = g.edge(base.edges[i]);
            if (g.out_degree(taken.source) < 2) continue;
            for (const Edge* alt : g.out_edges(taken.source)) {
                if (alt->id == taken.id) continue;
                constexpr int kInf = std::numeric_limits<int>::max();
                if (dist.at(alt->target) == kInf) continue;
                Path candidate;
                candidate.edges.assign(base.edges.begin(), base.edges.begin() + i);
                candidate.edges.push_back(alt->id);
                complete_to_end(g, dist, alt->target, candidate);
                if (admit(candidate)) worklist.push_back(std::move(candidate));
            }
        }
    }

    // The flip closure can stall below full rank on heavily meshed graphs;
    // splice simple detours through still-independent edges, then fall back
    // to a bounded enumeration of complete paths.
    if (tracker.rank() < target) {
        std::map<std::string, int> dist_from_start;
        {
            for (const auto& v : g.vertices()) dist_from_start[v] = -1;
            dist_from_start[g.start()] = 0;
            std::deque<std::string> queue{g.start()};
            while (!queue.empty()) {
                std::string v = queue.front();
                queue.pop_front();
                for (const Edge* e : g.out_edges(v)) {
                    if (dist_from_start[e->target] < 0) {
                        dist_from_start[e->target] = dist_from_start[v] + 1;
                        queue.push_back(e->target);
                    }
                }
            }
        }
        auto shortest_from_start = [&](const std::string& to, Path& out) {
            std::vector<std::string> chain;
            std::string v = to;
            while (v != g.start()) {
                const Edge* step = nullptr;
                for (const Edge& e : g.edges()) {
                    if (e.target == v && dist_from_start[e.source] == dist_from_start[v] - 1) {
                        step = &e;
                        break;
                    }
                }
                chain.push_back(step->id);
                v = step->source;
            }
            out.edges.assign(chain.rbegin(), chain.rend());
        };
        for (const Edge& e : g.edges()) {
            if (tracker.rank() >= target || candidates_seen >= candidate_cap) break;
            constexpr int kInf = std::numeric_limits<int>::max();
            if (dist.at(e.target) == kInf) continue;
            Path candidate;
            shortest_from_start(e.source, candidate);
            candidate.edges.push_back(e.id);
            complete_to_end(g, dist, e.target, candidate);
            admit(candidate);
        }
    }
    if (tracker.rank() < target) {
        struct Frame {
            std::string vertex;
            Path path;
            std::map<std::string, int> visits;
        };
        std::deque<Frame> stack;
        stack.push_back(Frame{g.start(), Path{}, {{g.start(), 1}}});
        while (!stack.empty() && tracker.rank() < target && candidates_seen < candidate_cap) {
            Frame frame = std::move(stack.back());
            stack.pop_back();
            if (g.is_end(frame.vertex) && !frame.path.empty()) admit(frame.path);
            for (const Edge* e : g.out_edges(frame.vertex)) {
                int seen = frame.visits.count(e->target) ? frame.visits.at(e->target) : 0;
                if (seen >= 3) continue;
                Frame next;
                next.vertex = e->target;
                next.path = frame.path;
                next.path.edges.push_back(e->id);
                next.visits = frame.visits;
                next.visits[e->target]++;
                stack.push_back(std::move(next));
            }
        }
    }

    std::sort(rs.paths.begin(), rs.paths.end());
    if (tracker.rank() < target) {
        throw ResourceError("baseline method reached rank " + std::to_string(tracker.rank()) +
                            " of " + std::to_string(target) + "; partial basis has " +
                            std::to_string(rs.paths.size()) + " paths");
    }
    return rs;
}

}  // namespace fsmcov
