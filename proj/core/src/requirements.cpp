// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/requirements.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"

namespace fsmcov {

using nlohmann::json;

std::string req_kind_name(ReqKind kind) {
    switch (kind) {
        case ReqKind::Vertex: return "vertex";
        case ReqKind::Edge: return "edge";
        case ReqKind::PathSet: return "path";
        case ReqKind::Basis: return "basis";
        case ReqKind::WmcSequences: return "wmc-sequences";
    }
    return "?";
}

size_t RequirementSet::total() const {
    switch (kind) {
        case ReqKind::Vertex:
        case ReqKind::Edge: return atoms.size();
        case ReqKind::PathSet:
        case ReqKind::Basis: return paths.size();
        case ReqKind::WmcSequences: return sequences.size();
    }
    return 0;
}

std::string RequirementSet::to_json_string(int indent) const {
    json doc;
    doc["criterion"] = criterion.name();
    doc["kind"] = req_kind_name(kind);
    json items = json::array();
    switch (kind) {
        case ReqKind::Vertex:
        case ReqKind::Edge:
            for (const auto& a : atoms) items.push_back(a);
            break;
        case ReqKind::PathSet:
        case ReqKind::Basis:
            for (const auto& p : paths) items.push_back(p.edges);
            break;
        case ReqKind::WmcSequences:
            for (const auto& s : sequences) items.push_back(s);
            break;
    }
    doc["items"] = std::move(items);
    json meta = json::object();
    if (kind == ReqKind::Basis) meta["cyclomatic"] = cyclomatic;
    if (kind == ReqKind::WmcSequences) {
        json w = json::array();
        for (const auto& s : w_set) w.push_back(s);
        json p = json::array();
        for (const auto& s : p_set) p.push_back(s);
        meta["W"] = std::move(w);
        meta["P"] = std::move(p);
    }
    if (!anchor_groups.empty()) {
        json groups = json::object();
        for (const auto& [anchor, idxs] : anchor_groups) groups[anchor] = idxs;
        meta["groups"] = std::move(groups);
    }
    if (!truncated.empty()) meta["truncated"] = truncated;
    doc["meta"] = std::move(meta);
    return doc.dump(indent);
}

namespace {

void sort_paths(std::vector<Path>& paths) {
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
}

}  // namespace

RequirementSet node_requirements(const FsmGraph& g) {
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::NC);
    rs.kind = ReqKind::Vertex;
    rs.atoms = g.vertices();
    return rs;
}

RequirementSet edge_requirements(const FsmGraph& g) {
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::EC);
    rs.kind = ReqKind::Edge;
    for (const Edge& e : g.edges()) rs.atoms.push_back(e.id);
    return rs;
}

// --- Branches ---------------------------------------------------------------

namespace {

bool branch_boundary(const FsmGraph& g, const std::string& v) {
    return v == g.start() || g.out_degree(v) >= 2 || g.in_degree(v) >= 2 || g.is_end(v) ||
           g.out_degree(v) == 0;
}

bool branch_anchor(const FsmGraph& g, const std::string& v) {
    if (g.out_degree(v) == 0) return false;
    return v == g.start() || g.out_degree(v) >= 2 || g.in_degree(v) >= 2 ||
           g.in_degree(v) == 0 || g.is_end(v);
}

}  // namespace

RequirementSet branch_requirements(const FsmGraph& g) {
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::BC);
    rs.kind = ReqKind::PathSet;

    std::set<std::string> covered;
    auto follow = [&](const Edge* first, const std::string& stop_at) {
        Path branch({first->id});
        covered.insert(first->id);
        std::string v = first->target;
        while (!branch_boundary(g, v) && v != stop_at) {
            const Edge* next = g.out_edges(v).front();  // out-degree is exactly 1 here
            branch.edges.push_back(next->id);
            covered.insert(next->id);
            v = next->target;
        }
        rs.paths.push_back(std::move(branch));
    };

    for (const auto& v : g.vertices()) {
        if (!branch_anchor(g, v)) continue;
        for (const Edge* e : g.out_edges(v)) follow(e, v);
    }
    // Anchor-free cycles (all vertices in/out degree 1) are walked once,
    // starting at their lexicographically smallest edge.
    for (const Edge& e : g.edges()) {
        if (covered.count(e.id)) continue;
        follow(&e, e.source);
    }
    sort_paths(rs.paths);
    return rs;
}

// --- Edge pairs and N-switch walks -------------------------------------------

RequirementSet n_switch_requirements(const FsmGraph& g, int n, size_t cap) {
    if (n < 0) throw SchemaError("NSC requires N >= 0");
    RequirementSet rs;
    rs.criterion = Criterion::nsc(n);
    rs.kind = ReqKind::PathSet;

    std::vector<Path> level;
    for (const Edge& e : g.edges()) level.push_back(Path({e.id}));
    for (int step = 0; step < n; ++step) {
        std::vector<Path> next;
        for (const Path& walk : level) {
            for (const Edge* e : g.out_edges(g.edge(walk.edges.back()).target)) {
                Path extended = walk;
                extended.edges.push_back(e->id);
                next.push_back(std::move(extended));
                if (next.size() > cap) {
                    throw ResourceError("N-switch enumeration exceeded cap of " +
                                        std::to_string(cap));
                }
            }
        }
        level = std::move(next);
    }
    rs.paths = std::move(level);
    sort_paths(rs.paths);
    return rs;
}

RequirementSet edge_pair_requirements(const FsmGraph& g) {
    RequirementSet rs = n_switch_requirements(g, 1);
    rs.criterion = Criterion::make(CriterionKind::EPC);
    return rs;
}

// --- Prime paths -------------------------------------------------------------

namespace {

struct SimpleWalk {
    Path path;
    std::string first;
    std::string last;
    std::set<std::string> visited;
};

}  // namespace

RequirementSet prime_paths(const FsmGraph& g, size_t cap) {
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::PPC);
    rs.kind = ReqKind::PathSet;

    std::deque<SimpleWalk> pool;
    for (const auto& v : g.vertices()) {
        pool.push_back(SimpleWalk{Path{}, v, v, {v}});
    }

    std::set<Path> candidates;
    size_t walks_seen = 0;
    while (!pool.empty()) {
        SimpleWalk walk = std::move(pool.front());
        pool.pop_front();
        if (++walks_seen > cap) {
            throw ResourceError("prime path enumeration exceeded cap of " + std::to_string(cap));
        }
        bool extended = false;
        for (const Edge* e : g.out_edges(walk.last)) {
            if (e->target == walk.first && !walk.path.empty()) {
                Path cycle = walk.path;
                cycle.edges.push_back(e->id);
                candidates.insert(std::move(cycle));  // cycles extend no further
                extended = true;
            } else if (e->target == walk.first && walk.path.empty()) {
                // Self-loop from a seed vertex.
                candidates.insert(Path({e->id}));
                extended = true;
            } else if (!walk.visited.count(e->target)) {
                SimpleWalk next = walk;
                next.path.edges.push_back(e->id);
                next.last = e->target;
                next.visited.insert(e->target);
                pool.push_back(std::move(next));
                extended = true;
            }
        }
        if (!extended && !walk.path.empty()) {
            candidates.insert(walk.path);
        }
    }

    // Keep maximal candidates only.
    for (const Path& p : candidates) {
        bool contained = false;
        for (const Path& q : candidates) {
            if (q.edges.size() > p.edges.size() && contains_subpath(q, p)) {
                contained = true;
                break;
            }
        }
        if (!contained) rs.paths.push_back(p);
    }
    sort_paths(rs.paths);
    return rs;
}

// --- Round trips -------------------------------------------------------------

RequirementSet round_trip_requirements(const FsmGraph& g, RoundTripMode mode, size_t cap) {
    RequirementSet primes = prime_paths(g, cap);
    auto reach = reachable_vertices(g);

    RequirementSet rs;
    rs.criterion =
        Criterion::make(mode == RoundTripMode::Simple ? CriterionKind::SRTC : CriterionKind::CRTC);
    rs.kind = ReqKind::PathSet;
    for (const Path& p : primes.paths) {
        const std::string& anchor = p.first_vertex(g);
        if (anchor != p.last_vertex(g)) continue;
        if (!reach.count(anchor)) continue;
        rs.paths.push_back(p);
    }
    sort_paths(rs.paths);
    if (mode == RoundTripMode::Simple) {
        for (size_t i = 0; i < rs.paths.size(); ++i) {
            rs.anchor_groups[rs.paths[i].first_vertex(g)].push_back(static_cast<int>(i));
        }
    }
    return rs;
}

// --- Boundary-interior classes ------------------------------------------------

Path boundary_interior_canonical(const FsmGraph& g, const Path& p, int depth_bound) {
    Path out = p;
    const size_t max_blocks = static_cast<size_t>(depth_bound) + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& e = out.edges;
        for (size_t block = 1; !changed && 2 * block <= e.size(); ++block) {
            for (size_t i = 0; !changed && i + 2 * block <= e.size(); ++i) {
                if (g.edge(e[i]).source != g.edge(e[i + block - 1]).target) continue;
                size_t runs = 1;
                while (i + (runs + 1) * block <= e.size() &&
                       std::equal(e.begin() + i, e.begin() + i + block,
                                  e.begin() + i + runs * block)) {
                    ++runs;
                }
                if (runs > max_blocks) {
                    Path collapsed;
                    collapsed.edges.assign(e.begin(), e.begin() + i + max_blocks * block);
                    collapsed.edges.insert(collapsed.edges.end(), e.begin() + i + runs * block,
                                           e.end());
                    out = std::move(collapsed);
                    changed = true;
                }
            }
        }
    }
    return out;
}

RequirementSet boundary_interior_classes(const FsmGraph& g, int depth_bound, size_t cap) {
    if (depth_bound < 0) throw SchemaError("BIC requires a non-negative depth bound");
    RequirementSet rs;
    rs.criterion = Criterion::bic(depth_bound);
    rs.kind = ReqKind::PathSet;

    auto coreach = coreachable_vertices(g);
    const int visit_cap = depth_bound + 2;

    std::set<Path> complete;
    std::set<Path> dead_ends;

    struct Frame {
        std::string vertex;
        Path path;
        std::map<std::string, int> visits;
    };
    std::deque<Frame> stack;
    stack.push_back(Frame{g.start(), Path{}, {{g.start(), 1}}});
    size_t expanded = 0;
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (++expanded > cap * 4) {
            throw ResourceError("boundary-interior enumeration exceeded cap");
        }
        if (g.is_end(frame.vertex) && !frame.path.empty()) {
            complete.insert(frame.path);
            if (complete.size() > cap) {
                throw ResourceError("boundary-interior class count exceeded cap of " +
                                    std::to_string(cap));
            }
        }
        bool moved = false;
        for (const Edge* e : g.out_edges(frame.vertex)) {
            int seen = frame.visits.count(e->target) ? frame.visits.at(e->target) : 0;
            if (seen >= visit_cap) continue;
            Frame next;
            next.vertex = e->target;
            next.path = frame.path;
            next.path.edges.push_back(e->id);
            next.visits = frame.visits;
            next.visits[e->target]++;
            stack.push_back(std::move(next));
            moved = true;
        }
        // A walk stuck outside the co-reachable region is kept as a
        // truncated representative.
        if (!moved && !frame.path.empty() && !g.is_end(frame.vertex) &&
            !coreach.count(frame.vertex)) {
            dead_ends.insert(frame.path);
        }
    }

    rs.paths.assign(complete.begin(), complete.end());
    for (const Path& p : dead_ends) {
        rs.truncated.push_back(static_cast<int>(rs.paths.size()));
        rs.paths.push_back(p);
    }
    return rs;
}

// --- All paths ---------------------------------------------------------------

namespace {

bool has_cycle(const FsmGraph& g) {
    // Iterative three-color DFS over every vertex.
    std::map<std::string, int> color;  // 0 unseen, 1 active, 2 done
    for (const auto& root : g.vertices()) {
        if (color[root] != 0) continue;
        std::vector<std::pair<std::string, size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto outs = g.out_edges(v);
            if (next < outs.size()) {
                const std::string& t = outs[next++]->target;
                if (color[t] == 1) return true;
                if (color[t] == 0) {
                    color[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

RequirementSet all_path_requirements(const FsmGraph& g, size_t cap) {
    if (has_cycle(g)) {
        throw CyclicGraphError(
            "all-path requirements are undefined on cyclic graphs: the path set is infinite");
    }
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::APC);
    rs.kind = ReqKind::PathSet;

    struct Frame {
        std::string vertex;
        Path path;
    };
    std::deque<Frame> stack;
    stack.push_back(Frame{g.start(), Path{}});
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (g.is_end(frame.vertex) && !frame.path.empty()) {
            rs.paths.push_back(frame.path);
            if (rs.paths.size() > cap) {
                throw ResourceError("all-path enumeration exceeded cap of " + std::to_string(cap));
            }
        }
        for (const Edge* e : g.out_edges(frame.vertex)) {
            Frame next;
            next.vertex = e->target;
            next.path = frame.path;
            next.path.edges.push_back(e->id);
            stack.push_back(std::move(next));
        }
    }
    sort_paths(rs.paths);
    return rs;
}

RequirementSet specified_path_requirements(const FsmGraph& g, const std::vector<Path>& s) {
    RequirementSet rs;
    rs.criterion = Criterion::spc(s);
    rs.kind = ReqKind::PathSet;
    for (const Path& p : s) {
        require_valid_path(g, p);
        rs.paths.push_back(p);
    }
    sort_paths(rs.paths);
    return rs;
}

RequirementSet requirements_for(const FsmGraph& g, const Criterion& c) {
    switch (c.kind) {
        case CriterionKind::NC: return node_requirements(g);
        case CriterionKind::EC: return edge_requirements(g);
        case CriterionKind::BC: return branch_requirements(g);
        case CriterionKind::EPC: return edge_pair_requirements(g);
        case CriterionKind::APC: return all_path_requirements(g);
        case CriterionKind::PPC: return prime_paths(g);
        case CriterionKind::SPC: return specified_path_requirements(g, c.specified);
        case CriterionKind::SRTC: return round_trip_requirements(g, RoundTripMode::Simple);
        case CriterionKind::CRTC: return round_trip_requirements(g, RoundTripMode::Complete);
        case CriterionKind::BPC: return basis_paths(g);
        case CriterionKind::WMC: return w_method_test_set(g);
        case CriterionKind::NSC: return n_switch_requirements(g, c.n_switch);
        case CriterionKind::BIC: return boundary_interior_classes(g, c.depth_bound);
    }
    throw SchemaError("unknown criterion kind");
}

}  // namespace fsmcov
