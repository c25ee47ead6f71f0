// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/coverage.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace fsmcov {

using nlohmann::json;

std::string CoverageReport::ratio_string() const {
    if (criterion.kind == CriterionKind::BPC) {
        if (cyclomatic <= 0) return "1/1";
        return std::to_string(rank) + "/" + std::to_string(cyclomatic);
    }
    if (total_count == 0) return "1/1";
    return std::to_string(covered_count) + "/" + std::to_string(total_count);
}

std::string CoverageReport::to_json_string(int indent) const {
    json doc;
    doc["criterion"] = criterion.name();
    doc["satisfied"] = satisfied;
    doc["ratio"] = ratio_string();
    json covered = json::array();
    json missing = json::array();
    switch (kind) {
        case ReqKind::Vertex:
        case ReqKind::Edge:
            for (const auto& a : covered_atoms) covered.push_back(a);
            for (const auto& a : missing_atoms) missing.push_back(a);
            break;
        case ReqKind::PathSet:
        case ReqKind::Basis:
            for (const auto& p : covered_paths) covered.push_back(p.edges);
            for (const auto& p : missing_paths) missing.push_back(p.edges);
            break;
        case ReqKind::WmcSequences:
            for (const auto& s : covered_seqs) covered.push_back(s);
            for (const auto& s : missing_seqs) missing.push_back(s);
            break;
    }
    doc["covered"] = std::move(covered);
    doc["missing"] = std::move(missing);
    json meta = json::object();
    if (criterion.kind == CriterionKind::BPC) {
        meta["rank"] = rank;
        meta["cyclomatic"] = cyclomatic;
    }
    if (criterion.kind == CriterionKind::SRTC) {
        meta["groups_satisfied"] = groups_satisfied;
        meta["groups_total"] = groups_total;
    }
    doc["meta"] = std::move(meta);
    return doc.dump(indent);
}

namespace {

std::set<std::string> suite_edge_set(const TestSuite& suite) {
    std::set<std::string> edges;
    for (const Path& p : suite.paths) {
        edges.insert(p.edges.begin(), p.edges.end());
    }
    return edges;
}

std::set<std::string> suite_vertex_set(const FsmGraph& g, const TestSuite& suite) {
    std::set<std::string> vertices;
    for (const Path& p : suite.paths) {
        auto trace = p.vertex_trace(g);
        vertices.insert(trace.begin(), trace.end());
    }
    return vertices;
}

bool covered_by_subpath(const TestSuite& suite, const Path& r) {
    return std::any_of(suite.paths.begin(), suite.paths.end(),
                       [&](const Path& t) { return contains_subpath(t, r); });
}

}  // namespace

CoverageReport check(const FsmGraph& g, const TestSuite& suite, const Criterion& c) {
    require_valid_suite(g, suite);

    CoverageReport report;
    report.criterion = c;

    // BPC is rank-based: any maximal independent set is a basis, so the
    // representation-independent check is rank equality, not containment of
    // one particular basis.
    if (c.kind == CriterionKind::BPC) {
        report.kind = ReqKind::Basis;
        report.cyclomatic = cyclomatic_number(g);
        report.rank = suite_edge_vector_rank(g, suite);
        report.satisfied = report.rank == report.cyclomatic;
        report.covered_count = report.rank;
        report.total_count = report.cyclomatic;
        return report;
    }

    RequirementSet rs = requirements_for(g, c);
    report.kind = rs.kind;
    report.total_count = static_cast<long long>(rs.total());

    switch (rs.kind) {
        case ReqKind::Vertex: {
            auto touched = suite_vertex_set(g, suite);
            for (const auto& v : rs.atoms) {
                (touched.count(v) ? report.covered_atoms : report.missing_atoms).push_back(v);
            }
            report.satisfied = report.missing_atoms.empty();
            break;
        }
        case ReqKind::Edge: {
            auto touched = suite_edge_set(suite);
            for (const auto& e : rs.atoms) {
                (touched.count(e) ? report.covered_atoms : report.missing_atoms).push_back(e);
            }
            report.satisfied = report.missing_atoms.empty();
            break;
        }
        case ReqKind::PathSet: {
            if (c.kind == CriterionKind::BC) {
                // A branch is toured when all of its edges are toured; each
                // edge lies in exactly one branch, which keeps the BC
                // verdict equal to the EC verdict on every input.
                auto touched = suite_edge_set(suite);
                for (const Path& branch : rs.paths) {
                    bool all = std::all_of(branch.edges.begin(), branch.edges.end(),
                                           [&](const std::string& e) { return touched.count(e); });
                    (all ? report.covered_paths : report.missing_paths).push_back(branch);
                }
            } else if (c.kind == CriterionKind::APC) {
                // All-path obligations demand the path itself as a member
                // of the suite, not merely as a subpath.
                std::set<Path> members(suite.paths.begin(), suite.paths.end());
                for (const Path& p : rs.paths) {
                    (members.count(p) ? report.covered_paths : report.missing_paths).push_back(p);
                }
            } else if (c.kind == CriterionKind::BIC) {
                std::set<Path> canonical;
                for (const Path& t : suite.paths) {
                    canonical.insert(boundary_interior_canonical(g, t, c.depth_bound));
                }
                for (const Path& p : rs.paths) {
                    (canonical.count(p) ? report.covered_paths : report.missing_paths).push_back(p);
                }
            } else {
                for (const Path& p : rs.paths) {
                    (covered_by_subpath(suite, p) ? report.covered_paths : report.missing_paths)
                        .push_back(p);
                }
            }
            if (c.kind == CriterionKind::SRTC) {
                std::set<Path> covered(report.covered_paths.begin(), report.covered_paths.end());
                report.groups_total = static_cast<int>(rs.anchor_groups.size());
                for (const auto& [anchor, idxs] : rs.anchor_groups) {
                    bool any = std::any_of(idxs.begin(), idxs.end(),
                                           [&](int i) { return covered.count(rs.paths[i]); });
                    if (any) report.groups_satisfied++;
                }
                report.satisfied = report.groups_satisfied == report.groups_total;
            } else {
                report.satisfied = report.missing_paths.empty();
            }
            break;
        }
        case ReqKind::WmcSequences: {
            // W-method obligations are input sequences applied from the
            // start vertex; a suite path discharges one when it starts at
            // the start vertex and its input projection extends the
            // obligation.
            std::vector<InputSeq> projections;
            for (const Path& t : suite.paths) {
                if (t.first_vertex(g) != g.start()) continue;
                projections.push_back(t.input_trace(g));
            }
            auto covered = [&](const InputSeq& seq) {
                return std::any_of(projections.begin(), projections.end(), [&](const InputSeq& in) {
                    return seq.size() <= in.size() && std::equal(seq.begin(), seq.end(), in.begin());
                });
            };
            for (const auto& seq : rs.sequences) {
                (covered(seq) ? report.covered_seqs : report.missing_seqs).push_back(seq);
            }
            report.satisfied = report.missing_seqs.empty();
            break;
        }
        case ReqKind::Basis:
            break;  // handled above
    }
    report.covered_count = static_cast<long long>(
        report.covered_atoms.size() + report.covered_paths.size() + report.covered_seqs.size());
    return report;
}

std::vector<CheckOutcome> check_all(const FsmGraph& g, const TestSuite& suite,
                                    const std::vector<Criterion>& criteria) {
    std::vector<CheckOutcome> outcomes;
    for (const Criterion& c : criteria) {
        CheckOutcome outcome;
        outcome.criterion = c;
        try {
            outcome.report = check(g, suite, c);
        } catch (const CyclicGraphError& e) {
            outcome.error_kind = "CyclicGraphError";
            outcome.error_message = e.what();
        } catch (const MealyLabelsMissingError& e) {
            outcome.error_kind = "MealyLabelsMissingError";
            outcome.error_message = e.what();
        } catch (const IndistinguishableStatesError& e) {
            outcome.error_kind = "IndistinguishableStatesError";
            outcome.error_message = e.what();
        } catch (const CriterionInapplicableError& e) {
            outcome.error_kind = "CriterionInapplicableError";
            outcome.error_message = e.what();
        } catch (const ResourceError& e) {
            outcome.error_kind = "ResourceError";
            outcome.error_message = e.what();
        } catch (const Error& e) {
            outcome.error_kind = "Error";
            outcome.error_message = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

}  // namespace fsmcov
