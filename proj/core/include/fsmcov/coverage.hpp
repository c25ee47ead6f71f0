// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsmcov/criteria.hpp"
#include "fsmcov/graph.hpp"
#include "fsmcov/path.hpp"
#include "fsmcov/requirements.hpp"

namespace fsmcov {

/// Verdict of checking one suite against one criterion. covered/missing
/// partition the requirement items; the ratio is exact (covered over total,
/// 1 when there are no requirements). Two criteria special-case the
/// satisfied flag: SRTC needs one covered cycle per anchor group, and BPC
/// is satisfied when the suite's complete-path vectors reach the cyclomatic
/// rank.
struct CoverageReport {
    Criterion criterion;
    bool satisfied = false;

    ReqKind kind = ReqKind::Vertex;
    std::vector<std::string> covered_atoms, missing_atoms;
    std::vector<Path> covered_paths, missing_paths;
    std::vector<InputSeq> covered_seqs, missing_seqs;

    long long covered_count = 0;
    long long total_count = 0;

    int rank = 0;        // BPC
    int cyclomatic = 0;  // BPC
    int groups_satisfied = 0;  // SRTC
    int groups_total = 0;      // SRTC

    /// "covered/total" (or "rank/cyclomatic" for BPC); "1/1" when vacuous.
    std::string ratio_string() const;

    std::string to_json_string(int indent = 2) const;
};

/// Checks a suite against a criterion. The suite must be valid in g; it
/// does not have to start at the start vertex or end at an end vertex.
/// Throws CriterionInapplicableError (and subclasses) when the criterion
/// cannot be evaluated on this graph.
CoverageReport check(const FsmGraph& g, const TestSuite& suite, const Criterion& c);

/// Batch variant; per-item errors are collected, not fail-fast.
struct CheckOutcome {
    Criterion criterion;
    std::optional<CoverageReport> report;
    std::string error_kind;     // empty on success
    std::string error_message;  // empty on success
};

std::vector<CheckOutcome> check_all(const FsmGraph& g, const TestSuite& suite,
                                    const std::vector<Criterion>& criteria);

}  // namespace fsmcov
