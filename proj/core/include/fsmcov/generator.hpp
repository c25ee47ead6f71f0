// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "fsmcov/coverage.hpp"

namespace fsmcov {

/// Generation knobs. anchor_end defaults to "true when the graph has end
/// vertices"; pass a value to force either way.
struct GenConfig {
    bool anchor_start = true;
    std::optional<bool> anchor_end;
    std::uint64_t seed = 0;
    size_t max_paths = 10000;  // >= 1
};

/// Builds a suite satisfying the criterion: requirements are ordered by
/// descending length and each uncovered one is stitched into a walk
/// (shortest prefix from the start vertex, the requirement, shortest suffix
/// to the nearest end, per the anchor flags); walks retire every
/// requirement they happen to cover. BPC emits the basis paths, WMC the
/// realized W-method walks, APC and BIC their representatives verbatim.
///
/// The result is deterministic for a fixed (graph, criterion, config).
/// Throws UnsatisfiableError when a requirement cannot be embedded under
/// the anchors, CriterionInapplicableError when the criterion does not
/// apply, ResourceError past max_paths.
TestSuite generate(const FsmGraph& g, const Criterion& c, const GenConfig& cfg = {});

/// Greedy shrink: drops any path whose removal keeps the criterion
/// satisfied, scanning in canonical order until a fixpoint. The input suite
/// must satisfy the criterion.
TestSuite minimize(const FsmGraph& g, const TestSuite& suite, const Criterion& c);

}  // namespace fsmcov
