// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fsmcov/graph.hpp"

namespace fsmcov {

/// Canonical fixture corpus. Each graph is a small machine whose coverage
/// behavior separates two criteria in a specific way; the subsumption lab
/// uses them as primary witnesses.
///
///   fix-diamond   parallel decision/merge pair, separates EC from EPC
///   fix-selfloop  self-loop whose prime paths miss edge pairs
///   fix-triple    2x2x2 parallel chain, separates EPC from PPC
///   fix-twoloops  two cycles off one hub, separates BPC from EPC
///   fix-oneloop   single cycle, separates BPC from PPC
///   fix-wgraph    labeled machine for transition-tree construction
const FsmGraph& fixture(const std::string& name);

/// Fixture names in canonical order.
std::vector<std::string> fixture_names();

}  // namespace fsmcov
