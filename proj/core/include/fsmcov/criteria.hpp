// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fsmcov/path.hpp"

namespace fsmcov {

/// The closed set of coverage criteria. NSC carries a switch depth, BIC a
/// loop repetition bound and SPC the specified path set.
enum class CriterionKind {
    NC,    // node coverage
    EC,    // edge coverage
    BC,    // branch coverage
    EPC,   // edge-pair coverage
    APC,   // all-path coverage (acyclic graphs only)
    PPC,   // prime path coverage
    SPC,   // specified path coverage
    SRTC,  // simple round trip coverage
    CRTC,  // complete round trip coverage
    BPC,   // basis path coverage
    WMC,   // W-method coverage
    NSC,   // N-switch coverage
    BIC,   // boundary-interior coverage
};

std::string kind_name(CriterionKind kind);

struct Criterion {
    CriterionKind kind = CriterionKind::NC;
    int n_switch = 0;               // NSC: N >= 0
    int depth_bound = 1;            // BIC: represented loop repetitions
    std::vector<Path> specified;    // SPC

    static Criterion make(CriterionKind kind);
    static Criterion nsc(int n);
    static Criterion bic(int depth_bound);
    static Criterion spc(std::vector<Path> specified);

    /// Parses the CLI mini-grammar: "ppc", "nsc:2", "bic:1", "spc:@file".
    /// The loader resolves "@file" arguments to path lists; without one,
    /// spc specs are rejected.
    static Criterion parse(
        const std::string& spec,
        const std::function<std::vector<Path>(const std::string&)>& spc_loader = {});

    /// Canonical display form, e.g. "NSC:2".
    std::string name() const;
};

}  // namespace fsmcov
