// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fsmcov/errors.hpp"

namespace fsmcov {

std::string kind_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::NC: return "NC";
        case CriterionKind::EC: return "EC";
        case CriterionKind::BC: return "BC";
        case CriterionKind::EPC: return "EPC";
        case CriterionKind::APC: return "APC";
        case CriterionKind::PPC: return "PPC";
        case CriterionKind::SPC: return "SPC";
        case CriterionKind::SRTC: return "SRTC";
        case CriterionKind::CRTC: return "CRTC";
        case CriterionKind::BPC: return "BPC";
        case CriterionKind::WMC: return "WMC";
        case CriterionKind::NSC: return "NSC";
        case CriterionKind::BIC: return "BIC";
    }
    return "?";
}

Criterion Criterion::make(CriterionKind kind) {
    Criterion c;
    c.kind = kind;
    return c;
}

Criterion Criterion::nsc(int n) {
    if (n < 0) throw SchemaError("NSC requires N >= 0");
    Criterion c;
    c.kind = CriterionKind::NSC;
    c.n_switch = n;
    return c;
}

Criterion Criterion::bic(int depth_bound) {
    if (depth_bound < 0) throw SchemaError("BIC requires a non-negative depth bound");
    Criterion c;
    c.kind = CriterionKind::BIC;
    c.depth_bound = depth_bound;
    return c;
}

Criterion Criterion::spc(std::vector<Path> specified) {
    Criterion c;
    c.kind = CriterionKind::SPC;
    c.specified = std::move(specified);
    return c;
}

Criterion Criterion::parse(
    const std::string& spec,
    const std::function<std::vector<Path>(const std::string&)>& spc_loader) {
    std::string name = spec;
    std::string param;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        param = spec.substr(colon + 1);
    }
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::toupper(c); });

    static const std::map<std::string, CriterionKind> plain = {
        {"NC", CriterionKind::NC},     {"EC", CriterionKind::EC},
        {"BC", CriterionKind::BC},     {"EPC", CriterionKind::EPC},
        {"APC", CriterionKind::APC},   {"PPC", CriterionKind::PPC},
        {"SRTC", CriterionKind::SRTC}, {"CRTC", CriterionKind::CRTC},
        {"BPC", CriterionKind::BPC},   {"WMC", CriterionKind::WMC},
    };

    auto parse_int = [&](const std::string& text) {
        if (text.empty() ||
            !std::all_of(text.begin(), text.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
            throw SchemaError("criterion parameter '" + text + "' is not a natural number");
        }
        return std::stoi(text);
    };

    if (auto it = plain.find(name); it != plain.end()) {
        if (!param.empty()) {
            throw SchemaError("criterion '" + name + "' takes no parameter");
        }
        return make(it->second);
    }
    if (name == "NSC") {
        if (param.empty()) throw SchemaError("NSC requires a parameter, e.g. nsc:2");
        return nsc(parse_int(param));
    }
    if (name == "BIC") {
        return param.empty() ? bic(1) : bic(parse_int(param));
    }
    if (name == "SPC") {
        if (param.empty() || param[0] != '@') {
            throw SchemaError("SPC requires a path file, e.g. spc:@paths.json");
        }
        if (!spc_loader) {
            throw SchemaError("no loader available for '" + param + "'");
        }
        return spc(spc_loader(param.substr(1)));
    }
    throw SchemaError("unknown criterion '" + spec + "'");
}

std::string Criterion::name() const {
    switch (kind) {
        case CriterionKind::NSC: return "NSC:" + std::to_string(n_switch);
        case CriterionKind::BIC: return "BIC:" + std::to_string(depth_bound);
        default: return kind_name(kind);
    }
}

}  // namespace fsmcov
