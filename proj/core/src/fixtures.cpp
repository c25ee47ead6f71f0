// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/fixtures.hpp"

#include <map>

namespace fsmcov {

namespace {

Edge edge(std::string id, std::string from, std::string to) {
    return Edge{std::move(id), std::move(from), std::move(to), {}, {}};
}

Edge mealy_edge(std::string id, std::string from, std::string to, std::string in,
                std::string out) {
    return Edge{std::move(id), std::move(from), std::move(to), std::move(in), std::move(out)};
}

std::map<std::string, FsmGraph> build_corpus() {
    std::map<std::string, FsmGraph> corpus;

    corpus.emplace("fix-diamond",
                   FsmGraph::create({"1", "2", "3"},
                                    {edge("a", "1", "2"), edge("c", "1", "2"),
                                     edge("b", "2", "3"), edge("d", "2", "3")},
                                    "1", {"3"}));

    corpus.emplace("fix-selfloop",
                   FsmGraph::create({"1", "2", "3", "4"},
                                    {edge("a", "1", "2"), edge("b", "2", "3"),
                                     edge("c", "2", "4"), edge("d", "2", "2")},
                                    "1", {"3", "4"}));

    corpus.emplace("fix-triple",
                   FsmGraph::create({"1", "2", "3", "4"},
                                    {edge("a", "1", "2"), edge("b", "1", "2"),
                                     edge("c", "2", "3"), edge("d", "2", "3"),
                                     edge("e", "3", "4"), edge("f", "3", "4")},
                                    "1", {"4"}));

    corpus.emplace("fix-twoloops",
                   FsmGraph::create({"1", "2", "3", "4", "5"},
                                    {edge("a", "1", "2"), edge("b", "2", "3"),
                                     edge("c", "2", "4"), edge("d", "4", "2"),
                                     edge("e", "2", "5"), edge("f", "5", "2")},
                                    "1", {"3"}));

    corpus.emplace("fix-oneloop",
                   FsmGraph::create({"1", "2", "3", "4"},
                                    {edge("a", "1", "2"), edge("b", "2", "3"),
                                     edge("c", "2", "4"), edge("d", "4", "2")},
                                    "1", {"3"}));

    // Deterministic but partial Mealy machine over inputs {x,y,z}; the two
    // terminal states are behaviorally identical, so it exercises the
    // transition tree, not the characterization set.
    corpus.emplace("fix-wgraph",
                   FsmGraph::create({"s", "q", "r", "t1", "t2"},
                                    {mealy_edge("a", "s", "q", "x", "0"),
                                     mealy_edge("b", "q", "t1", "x", "1"),
                                     mealy_edge("c", "q", "t2", "y", "1"),
                                     mealy_edge("d", "q", "r", "z", "0"),
                                     mealy_edge("e", "r", "q", "x", "0")},
                                    "s", {"t1", "t2"}));

    return corpus;
}

const std::map<std::string, FsmGraph>& corpus() {
    static const std::map<std::string, FsmGraph> instance = build_corpus();
    return instance;
}

}  // namespace

const FsmGraph& fixture(const std::string& name) {
    auto it = corpus().find(name);
    if (it == corpus().end()) {
        throw ModelError("unknown fixture '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : corpus()) names.push_back(name);
    return names;
}

}  // namespace fsmcov
