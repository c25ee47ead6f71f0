// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fsmcov/requirements.hpp"

namespace fsmcov {

namespace {

void require_mealy(const FsmGraph& g) {
    if (!g.fully_labeled()) {
        throw MealyLabelsMissingError("operation requires input/output labels on every edge");
    }
}

/// Deterministic transition lookup; nullptr when the input is undefined.
const Edge* step(const FsmGraph& g, const std::string& state, const std::string& input) {
    for (const Edge* e : g.out_edges(state)) {
        if (e->labeled() && *e->input == input) return e;
    }
    return nullptr;
}

std::vector<std::string> input_alphabet(const FsmGraph& g) {
    std::set<std::string> inputs;
    for (const Edge& e : g.edges()) {
        if (e.labeled()) inputs.insert(*e.input);
    }
    return {inputs.begin(), inputs.end()};
}

}  // namespace

TestingTree testing_tree(const FsmGraph& g) {
    TestingTree tree;
    tree.nodes.push_back(TestingTree::Node{g.start(), "", -1, {}, false});
    std::set<std::string> expanded;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        const std::string vertex = tree.nodes[idx].vertex;
        if (expanded.count(vertex)) {
            tree.nodes[idx].revisit = true;
            continue;
        }
        expanded.insert(vertex);
        for (const Edge* e : g.out_edges(vertex)) {
            int child = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back(TestingTree::Node{e->target, e->id, idx, {}, false});
            tree.nodes[idx].children.push_back(child);
            queue.push_back(child);
        }
    }
    return tree;
}

std::vector<Path> TestingTree::root_to_leaf_paths() const {
    std::vector<Path> result;
    for (size_t i = 1; i < nodes.size(); ++i) {
        if (!is_leaf(static_cast<int>(i))) continue;
        std::vector<std::string> reversed;
        for (int at = static_cast<int>(i); at > 0; at = nodes[at].parent) {
            reversed.push_back(nodes[at].via_edge);
        }
        result.emplace_back(std::vector<std::string>(reversed.rbegin(), reversed.rend()));
    }
    std::sort(result.begin(), result.end());
    return result;
}

Observation observe(const FsmGraph& g, const std::string& state, const InputSeq& inputs) {
    Observation obs;
    std::string at = state;
    for (const auto& input : inputs) {
        const Edge* e = step(g, at, input);
        if (e == nullptr) {
            obs.blocked = true;
            break;
        }
        obs.outputs.push_back(*e->output);
        at = e->target;
    }
    return obs;
}

namespace {

/// Shortest input sequence with different observations for the pair, via
/// breadth-first search over the product machine. Blocking on one side only
/// separates immediately; blocking on both sides kills the branch.
std::optional<InputSeq> separating_sequence(const FsmGraph& g, const std::string& u,
                                            const std::string& v,
                                            const std::vector<std::string>& alphabet) {
    std::set<std::pair<std::string, std::string>> seen{{u, v}};
    std::deque<std::pair<std::pair<std::string, std::string>, InputSeq>> queue{{{u, v}, {}}};
    while (!queue.empty()) {
        auto [pair, prefix] = queue.front();
        queue.pop_front();
        for (const auto& input : alphabet) {
            const Edge* eu = step(g, pair.first, input);
            const Edge* ev = step(g, pair.second, input);
            InputSeq candidate = prefix;
            candidate.push_back(input);
            if ((eu == nullptr) != (ev == nullptr)) return candidate;
            if (eu == nullptr && ev == nullptr) continue;
            if (*eu->output != *ev->output) return candidate;
            std::pair<std::string, std::string> next{eu->target, ev->target};
            if (next.first == next.second) continue;  // merged, never separates
            if (seen.insert(next).second) {
                queue.emplace_back(next, std::move(candidate));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<InputSeq> characterization_set(const FsmGraph& g) {
    require_mealy(g);
    auto alphabet = input_alphabet(g);
    const auto& states = g.vertices();

    std::set<InputSeq> candidates;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i < states.size(); ++i) {
        for (size_t j = i + 1; j < states.size(); ++j) {
            auto w = separating_sequence(g, states[i], states[j], alphabet);
            if (!w.has_value()) {
                throw IndistinguishableStatesError("states '" + states[i] + "' and '" + states[j] +
                                                   "' produce identical observations; "
                                                   "the machine is not minimal");
            }
            candidates.insert(*w);
            pairs.emplace_back(states[i], states[j]);
        }
    }

    auto separates_all = [&](const std::vector<InputSeq>& w_set) {
        for (const auto& [u, v] : pairs) {
            bool split = false;
            for (const auto& w : w_set) {
                if (!(observe(g, u, w) == observe(g, v, w))) {
                    split = true;
                    break;
                }
            }
            if (!split) return false;
        }
        return true;
    };

    // Greedy elimination in canonical (ascending) order.
    std::vector<InputSeq> w_set(candidates.begin(), candidates.end());
    for (size_t i = 0; i < w_set.size();) {
        std::vector<InputSeq> without = w_set;
        without.erase(without.begin() + i);
        if (!without.empty() && separates_all(without)) {
            w_set = std::move(without);
        } else {
            ++i;
        }
    }
    return w_set;
}

Path realize_inputs(const FsmGraph& g, const InputSeq& inputs) {
    require_mealy(g);
    Path walk;
    std::string at = g.start();
    for (const auto& input : inputs) {
        const Edge* e = step(g, at, input);
        if (e == nullptr) break;
        walk.edges.push_back(e->id);
        at = e->target;
    }
    return walk;
}

RequirementSet w_method_test_set(const FsmGraph& g) {
    require_mealy(g);
    RequirementSet rs;
    rs.criterion = Criterion::make(CriterionKind::WMC);
    rs.kind = ReqKind::WmcSequences;

    TestingTree tree = testing_tree(g);
    std::set<InputSeq> p_set;
    for (const Path& p : tree.root_to_leaf_paths()) {
        p_set.insert(p.input_trace(g));
    }
    rs.p_set.assign(p_set.begin(), p_set.end());

    auto w = characterization_set(g);
    rs.w_set = w;

    std::set<InputSeq> items;
    auto truncate_realizable = [&](const InputSeq& seq) {
        Path walk = realize_inputs(g, seq);
        InputSeq realizable(seq.begin(), seq.begin() + walk.edges.size());
        return realizable;
    };
    if (w.empty()) {
        // Degenerate single-state machine: the tree paths alone remain.
        for (const auto& p : rs.p_set) items.insert(truncate_realizable(p));
    } else {
        for (const auto& p : rs.p_set) {
            for (const auto& suffix : w) {
                InputSeq seq = p;
                seq.insert(seq.end(), suffix.begin(), suffix.end());
                items.insert(truncate_realizable(seq));
            }
        }
    }
    rs.sequences.assign(items.begin(), items.end());
    return rs;
}

}  // namespace fsmcov
