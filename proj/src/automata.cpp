#include "xchain/automata.hpp"

#include "xchain/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace xchain {

namespace {

std::set<ActionId> set_union(const std::set<ActionId>& a, const std::set<ActionId>& b) {
    std::set<ActionId> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

std::set<ActionId> set_intersection(const std::set<ActionId>& a, const std::set<ActionId>& b) {
    std::set<ActionId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

std::set<ActionId> set_difference(const std::set<ActionId>& a, const std::set<ActionId>& b) {
    std::set<ActionId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

} // namespace

std::set<ActionId> InterfaceAutomaton::alphabet() const {
    std::set<ActionId> all = input_actions;
    all.insert(output_actions.begin(), output_actions.end());
    all.insert(internal_actions.begin(), internal_actions.end());
    return all;
}

std::vector<std::string> InterfaceAutomaton::well_formedness_issues() const {
    std::vector<std::string> issues;
    for (const ActionId& a : input_actions) {
        if (output_actions.count(a) || internal_actions.count(a)) {
            issues.push_back("action partition overlap on '" + a + "'");
        }
    }
    for (const ActionId& a : output_actions) {
        if (internal_actions.count(a)) {
            issues.push_back("action partition overlap on '" + a + "'");
        }
    }
    if (initial_states.empty()) {
        issues.push_back("no initial states");
    }
    for (const std::string& s : initial_states) {
        if (!states.count(s)) {
            issues.push_back("initial state '" + s + "' not a state");
        }
    }
    const std::set<ActionId> all = alphabet();
    for (const Step& st : steps) {
        if (!states.count(st.from)) {
            issues.push_back("step source '" + st.from + "' not a state");
        }
        if (!states.count(st.to)) {
            issues.push_back("step target '" + st.to + "' not a state");
        }
        if (!all.count(st.action)) {
            issues.push_back("step action '" + st.action + "' not in alphabet");
        }
    }
    return issues;
}

std::string ComposabilityReport::summary() const {
    if (ok()) {
        return "composable";
    }
    std::string out;
    for (const Violation& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += "condition " + std::to_string(v.condition) + ": " + v.description + " {";
        bool first = true;
        for (const ActionId& a : v.offending) {
            if (!first) {
                out += ",";
            }
            out += a;
            first = false;
        }
        out += "}";
    }
    return out;
}

std::set<ActionId> enabled_actions(const InterfaceAutomaton& automaton,
                                   const std::string& state) {
    if (!automaton.states.count(state)) {
        throw UnknownStateError("enabled_actions: unknown state '" + state + "' in automaton '" +
                                automaton.name + "'");
    }
    std::set<ActionId> out;
    for (const Step& st : automaton.steps) {
        if (st.from == state) {
            out.insert(st.action);
        }
    }
    return out;
}

std::set<ActionId> shared_actions(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
    return set_intersection(a.alphabet(), b.alphabet());
}

ComposabilityReport check_composability(const InterfaceAutomaton& a,
                                        const InterfaceAutomaton& b) {
    ComposabilityReport report;
    const auto add = [&](int cond, const std::string& desc, std::set<ActionId> bad) {
        if (!bad.empty()) {
            report.violations.push_back({cond, desc, std::move(bad)});
        }
    };
    add(1, "shared input actions", set_intersection(a.input_actions, b.input_actions));
    add(2, "shared output actions", set_intersection(a.output_actions, b.output_actions));
    add(3, "internal actions of '" + a.name + "' visible to '" + b.name + "'",
        set_intersection(a.internal_actions, b.alphabet()));
    add(4, "internal actions of '" + b.name + "' visible to '" + a.name + "'",
        set_intersection(b.internal_actions, a.alphabet()));
    return report;
}

InterfaceAutomaton compose(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
    const ComposabilityReport report = check_composability(a, b);
    if (!report.ok()) {
        throw ComposabilityError("compose(" + a.name + ", " + b.name + "): " + report.summary());
    }

    const std::set<ActionId> shared = shared_actions(a, b);

    InterfaceAutomaton product;
    product.name = a.name + "*" + b.name;

    const auto pair_id = [](const std::string& u, const std::string& v) {
        return "(" + u + "," + v + ")";
    };

    for (const std::string& u : a.states) {
        for (const std::string& v : b.states) {
            product.states.insert(pair_id(u, v));
        }
    }
    for (const std::string& u : a.initial_states) {
        for (const std::string& v : b.initial_states) {
            product.initial_states.insert(pair_id(u, v));
        }
    }

    product.input_actions = set_difference(set_union(a.input_actions, b.input_actions), shared);
    product.output_actions = set_difference(set_union(a.output_actions, b.output_actions), shared);
    product.internal_actions =
        set_union(set_union(a.internal_actions, b.internal_actions), shared);

    // Private steps of each side interleave against every state of the
    // other; shared actions require both sides to step together.
    for (const Step& st : a.steps) {
        if (shared.count(st.action)) {
            continue;
        }
        for (const std::string& v : b.states) {
            product.steps.insert({pair_id(st.from, v), st.action, pair_id(st.to, v)});
        }
    }
    for (const Step& st : b.steps) {
        if (shared.count(st.action)) {
            continue;
        }
        for (const std::string& u : a.states) {
            product.steps.insert({pair_id(u, st.from), st.action, pair_id(u, st.to)});
        }
    }
    for (const Step& sa : a.steps) {
        if (!shared.count(sa.action)) {
            continue;
        }
        for (const Step& sb : b.steps) {
            if (sb.action != sa.action) {
                continue;
            }
            product.steps.insert(
                {pair_id(sa.from, sb.from), sa.action, pair_id(sa.to, sb.to)});
        }
    }
    return product;
}

std::string tuple_state_id(const std::vector<std::string>& components) {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += components[i];
    }
    out += ")";
    return out;
}

InterfaceAutomaton compose_all(const std::vector<InterfaceAutomaton>& automata) {
    if (automata.empty()) {
        throw ComposabilityError("compose_all: empty automaton list");
    }
    if (automata.size() == 1) {
        return automata.front();
    }

    // Left fold, tracking each accumulated state's component tuple so the
    // final identifiers can be flattened to "(s1,...,sn)" in list order.
    InterfaceAutomaton acc = automata.front();
    std::map<std::string, std::vector<std::string>> components;
    for (const std::string& s : acc.states) {
        components[s] = {s};
    }

    for (std::size_t i = 1; i < automata.size(); ++i) {
        const InterfaceAutomaton& next = automata[i];
        const ComposabilityReport report = check_composability(acc, next);
        if (!report.ok()) {
            throw ComposabilityError("compose_all: pair (" + acc.name + ", " + next.name +
                                     ") not composable: " + report.summary());
        }
        InterfaceAutomaton product = compose(acc, next);

        std::map<std::string, std::vector<std::string>> next_components;
        std::map<std::string, std::string> rename; // pair id -> flat tuple id
        for (const std::string& u : acc.states) {
            for (const std::string& v : next.states) {
                std::vector<std::string> tuple = components.at(u);
                tuple.push_back(v);
                const std::string pair = "(" + u + "," + v + ")";
                const std::string flat = tuple_state_id(tuple);
                rename[pair] = flat;
                next_components[flat] = std::move(tuple);
            }
        }

        InterfaceAutomaton renamed;
        renamed.name = product.name;
        renamed.input_actions = product.input_actions;
        renamed.output_actions = product.output_actions;
        renamed.internal_actions = product.internal_actions;
        for (const std::string& s : product.states) {
            renamed.states.insert(rename.at(s));
        }
        for (const std::string& s : product.initial_states) {
            renamed.initial_states.insert(rename.at(s));
        }
        for (const Step& st : product.steps) {
            renamed.steps.insert({rename.at(st.from), st.action, rename.at(st.to)});
        }
        acc = std::move(renamed);
        components = std::move(next_components);
    }
    return acc;
}

FragmentVerdict validate_fragment(const InterfaceAutomaton& automaton,
                                  const ExecutionFragment& fragment) {
    FragmentVerdict verdict;
    if (fragment.states.size() != fragment.actions.size() + 1) {
        verdict.valid = false;
        verdict.first_invalid_index = 0;
        return verdict;
    }
    for (std::size_t i = 0; i < fragment.actions.size(); ++i) {
        const Step candidate{fragment.states[i], fragment.actions[i], fragment.states[i + 1]};
        if (!automaton.steps.count(candidate)) {
            verdict.valid = false;
            verdict.first_invalid_index = i;
            return verdict;
        }
    }
    return verdict;
}

std::set<std::string> reachable_states(const InterfaceAutomaton& automaton) {
    std::set<std::string> seen = automaton.initial_states;
    std::deque<std::string> frontier(automaton.initial_states.begin(),
                                     automaton.initial_states.end());
    while (!frontier.empty()) {
        const std::string current = frontier.front();
        frontier.pop_front();
        for (const Step& st : automaton.steps) {
            if (st.from == current && !seen.count(st.to)) {
                seen.insert(st.to);
                frontier.push_back(st.to);
            }
        }
    }
    return seen;
}

} // namespace xchain
