#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace xchain {

/// Globally unique symbolic action identifier. Equality is by name:
/// the same name appearing in two automata is the same action, which is
/// what makes shared-action synchronization meaningful.
using ActionId = std::string;

/// One step of the step relation: (source, action, target).
struct Step {
    std::string from;
    ActionId action;
    std::string to;

    auto operator<=>(const Step&) const = default;
};

/// Finite interface automaton: states, initial states, three mutually
/// disjoint action sets (input, output, internal) and a step relation.
/// Nondeterminism in the step relation is permitted.
struct InterfaceAutomaton {
    std::string name;
    std::set<std::string> states;
    std::set<std::string> initial_states;
    std::set<ActionId> input_actions;
    std::set<ActionId> output_actions;
    std::set<ActionId> internal_actions;
    std::set<Step> steps;

    /// Union of the three action partitions.
    std::set<ActionId> alphabet() const;

    /// Checks the structural invariants (partition disjointness, state
    /// membership of initials and step endpoints, step actions in the
    /// alphabet). Returns diagnostics, empty when well formed.
    std::vector<std::string> well_formedness_issues() const;
};

/// Alternating state/action sequence; `states.size() == actions.size()+1`.
/// A single state with no actions is a valid (empty) fragment.
struct ExecutionFragment {
    std::vector<std::string> states;
    std::vector<ActionId> actions;
};

/// Result of checking the four composability conditions. Each violation
/// names the condition and the offending actions.
struct ComposabilityReport {
    struct Violation {
        int condition; // 1..4
        std::string description;
        std::set<ActionId> offending;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Verdict of validate_fragment: valid, or the smallest index i such
/// that (states[i], actions[i], states[i+1]) is not a step.
struct FragmentVerdict {
    bool valid = true;
    std::size_t first_invalid_index = 0;
};

/// Actions enabled at `state`: every action with an outgoing step.
/// Throws UnknownStateError if state is not a member of the automaton.
std::set<ActionId> enabled_actions(const InterfaceAutomaton& automaton,
                                   const std::string& state);

/// Intersection of the two full alphabets.
std::set<ActionId> shared_actions(const InterfaceAutomaton& a,
                                  const InterfaceAutomaton& b);

/// The four mutual-disjointness conditions: no shared inputs, no shared
/// outputs, and neither automaton's internal actions may appear anywhere
/// in the other's alphabet.
ComposabilityReport check_composability(const InterfaceAutomaton& a,
                                        const InterfaceAutomaton& b);

/// Product of two composable automata. States are all pairs "(u,v)";
/// shared actions synchronize and become internal; non-shared actions
/// interleave. Throws ComposabilityError if the precondition fails.
InterfaceAutomaton compose(const InterfaceAutomaton& a, const InterfaceAutomaton& b);

/// Left-associated iterated product. State identifiers are flattened to
/// canonical tuples "(s1,s2,...,sn)" in list order. Throws
/// ComposabilityError naming the first failing pair.
InterfaceAutomaton compose_all(const std::vector<InterfaceAutomaton>& automata);

/// Checks every consecutive (state, action, state) triple against the
/// step relation; reports the smallest violating index.
FragmentVerdict validate_fragment(const InterfaceAutomaton& automaton,
                                  const ExecutionFragment& fragment);

/// States reachable from the initial states over the step relation.
std::set<std::string> reachable_states(const InterfaceAutomaton& automaton);

/// Joins component state names into the canonical tuple identifier used
/// by compose/compose_all: "(s1,s2,...,sn)".
std::string tuple_state_id(const std::vector<std::string>& components);

} // namespace xchain
