#pragma once

#include "xchain/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace xchain {

/// Dense 0-based index plus display name.
struct PartyId {
    std::size_t index = 0;
    std::string name;

    auto operator<=>(const PartyId&) const = default;
};

struct ContractId {
    std::size_t index = 0;
    std::string name;

    auto operator<=>(const ContractId&) const = default;
};

/// One value per party; entries are opaque task-input descriptions.
using InputPartyVector = std::vector<std::string>;

/// One state value per contract, drawn from that contract's declared
/// task-level state space.
using ContractStateVector = std::vector<std::string>;

/// A transition is a point of the task's declared space, identified by
/// indices into the three enumerated vector sets.
struct Transition {
    std::size_t party_input = 0;    // index into input_party_vectors
    std::size_t contract_input = 0; // index into input_contract_vectors
    std::size_t contract_output = 0; // index into output_contract_vectors

    auto operator<=>(const Transition&) const = default;
};

enum class TransitionClass {
    Preferred,              // every party strictly gains
    AcceptableNotPreferred, // nobody loses, someone fails to gain
    Unacceptable,           // some party loses
};

/// Three feasibility verdicts with concrete counterexamples on failure.
struct FeasibilityReport {
    struct Check {
        std::string name;
        bool pass = true;
        std::string witness; // human-readable counterexample
    };
    Check null_acceptable;     // doing nothing must always be acceptable
    Check preferred_exists;    // the task must be solvable in principle
    Check input_independence;  // lying about another party's input must
                               // not make a compliant party lose

    bool all_pass() const {
        return null_acceptable.pass && preferred_exists.pass && input_independence.pass;
    }
};

/// A cross-chain task: party inputs, contract input/output state vector
/// sets, and a total per-party utility table keyed by vector indices.
/// All utility arithmetic is exact.
class CrossChainTask {
public:
    std::vector<PartyId> parties;
    std::vector<ContractId> contracts;
    std::vector<InputPartyVector> input_party_vectors;
    std::vector<ContractStateVector> input_contract_vectors;
    std::vector<ContractStateVector> output_contract_vectors;

    /// utility[(ip,ic,oc)] = per-party utility vector, length m.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Rational>> utility;

    std::size_t party_count() const { return parties.size(); }
    std::size_t contract_count() const { return contracts.size(); }

    /// Index of an output vector equal to `v`, if declared.
    std::optional<std::size_t> find_output_index(const ContractStateVector& v) const;

    /// Index of an input contract vector inside the output set (every
    /// input vector must also be a possible output for feasibility).
    std::optional<std::size_t> output_index_of_input(std::size_t contract_input) const;

    /// Structural diagnostics: vector lengths, utility-table totality,
    /// index ranges. Empty when well formed.
    std::vector<std::string> well_formedness_issues() const;

    const std::vector<Rational>& utility_vector(const Transition& t) const;
};

/// Utility of one party for a transition.
/// Throws DomainError if t lies outside the declared space or the party
/// is unknown.
Rational party_utility(const CrossChainTask& task, const Transition& t, const PartyId& party);

/// Sum of member utilities; the empty coalition has utility 0.
/// Throws DomainError on unknown parties.
Rational coalition_utility(const CrossChainTask& task, const Transition& t,
                           const std::set<std::size_t>& coalition_indices);

/// Preferred (all > 0), acceptable-not-preferred (all >= 0, not all > 0)
/// or unacceptable.
TransitionClass classify_transition(const CrossChainTask& task, const Transition& t);

/// Runs the three feasibility conditions exhaustively over the declared
/// vector sets.
FeasibilityReport check_feasibility(const CrossChainTask& task);

std::string render_contract_vector(const ContractStateVector& v);

} // namespace xchain
