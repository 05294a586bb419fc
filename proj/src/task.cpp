#include "xchain/task.hpp"

#include "xchain/errors.hpp"

#include <algorithm>

namespace xchain {

std::optional<std::size_t> CrossChainTask::find_output_index(const ContractStateVector& v) const {
    for (std::size_t i = 0; i < output_contract_vectors.size(); ++i) {
        if (output_contract_vectors[i] == v) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> CrossChainTask::output_index_of_input(std::size_t contract_input) const {
    if (contract_input >= input_contract_vectors.size()) {
        return std::nullopt;
    }
    return find_output_index(input_contract_vectors[contract_input]);
}

std::vector<std::string> CrossChainTask::well_formedness_issues() const {
    std::vector<std::string> issues;
    const std::size_t m = party_count();
    const std::size_t n = contract_count();
    for (std::size_t i = 0; i < parties.size(); ++i) {
        if (parties[i].index != i) {
            issues.push_back("party index not dense at position " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < contracts.size(); ++i) {
        if (contracts[i].index != i) {
            issues.push_back("contract index not dense at position " + std::to_string(i));
        }
    }
    for (const InputPartyVector& v : input_party_vectors) {
        if (v.size() != m) {
            issues.push_back("party input vector of length " + std::to_string(v.size()) +
                             ", expected " + std::to_string(m));
        }
    }
    const auto check_cv = [&](const ContractStateVector& v, const char* what) {
        if (v.size() != n) {
            issues.push_back(std::string(what) + " vector of length " +
                             std::to_string(v.size()) + ", expected " + std::to_string(n));
        }
    };
    for (const ContractStateVector& v : input_contract_vectors) {
        check_cv(v, "contract input");
    }
    for (const ContractStateVector& v : output_contract_vectors) {
        check_cv(v, "contract output");
    }
    if (input_party_vectors.empty()) {
        issues.push_back("no input party vectors");
    }
    if (input_contract_vectors.empty()) {
        issues.push_back("no input contract vectors");
    }
    if (output_contract_vectors.empty()) {
        issues.push_back("no output contract vectors");
    }
    // The utility table must be total over the declared index space.
    for (std::size_t ip = 0; ip < input_party_vectors.size(); ++ip) {
        for (std::size_t ic = 0; ic < input_contract_vectors.size(); ++ic) {
            for (std::size_t oc = 0; oc < output_contract_vectors.size(); ++oc) {
                const auto it = utility.find({ip, ic, oc});
                if (it == utility.end()) {
                    issues.push_back("utility table missing entry (" + std::to_string(ip) + "," +
                                     std::to_string(ic) + "," + std::to_string(oc) + ")");
                } else if (it->second.size() != m) {
                    issues.push_back("utility vector at (" + std::to_string(ip) + "," +
                                     std::to_string(ic) + "," + std::to_string(oc) +
                                     ") has length " + std::to_string(it->second.size()));
                }
            }
        }
    }
    for (const auto& [key, vec] : utility) {
        const auto [ip, ic, oc] = key;
        if (ip >= input_party_vectors.size() || ic >= input_contract_vectors.size() ||
            oc >= output_contract_vectors.size()) {
            issues.push_back("utility table entry outside declared index space");
        }
    }
    return issues;
}

const std::vector<Rational>& CrossChainTask::utility_vector(const Transition& t) const {
    if (t.party_input >= input_party_vectors.size() ||
        t.contract_input >= input_contract_vectors.size() ||
        t.contract_output >= output_contract_vectors.size()) {
        throw DomainError("transition outside the task's declared vector sets");
    }
    const auto it = utility.find({t.party_input, t.contract_input, t.contract_output});
    if (it == utility.end()) {
        throw DomainError("utility table has no entry for transition");
    }
    return it->second;
}

Rational party_utility(const CrossChainTask& task, const Transition& t, const PartyId& party) {
    if (party.index >= task.party_count() ||
        task.parties[party.index].name != party.name) {
        throw DomainError("unknown party '" + party.name + "'");
    }
    return task.utility_vector(t)[party.index];
}

Rational coalition_utility(const CrossChainTask& task, const Transition& t,
                           const std::set<std::size_t>& coalition_indices) {
    Rational sum(0);
    if (coalition_indices.empty()) {
        return sum;
    }
    const std::vector<Rational>& u = task.utility_vector(t);
    for (std::size_t p : coalition_indices) {
        if (p >= task.party_count()) {
            throw DomainError("coalition contains unknown party index " + std::to_string(p));
        }
        sum += u[p];
    }
    return sum;
}

TransitionClass classify_transition(const CrossChainTask& task, const Transition& t) {
    const std::vector<Rational>& u = task.utility_vector(t);
    const Rational zero(0);
    bool all_positive = true;
    for (const Rational& r : u) {
        if (r < zero) {
            return TransitionClass::Unacceptable;
        }
        if (r == zero) {
            all_positive = false;
        }
    }
    return all_positive ? TransitionClass::Preferred : TransitionClass::AcceptableNotPreferred;
}

std::string render_contract_vector(const ContractStateVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += v[i];
    }
    out += "]";
    return out;
}

FeasibilityReport check_feasibility(const CrossChainTask& task) {
    FeasibilityReport report;
    report.null_acceptable.name = "null-acceptable";
    report.preferred_exists.name = "preferred-exists";
    report.input_independence.name = "input-independence";

    // Condition 1: every input contract vector is also an output vector,
    // and the do-nothing transition is acceptable for all inputs.
    for (std::size_t ic = 0; ic < task.input_contract_vectors.size() &&
                             report.null_acceptable.pass; ++ic) {
        const auto oc = task.output_index_of_input(ic);
        if (!oc) {
            report.null_acceptable.pass = false;
            report.null_acceptable.witness =
                "input vector " + render_contract_vector(task.input_contract_vectors[ic]) +
                " is not among the declared outputs";
            break;
        }
        for (std::size_t ip = 0; ip < task.input_party_vectors.size(); ++ip) {
            const Transition null_transition{ip, ic, *oc};
            if (classify_transition(task, null_transition) == TransitionClass::Unacceptable) {
                report.null_acceptable.pass = false;
                report.null_acceptable.witness =
                    "null transition at (ip=" + std::to_string(ip) +
                    ", ic=" + std::to_string(ic) + ") is unacceptable";
                break;
            }
        }
    }

    // Condition 2: for every pair of inputs some preferred output exists.
    for (std::size_t ip = 0; ip < task.input_party_vectors.size() &&
                             report.preferred_exists.pass; ++ip) {
        for (std::size_t ic = 0; ic < task.input_contract_vectors.size(); ++ic) {
            bool found = false;
            for (std::size_t oc = 0; oc < task.output_contract_vectors.size(); ++oc) {
                if (classify_transition(task, {ip, ic, oc}) == TransitionClass::Preferred) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.preferred_exists.pass = false;
                report.preferred_exists.witness = "no preferred transition at (ip=" +
                                                  std::to_string(ip) + ", ic=" +
                                                  std::to_string(ic) + ")";
                break;
            }
        }
    }

    // Condition 3: if two party-input vectors agree on P's entry, P's
    // utility sign at >=0 must be preserved across them.
    const Rational zero(0);
    for (std::size_t ip1 = 0; ip1 < task.input_party_vectors.size() &&
                              report.input_independence.pass; ++ip1) {
        for (std::size_t ip2 = 0; ip2 < task.input_party_vectors.size() &&
                                  report.input_independence.pass; ++ip2) {
            if (ip1 == ip2) {
                continue;
            }
            for (std::size_t p = 0; p < task.party_count() &&
                                    report.input_independence.pass; ++p) {
                if (task.input_party_vectors[ip1][p] != task.input_party_vectors[ip2][p]) {
                    continue;
                }
                for (std::size_t ic = 0; ic < task.input_contract_vectors.size(); ++ic) {
                    for (std::size_t oc = 0; oc < task.output_contract_vectors.size(); ++oc) {
                        const Rational u1 = task.utility_vector({ip1, ic, oc})[p];
                        const Rational u2 = task.utility_vector({ip2, ic, oc})[p];
                        if (u1 >= zero && u2 < zero) {
                            report.input_independence.pass = false;
                            report.input_independence.witness =
                                "party " + task.parties[p].name + " flips negative between ip=" +
                                std::to_string(ip1) + " and ip=" + std::to_string(ip2) +
                                " at (ic=" + std::to_string(ic) + ", oc=" + std::to_string(oc) +
                                ")";
                            break;
                        }
                    }
                    if (!report.input_independence.pass) {
                        break;
                    }
                }
            }
        }
    }
    return report;
}

} // namespace xchain
