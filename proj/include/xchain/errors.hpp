#pragma once

#include <stdexcept>
#include <string>

namespace xchain {

/// Base class for all model-level errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A state id was used that is not a member of the automaton's state set.
class UnknownStateError : public Error {
public:
    using Error::Error;
};

/// Two automata failed one of the four composability conditions.
class ComposabilityError : public Error {
public:
    using Error::Error;
};

/// A transition or lookup fell outside a task's declared vector sets.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A strategy tried to send a value it cannot produce. This signals a
/// modeling bug, not a legal deviation: even Byzantine parties cannot
/// forge hash preimages.
class KnowledgeError : public Error {
public:
    using Error::Error;
};

/// A simulated execution ended in a contract state vector that the task
/// does not declare as a possible output.
class ModelMismatchError : public Error {
public:
    using Error::Error;
};

/// Scenario file problem, with position information when available.
class ScenarioError : public Error {
public:
    ScenarioError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
    explicit ScenarioError(const std::string& what) : Error(what), line(0), column(0) {}

    int line;
    int column;
};

} // namespace xchain
