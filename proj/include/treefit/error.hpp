#pragma once

#include <stdexcept>
#include <string>

namespace treefit {

enum class ErrorKind {
    EmptyGraph,
    Disconnected,
    IsEscapeVertex,
    TooSmall,
    HypothesisNotMet,
    PreconditionViolated,
    NotEnoughExpanding,
    TreeIsSeparable,
    InvalidThreePartition,
    InvalidPartition,
    BudgetExceeded,
    Parse,
    InvalidArgument
};

auto error_kind_name(ErrorKind kind) -> const char *;

// Input or hypothesis errors that a caller is expected to handle.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message);

    auto kind() const -> ErrorKind { return kind_; }
    // what() without the kind prefix
    auto message() const -> const std::string & { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

// Raised when a step that cannot fail under its checked hypotheses fails.
// Reaching one of these is an implementation bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] void fail(ErrorKind kind, const std::string & message);
[[noreturn]] void panic(const std::string & message);

}
