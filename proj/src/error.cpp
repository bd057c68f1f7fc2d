#include <treefit/error.hpp>

namespace treefit {

auto error_kind_name(ErrorKind kind) -> const char *
{
    switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::IsEscapeVertex: return "IsEscapeVertex";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotEnoughExpanding: return "NotEnoughExpanding";
    case ErrorKind::TreeIsSeparable: return "TreeIsSeparable";
    case ErrorKind::InvalidThreePartition: return "InvalidThreePartition";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
    kind_(kind),
    message_(message)
{
}

void fail(ErrorKind kind, const std::string & message)
{
    throw Error(kind, message);
}

void panic(const std::string & message)
{
    throw InternalError("internal invariant violated: " + message);
}

}
