#include "pdil/errors.hpp"

namespace pdil {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Precondition: return "PreconditionViolated";
    case ErrorKind::NonClosingScalingSet: return "NonClosingScalingSet";
    case ErrorKind::InvalidCompletion: return "InvalidCompletion";
    case ErrorKind::NotSubordinated: return "NotSubordinated";
    case ErrorKind::Unpartitionable: return "Unpartitionable";
    case ErrorKind::UnresolvedPath: return "UnresolvedPath";
    case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

} // namespace pdil
