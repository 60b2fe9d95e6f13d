#pragma once

#include <stdexcept>
#include <string>

namespace alg {

enum class ErrorKind {
    Syntax,            // formula / file syntax, with position where known
    UnknownSymbol,
    UnboundVariable,
    SignatureMismatch,
    NotAPartialOrder,
    NotCompatible,
    CapExceeded,
    Format,            // malformed algebra / manifest file
    InvalidArgument,
};

class AlgError : public std::runtime_error {
public:
    AlgError(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw AlgError(kind, message);
}

} // namespace alg
