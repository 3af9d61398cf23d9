#pragma once

#include <stdexcept>
#include <string>

namespace triconic {

enum class ErrorKind {
    Parse,                  // malformed input file or literal
    Validation,             // singular/duplicate conic, bad field context, violated constraint
    UnsupportedSingularity, // locus signature outside the quasi-homogeneous taxonomy
    DegenerateCoordinates,  // elimination frame not generic; caller retries
    GenericityUnreachable,  // retry budget exhausted
    Precondition,           // caller broke a documented precondition
    Internal,               // cross-check failed; indicates a bug
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace triconic
