#pragma once

#include <stdexcept>
#include <string>

namespace lsg {

enum class ErrorKind {
    SignatureMismatch,
    Shape,
    Domain,
    MalformedRepresentative,
    ContactViolation,
    SingularAction,
    DegenerateConfiguration,
    InconsistentData,
    NormalizationFailure,
    CertificateFailure,
    Usage,
    Io,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw GeometryError(kind, what);
}

}  // namespace lsg
