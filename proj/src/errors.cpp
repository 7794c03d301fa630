#include "lsg/errors.hpp"

namespace lsg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SignatureMismatch: return "signature mismatch";
        case ErrorKind::Shape: return "shape error";
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::MalformedRepresentative: return "malformed representative";
        case ErrorKind::ContactViolation: return "contact violation";
        case ErrorKind::SingularAction: return "singular action";
        case ErrorKind::DegenerateConfiguration: return "degenerate configuration";
        case ErrorKind::InconsistentData: return "inconsistent data";
        case ErrorKind::NormalizationFailure: return "normalization failure";
        case ErrorKind::CertificateFailure: return "certificate failure";
        case ErrorKind::Usage: return "usage error";
        case ErrorKind::Io: return "io error";
    }
    return "error";
}

}  // namespace lsg
