#include "lsg/certificate.hpp"

#include <cmath>

namespace lsg {

bool SignCertificate::holds(double margin) const {
    switch (claimed_sign) {
        case Sign::positive: return expression_value > margin;
        case Sign::negative: return expression_value < -margin;
        case Sign::zero: return std::abs(expression_value) <= margin;
    }
    return false;
}

const char* to_string(Sign s) {
    switch (s) {
        case Sign::positive: return "positive";
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
    }
    return "?";
}

}  // namespace lsg
