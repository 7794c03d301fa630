#pragma once

#include <string>

namespace lsg {

enum class Sign { positive, negative, zero };

struct SignCertificate {
    std::string name;
    double expression_value = 0.0;
    Sign claimed_sign = Sign::positive;

    bool holds(double margin = 0.0) const;
};

const char* to_string(Sign s);

}  // namespace lsg
