#pragma once

#include <string>

namespace zetalab {

// The scaling law a quantity follows as X -> 0+, where X is a*sigma+1 or
// b*sigma+1 depending on which critical point is approached.
//
//   power:           X^{exponent} * value -> limit
//   power_times_log: X^{exponent} |log X|^{-1} * value -> limit
//   log_only:        |log X|^{-1} * value -> limit
//   constant:        value -> limit
struct LimitModel {
    enum class Kind { power, power_times_log, log_only, constant };
    enum class Variable { aX, bX };

    Kind kind = Kind::constant;
    double exponent = 0.0;
    Variable variable = Variable::aX;

    double scale_factor(double X) const;
    std::string kind_name() const;
};

} // namespace zetalab
