#include "zetalab/limit_model.hpp"

#include <cmath>

namespace zetalab {

double LimitModel::scale_factor(double X) const {
    switch (kind) {
        case Kind::power: return std::pow(X, exponent);
        case Kind::power_times_log: return std::pow(X, exponent) / std::abs(std::log(X));
        case Kind::log_only: return 1.0 / std::abs(std::log(X));
        case Kind::constant: return 1.0;
    }
    return 1.0;
}

std::string LimitModel::kind_name() const {
    switch (kind) {
        case Kind::power: return "power";
        case Kind::power_times_log: return "power_times_log";
        case Kind::log_only: return "log_only";
        case Kind::constant: return "constant";
    }
    return "constant";
}

} // namespace zetalab
