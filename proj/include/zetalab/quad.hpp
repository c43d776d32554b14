#pragma once

#include <functional>
#include <span>
#include <utility>

namespace zetalab::quad {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    long evaluations = 0;
    bool converged = false;
    int inner_failures = 0; // nested driver: count of non-converged inner calls
};

// Endpoint behavior the caller knows about.  Algebraic means the integrand
// behaves like (u - lo)^gamma (gamma > -1) at the endpoint; flat means it
// vanishes to infinite order, with flat_cutoff the coordinate below which it
// underflows to exactly 0.
struct SingularityHint {
    enum class Kind { none, algebraic, flat };
    Kind left = Kind::none;
    double left_exponent = 0.0;
    double left_flat_cutoff = 0.0;
    Kind right = Kind::none;
    double right_exponent = 0.0;

    static SingularityHint clean() { return {}; }
    static SingularityHint algebraic_left(double gamma) {
        SingularityHint h;
        h.left = Kind::algebraic;
        h.left_exponent = gamma;
        return h;
    }
    static SingularityHint flat_left(double cutoff) {
        SingularityHint h;
        h.left = Kind::flat;
        h.left_flat_cutoff = cutoff;
        return h;
    }
    static SingularityHint algebraic_right(double gamma) {
        SingularityHint h;
        h.right = Kind::algebraic;
        h.right_exponent = gamma;
        return h;
    }
    SingularityHint& with_algebraic_right(double gamma) {
        right = Kind::algebraic;
        right_exponent = gamma;
        return *this;
    }
};

using Fn = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi].  Converged when the
// accumulated error estimate drops below max(tol, rel_tol * |value|).
// breakpoints seed the initial subdivision (interior transition points the
// caller knows about).
QuadResult adaptive(const Fn& f, double lo, double hi, double tol,
                    std::span<const double> breakpoints = {},
                    double rel_tol = 0.0, long max_evals = 2'000'000);

// Adaptive with endpoint substitutions chosen from the hint.
QuadResult integrate(const Fn& f, double lo, double hi, const SingularityHint& hint,
                     double tol, double rel_tol = 0.0);

// Integral over [lo, inf) via u = lo + t/(1-t).  decay_exponent, when
// given, is the power A with f ~ u^A at infinity; it selects the right-end
// substitution so the mapped integrand has bounded derivative.
QuadResult integrate_semi_infinite(const Fn& f, double lo, double tol,
                                   double decay_exponent = 1.0, double rel_tol = 0.0);

// Iterated 2-D integral: outer adaptive pass over y, each sample an inner
// integrate call at tol/10.  Error estimates propagate additively.
struct NestedSpec {
    std::function<double(double, double)> f; // f(x, y)
    std::function<std::pair<double, double>(double)> x_range;
    double y_lo = 0.0;
    double y_hi = 1.0;
    SingularityHint outer_hint;
    SingularityHint inner_hint;
};
QuadResult integrate_nested(const NestedSpec& spec, double tol, double rel_tol = 0.0);

} // namespace zetalab::quad
