#pragma once

#include <utility>

namespace zetalab::flatcore {

// Parameters of the flat exponential e_{p,q}(u) = exp(-1/(q u^p)).
struct FlatParams {
    double p;
    int q;
    FlatParams(double p_, int q_);
};

struct BoxDomain {
    double r1;
    double r2;
    BoxDomain(double r1_, double r2_);
};

// e_{p,q}(u); exactly 0 at u = 0 and wherever the exponent underflows.
double eval_e(const FlatParams& fp, double u);

// log e_{p,q}(u) = -1/(q u^p) for u > 0; -inf at 0.  Safe where eval_e underflows.
double log_e(const FlatParams& fp, double u);

// e^{-1}(x) = (-q log x)^{-1/p} on (0,1).
double inv_e(const FlatParams& fp, double x);

// E(y) = y^{-delta} e_{p,q}(y); 0 at y = 0.
double eval_E(const FlatParams& fp, double delta, double y);
double log_E(const FlatParams& fp, double delta, double y);

// Unique root of E(u) = x in [0, r2] for x < E(r2); r2 for x >= E(r2).
// Requires r2 < (p/(q delta))^{1/p} so E is increasing on the bracket.
double inv_E(const FlatParams& fp, double delta, double r2, double x);

// rho = e^{-1} clamped at r2, tau = E^{-1} clamped at r2; tau <= rho <= r2.
struct ClampedMaps {
    double rho;
    double tau;
};
ClampedMaps clamped_maps(const FlatParams& fp, double delta, double r2, double x);

// Strict lower bound for delta and strict upper bound for r2 so that the
// region decomposition and its integration by parts stay valid for the
// (a, b, alpha) moment.  r2_max also honors the lambda-split variant of the
// bound, which is the tighter of the two in practice.
struct AdmissibleBounds {
    double delta_min;
    double r2_max;
};
AdmissibleBounds admissible_params(int a, int b, int alpha, const FlatParams& fp);

// u below which e_{p,q}(u)^X evaluates to exactly 0 in double precision.
double flat_underflow_point(const FlatParams& fp, double X);

} // namespace zetalab::flatcore
