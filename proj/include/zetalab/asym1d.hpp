#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zetalab/flatcore.hpp"
#include "zetalab/limit_model.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/rational.hpp"

namespace zetalab::asym1d {

enum class KKind { K, Ktilde };

// Which expansion case the pair (A, p) lands in.  The split is discontinuous,
// so it is decided with exact rationals when they are supplied.
enum class ConvergenceClass {
    series_nonint, // A < -1, (A+1)/p not an integer
    series_int,    // A < -1, (A+1)/p an integer
    log_case,      // A = -1
    constant_case  // A > -1
};

struct OneDimIntegralSpec {
    double A = 0.0;
    double B = 0.0;
    double r = 0.5;
    flatcore::FlatParams fp{1.0, 2};
    KKind kind = KKind::K;
    std::optional<Rational> A_rational;
    std::optional<Rational> p_rational;

    ConvergenceClass classify() const;
};

struct PowerLogTerm {
    double coeff;
    double x_power;
    int log_power;
};

// Finite sum of coeff * X^{x_power} (log X)^{log_power}, terms sorted by
// asymptotic dominance as X -> 0+, plus the O(X^{remainder_order}) exponent.
struct PowerLogExpansion {
    std::vector<PowerLogTerm> terms;
    double remainder_order = 1.0;
    double evaluate(double X) const;
};

// K(X) = Int_0^r u^{A+BX} e_{p,q}(u)^X du by quadrature with a flat-left hint.
quad::QuadResult eval_K_direct(const OneDimIntegralSpec& spec, double X);

// Truncated power-log expansion of K(X); depth < 0 requests the full lemma
// truncation, otherwise depth is the number of series levels and must not
// exceed the lemma's N.
PowerLogExpansion expand_K(const OneDimIntegralSpec& spec, int depth = -1);

// Ktilde(X) = Int_0^r u^{A+BX} (1 - e_{p,q}(u)^X) du, A > -1.
quad::QuadResult eval_Ktilde_direct(const OneDimIntegralSpec& spec, double X);

// Predicted scaling and limit constant of Ktilde as X -> 0+:
//   -1 < A < p-1 : X^{(A+1)/p},  limit Int_0^inf v^A (1 - e(v)) dv
//   A = p-1      : X |log X|,    limit 1/(p q)
//   A > p-1      : X,            limit r^{A-p+1} / (q (A-p+1))
struct KtildeLimit {
    LimitModel model;
    double limit;
};
KtildeLimit limit_Ktilde(const OneDimIntegralSpec& spec);

// Analytic continuation of Int_0^T u^mu g(u) du in mu by Taylor subtraction:
// the first J Taylor coefficients of g at 0 are integrated in closed form and
// the subtracted remainder by quadrature.  Valid for mu > -J-1 off the poles
// mu = -1, ..., -J.
double continue_monomial_weight(double mu, const std::function<double(double)>& g,
                                std::span<const double> taylor_coeffs, double T, int J,
                                double tol = 1e-12);

} // namespace zetalab::asym1d
