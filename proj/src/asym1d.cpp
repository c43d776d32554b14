#include "zetalab/asym1d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "numutil.hpp"
#include "zetalab/constants.hpp"

namespace zetalab::asym1d {

namespace {

// Snap a floating ratio to an integer only when it is unambiguous; exact
// rationals take precedence and genuinely irrational p stays non-integer.
bool near_integer(double x, long long& out) {
    double r = std::round(x);
    if (std::abs(x - r) < 1e-12) {
        out = static_cast<long long>(r);
        return true;
    }
    return false;
}

struct Reduced {
    double A_L, B_L, r_L;
    flatcore::FlatParams fp_L;
};

// Substituting v = u^p turns the general-p integral into the p = 1 lemma.
Reduced reduce_to_p1(const OneDimIntegralSpec& s) {
    return {(s.A + 1.0) / s.fp.p - 1.0, s.B / s.fp.p, std::pow(s.r, s.fp.p),
            flatcore::FlatParams{1.0, s.fp.q}};
}

} // namespace

ConvergenceClass OneDimIntegralSpec::classify() const {
    bool a_is_minus1 = A_rational ? (*A_rational == Rational{-1}) : (A == -1.0);
    if (a_is_minus1) return ConvergenceClass::log_case;
    if (A > -1.0) return ConvergenceClass::constant_case;

    if (A_rational && p_rational) {
        Rational ratio = (*A_rational + Rational{1}) / *p_rational;
        return ratio.is_integer() ? ConvergenceClass::series_int
                                  : ConvergenceClass::series_nonint;
    }
    long long dummy;
    double ratio = (A + 1.0) / fp.p;
    return near_integer(ratio, dummy) ? ConvergenceClass::series_int
                                      : ConvergenceClass::series_nonint;
}

double PowerLogExpansion::evaluate(double X) const {
    double lx = std::log(X);
    double sum = 0.0;
    for (const auto& t : terms) {
        double lp = 1.0;
        for (int i = 0; i < t.log_power; ++i) lp *= lx;
        sum += t.coeff * std::pow(X, t.x_power) * lp;
    }
    return sum;
}

quad::QuadResult eval_K_direct(const OneDimIntegralSpec& spec, double X) {
    if (!(X > 0.0)) throw std::domain_error("eval_K_direct: X must be positive");
    const double p = spec.fp.p;
    const double q = spec.fp.q;
    auto f = [&, X](double u) -> double {
        if (u <= 0.0) return 0.0;
        double t = (spec.A + spec.B * X) * std::log(u) - X / (q * std::pow(u, p));
        return detail::exp_or_zero(t);
    };
    double cutoff = flatcore::flat_underflow_point(spec.fp, X);
    return quad::integrate(f, 0.0, spec.r, quad::SingularityHint::flat_left(cutoff), 1e-13,
                           1e-11);
}

namespace {

void push_term(std::vector<PowerLogTerm>& terms, double coeff, double x_power, int log_power) {
    for (auto& t : terms) {
        if (t.log_power == log_power && std::abs(t.x_power - x_power) < 1e-14) {
            t.coeff += coeff;
            return;
        }
    }
    terms.push_back({coeff, x_power, log_power});
}

} // namespace

PowerLogExpansion expand_K(const OneDimIntegralSpec& spec, int depth) {
    PowerLogExpansion out;
    const double p = spec.fp.p;
    Reduced red = reduce_to_p1(spec);
    ConvergenceClass cls = spec.classify();

    switch (cls) {
        case ConvergenceClass::constant_case: {
            if (depth > 0) throw std::invalid_argument("expand_K: case (iv) has no series levels");
            push_term(out.terms, std::pow(spec.r, spec.A + 1.0) / (spec.A + 1.0), 0.0, 0);
            out.remainder_order = std::min((spec.A + 1.0) / p, 1.0);
            break;
        }
        case ConvergenceClass::log_case: {
            if (depth > 1) throw std::invalid_argument("expand_K: case (iii) truncation is fixed");
            auto lc = constants::log_constants(red.r_L, red.fp_L);
            push_term(out.terms, -1.0 / p, 0.0, 1);
            push_term(out.terms, lc.d0 / p, 0.0, 0);
            push_term(out.terms, red.B_L * (lc.d0 - 2.0 * std::log(red.r_L)) / p, 1.0, 1);
            push_term(out.terms, (1.0 / (red.fp_L.q * red.r_L) + red.B_L * lc.d1) / p, 1.0, 0);
            out.remainder_order = 2.0;
            break;
        }
        case ConvergenceClass::series_nonint: {
            int N = static_cast<int>(std::floor(-red.A_L));
            if (spec.A_rational && spec.p_rational) {
                Rational mAL = Rational{0} - ((*spec.A_rational + Rational{1}) / *spec.p_rational
                                              - Rational{1});
                // N = max{m in NN : m < -A_L}
                N = static_cast<int>(std::floor(mAL.value()));
            }
            int n_use = depth < 0 ? N : depth;
            if (n_use > N) throw std::invalid_argument("expand_K: depth exceeds the lemma's N");
            auto co = constants::expansion_coeffs(red.A_L, red.B_L, red.r_L, red.fp_L, N);
            for (int m = 0; m < n_use; ++m)
                for (int l = 0; l <= m; ++l)
                    push_term(out.terms, co.a_ml[m][l] / p, red.A_L + m + 1.0, l);
            if (n_use == N) {
                push_term(out.terms, std::pow(spec.r, spec.A + 1.0) / (spec.A + 1.0), 0.0, 0);
                for (int l = 0; l <= N; ++l)
                    push_term(out.terms, co.a_ml[N][l] / p, red.A_L + N + 1.0, l);
                out.remainder_order = 1.0;
            } else {
                out.remainder_order = red.A_L + n_use + 1.0;
            }
            break;
        }
        case ConvergenceClass::series_int: {
            int N = static_cast<int>(std::llround(-red.A_L)) - 1;
            int n_use = depth < 0 ? N : depth;
            if (n_use > N) throw std::invalid_argument("expand_K: depth exceeds the lemma's N");
            auto co = constants::expansion_coeffs(red.A_L, red.B_L, red.r_L, red.fp_L, N + 1);
            for (int m = 0; m < n_use; ++m)
                for (int l = 0; l <= m; ++l)
                    push_term(out.terms, co.a_ml[m][l] / p, red.A_L + m + 1.0, l);
            if (n_use == N) {
                for (int l = 0; l <= N; ++l)
                    push_term(out.terms, co.a_ml[N][l] / p, 0.0, l);
                push_term(out.terms, std::pow(spec.r, spec.A + 1.0) / (spec.A + 1.0), 0.0, 0);
                for (int l = 1; l <= N + 1; ++l)
                    push_term(out.terms, co.a_ml[N + 1][l] / p, 1.0, l);
                out.remainder_order = 1.0;
            } else {
                out.remainder_order = red.A_L + n_use + 1.0;
            }
            break;
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.x_power != b.x_power) return a.x_power < b.x_power;
        return a.log_power > b.log_power;
    });
    return out;
}

quad::QuadResult eval_Ktilde_direct(const OneDimIntegralSpec& spec, double X) {
    if (!(X > 0.0)) throw std::domain_error("eval_Ktilde_direct: X must be positive");
    if (!(spec.A > -1.0))
        throw std::domain_error("eval_Ktilde_direct: direct evaluation needs A > -1");
    const double p = spec.fp.p;
    const double q = spec.fp.q;
    auto f = [&, X](double u) -> double {
        if (u <= 0.0) return 0.0;
        double pw = (spec.A + spec.B * X) * std::log(u);
        double one_minus_eX = -std::expm1(-X / (q * std::pow(u, p)));
        return detail::exp_or_zero(pw) * one_minus_eX;
    };
    return quad::integrate(f, 0.0, spec.r,
                           quad::SingularityHint::algebraic_left(spec.A + spec.B * X), 1e-13,
                           1e-11);
}

KtildeLimit limit_Ktilde(const OneDimIntegralSpec& spec) {
    const double p = spec.fp.p;
    const double q = spec.fp.q;
    if (!(spec.A > -1.0)) throw std::domain_error("limit_Ktilde: requires A > -1");

    // Exact comparison of A against p-1 when rationals are available.
    int cmp; // -1: A < p-1, 0: equal, 1: A > p-1
    if (spec.A_rational && spec.p_rational) {
        Rational diff = *spec.A_rational - (*spec.p_rational - Rational{1});
        cmp = diff.num == 0 ? 0 : (diff.num < 0 ? -1 : 1);
    } else {
        double diff = spec.A - (p - 1.0);
        cmp = std::abs(diff) < 1e-12 ? 0 : (diff < 0 ? -1 : 1);
    }

    KtildeLimit out;
    if (cmp < 0) {
        out.model.kind = LimitModel::Kind::power;
        out.model.exponent = -(spec.A + 1.0) / p; // X^{-(A+1)/p} Ktilde -> limit
        auto f = [&](double v) {
            if (v <= 0.0) return 0.0;
            return std::exp(spec.A * std::log(v)) *
                   (-std::expm1(-1.0 / (q * std::pow(v, p))));
        };
        auto head = quad::integrate(f, 0.0, 1.0, quad::SingularityHint::algebraic_left(spec.A),
                                    1e-13, 1e-11);
        auto tail = quad::integrate_semi_infinite(f, 1.0, 1e-13, spec.A - p, 1e-11);
        if (!head.converged || !tail.converged)
            throw std::runtime_error("limit_Ktilde: quadrature did not converge");
        out.limit = head.value + tail.value;
    } else if (cmp == 0) {
        out.model.kind = LimitModel::Kind::power_times_log;
        out.model.exponent = -1.0; // X^{-1} |log X|^{-1} Ktilde -> 1/(p q)
        out.limit = 1.0 / (p * q);
    } else {
        out.model.kind = LimitModel::Kind::power;
        out.model.exponent = -1.0; // X^{-1} Ktilde -> r^{A-p+1}/(q (A-p+1))
        out.limit = std::pow(spec.r, spec.A - p + 1.0) / (q * (spec.A - p + 1.0));
    }
    return out;
}

double continue_monomial_weight(double mu, const std::function<double(double)>& g,
                                std::span<const double> taylor_coeffs, double T, int J,
                                double tol) {
    if (J < 0 || static_cast<size_t>(J) > taylor_coeffs.size())
        throw std::invalid_argument("continue_monomial_weight: J exceeds supplied Taylor data");
    if (!(mu > -J - 1.0))
        throw std::domain_error("continue_monomial_weight: mu below the continued range");
    double closed = 0.0;
    for (int j = 0; j < J; ++j) {
        double denom = mu + j + 1.0;
        if (std::abs(denom) < 1e-12)
            throw std::domain_error("continue_monomial_weight: pole at mu = -" +
                                    std::to_string(j + 1));
        closed += taylor_coeffs[j] * std::pow(T, denom) / denom;
    }
    auto rem = [&](double u) -> double {
        double poly = 0.0, up = 1.0;
        for (int j = 0; j < J; ++j) {
            poly += taylor_coeffs[j] * up;
            up *= u;
        }
        return std::pow(u, mu) * (g(u) - poly);
    };
    auto r = quad::integrate(rem, 0.0, T, quad::SingularityHint::algebraic_left(mu + J), tol,
                             tol);
    if (!r.converged)
        throw std::runtime_error("continue_monomial_weight: quadrature did not converge");
    return closed + r.value;
}

} // namespace zetalab::asym1d
