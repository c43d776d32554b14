#include "zetalab/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "numutil.hpp"
#include "zetalab/quad.hpp"

namespace zetalab::constants {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Stable integrand v^A (log v)^k e_{p,q}(v), assembled in log space.
double moment_integrand(double A, int k, const flatcore::FlatParams& fp, double v) {
    if (v <= 0.0) return 0.0;
    double lv = std::log(v);
    double t = A * lv - 1.0 / (fp.q * std::pow(v, fp.p));
    if (t < detail::kLogZero) return 0.0;
    return std::exp(t) * ipow(lv, k);
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0 && x < 40.0)) throw std::domain_error("gamma_fn: argument outside (0, 40)");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double flat_moment_oracle(double A, const flatcore::FlatParams& fp) {
    if (!(A < -1.0)) throw std::domain_error("flat_moment_oracle: requires A < -1");
    double s = -(A + 1.0) / fp.p; // substitution t = 1/(q v^p) gives Gamma(s)
    return (1.0 / fp.p) * std::pow(static_cast<double>(fp.q), s) * gamma_fn(s);
}

double const_flat_moment(double A, int k, const flatcore::FlatParams& fp) {
    if (!(A < -1.0)) throw std::domain_error("const_flat_moment: divergent, requires A < -1");
    const double tol = 1e-13;
    auto f = [&](double v) { return moment_integrand(A, k, fp, v); };

    double cutoff = flatcore::flat_underflow_point(fp, 1.0);
    quad::QuadResult head =
        quad::integrate(f, 0.0, 1.0, quad::SingularityHint::flat_left(cutoff), tol, 1e-12);
    quad::QuadResult tail = quad::integrate_semi_infinite(f, 1.0, tol, A, 1e-12);
    double value = head.value + tail.value;
    if (!head.converged || !tail.converged)
        throw std::runtime_error("const_flat_moment: quadrature did not converge");

    if (k == 0) {
        double oracle = flat_moment_oracle(A, fp);
        if (!detail::close_rel(value, oracle, 1e-8))
            throw std::runtime_error("const_flat_moment: quadrature " + std::to_string(value) +
                                     " disagrees with Gamma oracle " + std::to_string(oracle));
    }
    return value;
}

double const_Chat(int a, int b, const flatcore::FlatParams& fp) {
    double ab = static_cast<double>(a) / b;
    if (!(fp.p > 1.0 - ab)) throw std::domain_error("const_Chat: divergent, requires p > 1 - a/b");
    const double tol = 1e-13;
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        double lx = std::log(x);
        // 1 - e^{-1/(q x^p)} via expm1 to avoid cancellation for large x.
        double one_minus_e = -std::expm1(-1.0 / (fp.q * std::pow(x, fp.p)));
        return std::exp(-ab * lx) * one_minus_e;
    };
    quad::QuadResult head =
        quad::integrate(f, 0.0, 1.0, quad::SingularityHint::algebraic_left(-ab), tol, 1e-12);
    quad::QuadResult tail = quad::integrate_semi_infinite(f, 1.0, tol, -ab - fp.p, 1e-12);
    double value = head.value + tail.value;
    if (!head.converged || !tail.converged)
        throw std::runtime_error("const_Chat: quadrature did not converge");

    double s = 1.0 - (1.0 - ab) / fp.p;
    double oracle = std::pow(static_cast<double>(fp.q), -(1.0 - ab) / fp.p) * gamma_fn(s) /
                    (1.0 - ab);
    if (!detail::close_rel(value, oracle, 1e-8))
        throw std::runtime_error("const_Chat: quadrature " + std::to_string(value) +
                                 " disagrees with Gamma oracle " + std::to_string(oracle));
    return value;
}

LogConstants log_constants(double r, const flatcore::FlatParams& fp) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("log_constants: r must lie in (0,1)");
    const double tol = 1e-13;
    double cutoff = flatcore::flat_underflow_point(fp, 1.0);

    auto head0 = quad::integrate([&](double v) { return moment_integrand(-1.0, 0, fp, v); }, 0.0,
                                 1.0, quad::SingularityHint::flat_left(cutoff), tol, 1e-12);
    auto head1 = quad::integrate([&](double v) { return moment_integrand(-1.0, 1, fp, v); }, 0.0,
                                 1.0, quad::SingularityHint::flat_left(cutoff), tol, 1e-12);
    // e(v) - 1 = expm1(-1/(q v^p)) decays like v^{-p}.
    auto tail_f = [&](double v, int k) {
        double lv = std::log(v);
        return std::expm1(-1.0 / (fp.q * std::pow(v, fp.p))) / v * ipow(lv, k);
    };
    auto tail0 = quad::integrate_semi_infinite([&](double v) { return tail_f(v, 0); }, 1.0, tol,
                                               -1.0 - fp.p, 1e-12);
    auto tail1 = quad::integrate_semi_infinite([&](double v) { return tail_f(v, 1); }, 1.0, tol,
                                               -1.0 - fp.p, 1e-12);
    if (!(head0.converged && head1.converged && tail0.converged && tail1.converged))
        throw std::runtime_error("log_constants: quadrature did not converge");

    double lr = std::log(r);
    return {lr + head0.value + tail0.value, lr * lr + head1.value + tail1.value};
}

double C_nj_closed_form(double A, double r, int n, int j) {
    double sum = 0.0;
    double lr = std::log(r);
    for (int k = 0; k <= n - j; ++k) {
        double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * ipow(lr, n - j - k) /
               (factorial(n - j - k) * ipow(A + 1.0, k + 1));
    }
    return std::pow(r, A + 1.0) * factorial(n) / factorial(j) * sum;
}

ExpansionCoefficients expansion_coeffs(double A, double B, double r,
                                       const flatcore::FlatParams& fp, int N) {
    if (!(A < -1.0)) throw std::domain_error("expansion_coeffs: requires A < -1");
    if (N < 0) throw std::invalid_argument("expansion_coeffs: N must be nonnegative");
    ExpansionCoefficients out;

    std::vector<double> moments(N + 1);
    for (int k = 0; k <= N; ++k) moments[k] = const_flat_moment(A, k, fp);

    out.a_ml.resize(N + 1);
    for (int m = 0; m <= N; ++m) {
        out.a_ml[m].resize(m + 1);
        for (int l = 0; l <= m; ++l) {
            out.a_ml[m][l] = ipow(B, m) /
                             (factorial(l) * factorial(m - l) * std::pow(fp.p, l)) *
                             moments[m - l];
        }
    }
    out.C_nj.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        out.C_nj[n].resize(n + 1);
        for (int j = 0; j <= n; ++j) out.C_nj[n][j] = C_nj_closed_form(A, r, n, j);
    }
    LogConstants lc = log_constants(r, fp);
    out.d0 = lc.d0;
    out.d1 = lc.d1;
    return out;
}

} // namespace zetalab::constants
