#include "zetalab/flatcore.hpp"

#include <cmath>
#include <stdexcept>

#include "numutil.hpp"

namespace zetalab::flatcore {

FlatParams::FlatParams(double p_, int q_) : p(p_), q(q_) {
    if (!(p > 0.0)) throw std::invalid_argument("FlatParams: p must be positive");
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("FlatParams: q must be an even integer >= 2");
}

BoxDomain::BoxDomain(double r1_, double r2_) : r1(r1_), r2(r2_) {
    if (!(r1 > 0.0 && r1 < 1.0 && r2 > 0.0 && r2 < 1.0))
        throw std::invalid_argument("BoxDomain: r1, r2 must lie in (0,1)");
}

double eval_e(const FlatParams& fp, double u) {
    if (u < 0.0) throw std::invalid_argument("eval_e: u must be nonnegative");
    if (u == 0.0) return 0.0;
    return detail::exp_or_zero(-1.0 / (fp.q * std::pow(u, fp.p)));
}

double log_e(const FlatParams& fp, double u) {
    if (u <= 0.0) return -detail::kInf;
    return -1.0 / (fp.q * std::pow(u, fp.p));
}

double inv_e(const FlatParams& fp, double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("inv_e: x must lie in (0,1)");
    return std::pow(-static_cast<double>(fp.q) * std::log(x), -1.0 / fp.p);
}

double log_E(const FlatParams& fp, double delta, double y) {
    if (y <= 0.0) return -detail::kInf;
    return -delta * std::log(y) - 1.0 / (fp.q * std::pow(y, fp.p));
}

double eval_E(const FlatParams& fp, double delta, double y) {
    if (y < 0.0) throw std::invalid_argument("eval_E: y must be nonnegative");
    if (delta <= 0.0) throw std::invalid_argument("eval_E: delta must be positive");
    if (y == 0.0) return 0.0;
    return detail::exp_or_zero(log_E(fp, delta, y));
}

double inv_E(const FlatParams& fp, double delta, double r2, double x) {
    double peak = std::pow(fp.p / (fp.q * delta), 1.0 / fp.p);
    if (!(r2 < peak))
        throw std::invalid_argument("inv_E: r2 violates r2 < (p/(q delta))^{1/p}");
    if (x < 0.0) throw std::domain_error("inv_E: x must be nonnegative");
    if (x == 0.0) return 0.0;
    double logx = std::log(x);
    if (logx >= log_E(fp, delta, r2)) return r2;

    // g(u) = log E(u) - log x is increasing on (0, r2); bracket then bisect.
    auto g = [&](double u) { return log_E(fp, delta, u) - logx; };
    double hi = r2;
    double lo = r2 * 0.5;
    int guard = 0;
    while (g(lo) > 0.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 5000) throw std::runtime_error("inv_E: bracketing failed");
    }
    while (hi - lo > 1e-8) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? hi : lo) = mid;
    }
    // Newton polish; E' vanishes at 0, so the iterates stay clamped to the
    // bisection bracket.
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 10; ++it) {
        double gu = g(u);
        double dg = -delta / u + fp.p / (fp.q * std::pow(u, fp.p + 1.0));
        double step = gu / dg;
        double next = u - step;
        if (!(next > lo * 0.5 && next < hi * 2.0) || !std::isfinite(next)) break;
        if (std::abs(step) <= 1e-15 * u) { u = next; break; }
        u = next;
    }
    return u;
}

ClampedMaps clamped_maps(const FlatParams& fp, double delta, double r2, double x) {
    if (x < 0.0) throw std::domain_error("clamped_maps: x must be nonnegative");
    ClampedMaps out{0.0, 0.0};
    if (x == 0.0) return out;
    double log_er2 = log_e(fp, r2);
    double logx = std::log(x);
    out.rho = (logx >= log_er2) ? r2 : inv_e(fp, x);
    out.tau = inv_E(fp, delta, r2, x);
    return out;
}

AdmissibleBounds admissible_params(int a, int b, int alpha, const FlatParams& fp) {
    double p = fp.p;
    double q = fp.q;
    double moment_term = (static_cast<double>(b) * (alpha + 1) / a + p - 1.0) / q;
    double delta_min = std::max((p + 1.0) / q, moment_term);

    double r2_a = std::pow(p / (p + 1.0), 1.0 / p);
    double r2_b = std::pow(p / (static_cast<double>(b) * (alpha + 1) / a + p - 1.0), 1.0 / p);
    double r2_c = std::pow(p / (static_cast<double>(b) / a + 2.0 * p - 1.0), 1.0 / p);
    return {delta_min, std::min({r2_a, r2_b, r2_c})};
}

double flat_underflow_point(const FlatParams& fp, double X) {
    // e_{p,q}(u)^X = exp(-X/(q u^p)) underflows below this u.
    return std::pow(X / (fp.q * (-detail::kLogZero)), 1.0 / fp.p);
}

} // namespace zetalab::flatcore
