#include "zetalab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "numutil.hpp"

namespace zetalab::quad {

namespace {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 abscissae/weights).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// Gauss-7 weights for the odd-index Kronrod nodes (1, 3, 5) and the center.
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
    int depth;
};

struct SegmentCmp {
    bool operator()(const Segment& x, const Segment& y) const { return x.err < y.err; }
};

// One GK15 application; err = |K15 - G7| per the pair rule.
bool gk15(const Fn& f, double a, double b, double& value, double& err, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fk[15];
    bool finite = true;
    for (int i = 0; i < 7; ++i) {
        double x = h * kKronrodNodes[i];
        fk[2 * i] = f(c - x);
        fk[2 * i + 1] = f(c + x);
    }
    fk[14] = f(c);
    evals += 15;
    double kron = kKronrodWeights[7] * fk[14];
    for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fk[2 * i] + fk[2 * i + 1]);
    double gauss = kGaussWeights[3] * fk[14];
    for (int i = 0; i < 3; ++i) {
        int j = 2 * i + 1; // Kronrod indices 1, 3, 5 are the Gauss-7 nodes
        gauss += kGaussWeights[i] * (fk[2 * j] + fk[2 * j + 1]);
    }
    for (int i = 0; i < 15 && finite; ++i) finite = std::isfinite(fk[i]);
    value = kron * h;
    err = std::abs((kron - gauss) * h);
    if (!finite || !std::isfinite(value) || !std::isfinite(err)) {
        // Large finite sentinel keeps the running totals arithmetic sane.
        value = 0.0;
        err = 1e300;
        finite = false;
    }
    return finite;
}

} // namespace

QuadResult adaptive(const Fn& f, double lo, double hi, double tol,
                    std::span<const double> breakpoints, double rel_tol, long max_evals) {
    QuadResult res;
    if (!(hi > lo)) {
        res.converged = true;
        return res;
    }

    std::vector<double> pts{lo};
    for (double b : breakpoints)
        if (b > lo && b < hi) pts.push_back(b);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<Segment, std::vector<Segment>, SegmentCmp> heap;
    double total_val = 0.0, total_err = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Segment s{pts[i], pts[i + 1], 0.0, 0.0, 0};
        gk15(f, s.a, s.b, s.value, s.err, res.evaluations);
        total_val += s.value;
        total_err += s.err;
        heap.push(s);
    }

    auto good_enough = [&]() {
        return total_err <= std::max(tol, rel_tol * std::abs(total_val));
    };

    const double width_floor = 1e-15 * (std::abs(lo) + std::abs(hi) + 1.0);
    while (!good_enough() && !heap.empty() && res.evaluations < max_evals) {
        Segment s = heap.top();
        heap.pop();
        if (s.depth >= 60 || (s.b - s.a) < width_floor) {
            continue; // exhausted; its value/err contribution stays counted
        }
        total_val -= s.value;
        total_err -= s.err;
        double mid = 0.5 * (s.a + s.b);
        Segment l{s.a, mid, 0.0, 0.0, s.depth + 1};
        Segment r{mid, s.b, 0.0, 0.0, s.depth + 1};
        gk15(f, l.a, l.b, l.value, l.err, res.evaluations);
        gk15(f, r.a, r.b, r.value, r.err, res.evaluations);
        total_val += l.value + r.value;
        total_err += l.err + r.err;
        heap.push(l);
        heap.push(r);
    }
    res.value = total_val;
    res.abs_err = total_err;
    res.converged = good_enough();
    return res;
}

namespace {

// u = lo + t^k pushes nodes toward an algebraic left endpoint.
QuadResult left_power_transform(const Fn& f, double lo, double hi, double gamma, double tol,
                                double rel_tol) {
    int k = std::clamp(static_cast<int>(std::ceil(3.0 / (gamma + 1.0))), 2, 60);
    double T = std::pow(hi - lo, 1.0 / k);
    auto g = [&, k](double t) -> double {
        double w = std::pow(t, k - 1);
        if (w < 1e-280) return 0.0; // true transformed integrand tends to 0 here
        double u = lo + t * w;
        if (u <= lo) return 0.0;
        double fu = f(u);
        return k * w * fu;
    };
    return adaptive(g, 0.0, T, tol, {}, rel_tol);
}

QuadResult right_power_transform(const Fn& f, double lo, double hi, double gamma, double tol,
                                 double rel_tol) {
    int k = std::clamp(static_cast<int>(std::ceil(3.0 / (gamma + 1.0))), 2, 60);
    double T = std::pow(hi - lo, 1.0 / k);
    auto g = [&, k](double t) -> double {
        double w = std::pow(t, k - 1);
        if (w < 1e-280) return 0.0;
        double u = hi - t * w;
        if (u >= hi) return 0.0;
        double fu = f(u);
        return k * w * fu;
    };
    return adaptive(g, 0.0, T, tol, {}, rel_tol);
}

// u = lo + e^v spreads a flat left endpoint; integration starts at the
// caller-declared underflow cutoff, below which the integrand is exactly 0.
QuadResult left_flat_transform(const Fn& f, double lo, double hi, double cutoff, double tol,
                               double rel_tol) {
    double width = hi - lo;
    double start = std::max(cutoff - lo, width * 1e-250);
    if (start >= width) {
        QuadResult r;
        r.converged = true;
        return r;
    }
    auto g = [&](double v) -> double {
        double w = std::exp(v);
        double u = lo + w;
        if (u <= lo || u >= hi) return 0.0;
        return w * f(u);
    };
    return adaptive(g, std::log(start), std::log(width), tol, {}, rel_tol);
}

void accumulate(QuadResult& acc, const QuadResult& piece) {
    acc.value += piece.value;
    acc.abs_err += piece.abs_err;
    acc.evaluations += piece.evaluations;
    acc.converged = acc.converged && piece.converged;
}

} // namespace

QuadResult integrate(const Fn& f, double lo, double hi, const SingularityHint& hint, double tol,
                     double rel_tol) {
    using K = SingularityHint::Kind;
    QuadResult res;
    res.converged = true;
    if (!(hi > lo)) return res;

    bool left_special = hint.left != K::none &&
                        !(hint.left == K::algebraic && hint.left_exponent >= 0.0 &&
                          hint.left_exponent == std::floor(hint.left_exponent));
    bool right_special = hint.right != K::none &&
                         !(hint.right == K::algebraic && hint.right_exponent >= 0.0 &&
                           hint.right_exponent == std::floor(hint.right_exponent));

    double split = 0.5 * (lo + hi);
    double piece_tol = (left_special && right_special) ? 0.5 * tol : tol;

    if (left_special) {
        double sub_hi = right_special ? split : hi;
        QuadResult piece = (hint.left == K::flat)
                               ? left_flat_transform(f, lo, sub_hi, hint.left_flat_cutoff,
                                                     piece_tol, rel_tol)
                               : left_power_transform(f, lo, sub_hi, hint.left_exponent,
                                                      piece_tol, rel_tol);
        accumulate(res, piece);
        if (!right_special) return res;
        accumulate(res, right_power_transform(f, split, hi, hint.right_exponent, piece_tol,
                                              rel_tol));
        return res;
    }
    if (right_special) {
        accumulate(res, adaptive(f, lo, split, 0.5 * tol, {}, rel_tol));
        accumulate(res, right_power_transform(f, split, hi, hint.right_exponent, 0.5 * tol,
                                              rel_tol));
        return res;
    }
    return adaptive(f, lo, hi, tol, {}, rel_tol);
}

QuadResult integrate_semi_infinite(const Fn& f, double lo, double tol, double decay_exponent,
                                   double rel_tol) {
    auto g = [&](double t) -> double {
        double omt = 1.0 - t;
        double u = lo + t / omt;
        if (!std::isfinite(u)) return 0.0;
        double fu = f(u);
        if (fu == 0.0) return 0.0;
        return fu / (omt * omt);
    };
    // Mapped integrand behaves like (1-t)^{-A-2} at the right end when
    // f ~ u^A; exponential decay needs no transform.
    if (decay_exponent < -1.0) {
        double gamma_right = -decay_exponent - 2.0;
        SingularityHint h = SingularityHint::algebraic_right(gamma_right);
        return integrate(g, 0.0, 1.0, h, tol, rel_tol);
    }
    const double bps[] = {0.5, 0.9, 0.99};
    return adaptive(g, 0.0, 1.0, tol, bps, rel_tol);
}

QuadResult integrate_nested(const NestedSpec& spec, double tol, double rel_tol) {
    QuadResult worst_inner;
    worst_inner.converged = true;
    long inner_evals = 0;
    int inner_failures = 0;
    double max_inner_err = 0.0;

    auto outer_f = [&](double y) -> double {
        auto [xlo, xhi] = spec.x_range(y);
        if (!(xhi > xlo)) return 0.0;
        QuadResult inner = integrate([&](double x) { return spec.f(x, y); }, xlo, xhi,
                                     spec.inner_hint, tol / 10.0, rel_tol / 10.0);
        inner_evals += inner.evaluations;
        max_inner_err = std::max(max_inner_err, inner.abs_err);
        if (!inner.converged) {
            ++inner_failures;
            if (inner.abs_err > worst_inner.abs_err) worst_inner = inner;
        }
        return inner.value;
    };

    QuadResult outer = integrate(outer_f, spec.y_lo, spec.y_hi, spec.outer_hint, tol, rel_tol);
    outer.evaluations += inner_evals;
    outer.abs_err += max_inner_err * (spec.y_hi - spec.y_lo);
    outer.inner_failures = inner_failures;
    outer.converged = outer.converged && inner_failures == 0;
    return outer;
}

} // namespace zetalab::quad
