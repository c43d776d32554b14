#pragma once

#include <map>
#include <optional>
#include <utility>

#include "zetalab/flatcore.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/rational.hpp"

namespace zetalab::zeta {

// The three flat-perturbed monomial families on the quadrant:
//   F1: x^a y^b + x^{a-q} y^b exp(-1/|y|^p)
//   F2: x^a y^b + x^a y^{b-q} exp(-1/|x|^p)
//   F3: x^a y^b + x^a y^{b-q} exp(-1/|x|^p) + x^{a-qt} y^b exp(-1/|y|^pt)
enum class Family { F1, F2, F3 };

struct FamilySpec {
    Family family;
    int a;
    int b;
    flatcore::FlatParams fp;                 // (p, q)
    std::optional<flatcore::FlatParams> fp2; // (pt, qt), F3 only
    Rational p_rat{1};                       // exact p when known
    std::optional<Rational> p2_rat;
    bool flat_terms_disabled = false; // test mode: pure monomial x^a y^b

    FamilySpec(Family fam, int a_, int b_, flatcore::FlatParams fp_,
               std::optional<flatcore::FlatParams> fp2_ = std::nullopt);
    void set_rational_p(const Rational& p);
    void set_rational_p2(const Rational& p2);
};

struct TestFunction {
    enum class Kind { box_polynomial, polynomial_bump };
    Kind kind = Kind::box_polynomial;
    std::map<std::pair<int, int>, double> coeffs; // (i,j) -> coefficient of x^i y^j
    double bump_rx = 1.0;
    double bump_ry = 1.0;

    static TestFunction one();
    static TestFunction monomial(int i, int j, double c = 1.0);

    // d^{i+j} phi / dx^i dy^j (0,0) = i! j! c_{ij} for the polynomial part.
    double taylor(int i, int j) const;
    double operator()(double x, double y) const;
    int max_degree() const;
};

// phi_bar = sum over sign flips, restricted to the quadrant: even-even
// monomials survive with factor 4.
TestFunction symmetrize(const TestFunction& phi);

struct MomentSpec {
    int alpha = 0;
    int beta = 0;
};

struct ContinuationConfig {
    double delta;
    double lambda;
    flatcore::BoxDomain box;

    // delta = max(Eq. 5.8, Eq. 6.7 bound) + 1, r2 = half the tightest of the
    // admissibility bounds, r1 = 0.3, lambda = 0.5.
    static ContinuationConfig defaults(const FamilySpec& fam, int alpha_max = 0);
    void validate(const FamilySpec& fam, int alpha) const;
};

// Pointwise family value (sign-correct off the quadrant; |f| is orthant
// symmetric because q and qt are even).
double eval_f(const FamilySpec& fam, double x, double y);

// Quadrant moment Int_V x^{a s + alpha} y^{b s + beta} Psi dx dy by direct
// nested quadrature; valid for sigma > max(-(alpha+1)/a, -(beta+1)/b).
// All families.
quad::QuadResult eval_moment_direct(const FamilySpec& fam, MomentSpec ms, double sigma,
                                    const flatcore::BoxDomain& box, double rel_tol = 1e-9);

// Z_f(phi)(sigma) over the symmetric box by direct quadrature: 4x the
// quadrant integral of |f|^sigma phi_bar.
quad::QuadResult eval_zeta_direct(const FamilySpec& fam, const TestFunction& phi, double sigma,
                                  const flatcore::BoxDomain& box, double rel_tol = 1e-9);

// Meromorphically continued quadrant moment for F1 on -(alpha+1)/a < sigma < 0,
// region-1 assembled from the four W integrals, regions 2 and 3 by direct
// quadrature of their decompositions.
struct ContinuedResult {
    double value = 0.0;
    double numerator = 0.0; // W1 + r2^{b s + beta + 1} W3 - p s (W2 + W4)
    double z1 = 0.0, z2 = 0.0, z3 = 0.0;
    double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0;
    bool converged = true;
    bool pole_proximity = false; // within 1e-4 of sigma = -(beta+1)/b
};
ContinuedResult eval_Zab_continued_full(const FamilySpec& fam, MomentSpec ms, double sigma,
                                        const ContinuationConfig& cfg, double rel_tol = 1e-8);
double eval_Zab_continued(const FamilySpec& fam, MomentSpec ms, double sigma,
                          const ContinuationConfig& cfg);

// (b sigma + beta + 1) * Z_continued without catastrophic cancellation near
// the pole: the region-1 numerator is kept symbolic.
double pole_probe_continued(const FamilySpec& fam, MomentSpec ms, double sigma,
                            const ContinuationConfig& cfg, double rel_tol = 1e-8);

// Continued Z_f(phi) for box polynomials: termwise over the symmetrized
// monomials.
double eval_zeta_continued(const FamilySpec& fam, const TestFunction& phi, double sigma,
                           const ContinuationConfig& cfg, double rel_tol = 1e-8);

// Direct quadrant integral of the F2/F3 three-term absolute value (no weight).
quad::QuadResult eval_F3_quadrant(const FamilySpec& fam, double sigma,
                                  const flatcore::BoxDomain& box, double rel_tol = 1e-9);

// The sandwich integral W(sigma) over U(lambda, mu) and the bracket
// (1+lambda^q+mu^qt)^sigma W < Z < Wtilde (the two-term majorant over V).
struct SandwichResult {
    double lower = 0.0;
    double upper = 0.0;
    double W = 0.0;
    double W_split = 0.0; // same value through the W1+W2 split at y = 1/lambda
    double r = 0.0;       // x-extent of the region
};
SandwichResult sandwich_W(const FamilySpec& fam, double sigma, double lambda, double mu,
                          const flatcore::BoxDomain& box, double rel_tol = 1e-8);

} // namespace zetalab::zeta
