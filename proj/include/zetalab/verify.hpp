#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetalab/limit_model.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::verify {

enum class Case { A, B, C, D };

struct Classification {
    Case case_label;
    Rational h0;
    Rational m0_bound;               // the table's lower estimate
    std::optional<Rational> m0_exact;
    bool nonpolar = false;           // a non-polar singularity is established
    std::string note;
};
Classification classify(const zeta::FamilySpec& fam);

struct LimitPrediction {
    LimitModel model;
    double limit_value = 0.0;
    bool has_value = true; // clause (iii) of the log cases has no closed form
    std::string case_label;
};

// Limit prediction for Z_f(phi) as sigma approaches the family's critical
// point (F1: -1/a, F2/F3: -1/b), exact-rational clause dispatch.
LimitPrediction predict(const zeta::FamilySpec& fam, const zeta::TestFunction& phi);

// Limit prediction for the F1 quadrant moment Z_beta (no weight, alpha = 0).
LimitPrediction predict_moment(const zeta::FamilySpec& fam, int beta);

// Prediction for the F3 box integral Z(sigma) of the sandwich section (the
// phi-free version of predict, without the orthant factor 4).
LimitPrediction predict_box_integral(const zeta::FamilySpec& fam);

enum class EngineKind { direct, continued, moment_direct, f3_quadrant };

struct Sample {
    double sigma = 0.0;
    double X = 0.0;
    double value = 0.0;
    double scaled = 0.0;
    bool converged = true;
};

struct GridSpec {
    double x0 = 0.1;
    double ratio = 0.5;
    int count = 13;
    std::vector<double> sigmas(const zeta::FamilySpec& fam, LimitModel::Variable var) const;
};

std::vector<Sample> run_samples(const zeta::FamilySpec& fam, const zeta::TestFunction& phi,
                                std::span<const double> sigmas, EngineKind engine,
                                const LimitModel& model, int beta = 0,
                                double rel_tol = 1e-7);

struct FitResult {
    double fitted_limit = 0.0;
    double fitted_exponent = 0.0; // slope of log|value| vs log X
    double rel_residual = 0.0;
    bool ill_conditioned = false;
    bool monotone_trend = false;
};
FitResult fit_limit(std::span<const Sample> samples, const LimitModel& model);

enum class Target { thm31, thm33, thm61, thm81, lemma41, lemma44, pole_order };
const char* target_name(Target t);
std::optional<Target> target_from_name(const std::string& name);

struct TargetParams {
    zeta::FamilySpec fam;
    zeta::TestFunction phi = zeta::TestFunction::one();
    int beta = 0;        // thm61 moment order
    double A = -2.5;     // lemma targets
    double B = 1.0;
    double r = 0.5;
    GridSpec grid;
    std::optional<zeta::ContinuationConfig> cfg; // continued-engine targets
    double rel_tol = 1e-7;
};

struct VerificationReport {
    Target target;
    LimitPrediction prediction;
    std::vector<Sample> samples;
    double fitted_limit = 0.0;
    double fitted_exponent = 0.0; // divergence exponent, comparable to model.exponent
    double relative_error = 0.0;
    double tolerance = 0.0;
    bool monotone_trend = false;
    bool passed = false;
    std::string detail;
};

VerificationReport verify_theorem(Target target, const TargetParams& params);

// Clause-dependent tolerances, one table.
double target_tolerance(Target target, const std::string& case_label);

} // namespace zetalab::verify
