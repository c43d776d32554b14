#pragma once

#include <vector>

#include "zetalab/flatcore.hpp"

namespace zetalab::constants {

// Gamma on (0, 40), Lanczos evaluation, relative error ~1e-14 there.
double gamma_fn(double x);

// Closed form of the k=0 flat moment: (1/p) q^{-(A+1)/p} Gamma(-(A+1)/p).
double flat_moment_oracle(double A, const flatcore::FlatParams& fp);

// Int_0^inf v^A (log v)^k e_{p,q}(v) dv.  Requires A < -1.  For k = 0 the
// quadrature is checked against the Gamma oracle and throws if they disagree
// beyond 1e-8 relative.
double const_flat_moment(double A, int k, const flatcore::FlatParams& fp);

// Chat = Int_0^inf x^{-a/b} (1 - e^{-1/(q x^p)}) dx.  Requires p > 1 - a/b;
// cross-checked against q^{-(1-a/b)/p} Gamma(1-(1-a/b)/p) / (1-a/b).
double const_Chat(int a, int b, const flatcore::FlatParams& fp);

// d0 = log r + Int_0^1 v^{-1} e(v) dv + Int_1^inf v^{-1}(e(v)-1) dv and the
// log-weighted companion d1, both with e = e_{p,q}.
struct LogConstants {
    double d0;
    double d1;
};
LogConstants log_constants(double r, const flatcore::FlatParams& fp);

// Coefficient tables for the power-log expansions:
//   a_ml[m][l] = B^m / (l! (m-l)! p^l) * Int v^A (log v)^{m-l} e(v) dv
//   C_nj[n][j] = r^{A+1} n!/j! * sum_k (-1)^{k+j} (log r)^{n-j-k} / ((n-j-k)! (A+1)^{k+1})
struct ExpansionCoefficients {
    std::vector<std::vector<double>> a_ml;
    std::vector<std::vector<double>> C_nj;
    double d0;
    double d1;
};
ExpansionCoefficients expansion_coeffs(double A, double B, double r,
                                       const flatcore::FlatParams& fp, int N);

// Closed form C_n^{(j)} alone (used by tests against the tail-integral route).
double C_nj_closed_form(double A, double r, int n, int j);

} // namespace zetalab::constants
