#pragma once

#include <cstdint>
#include <vector>

#include "rns/complex.hpp"
#include "rns/semigroup.hpp"

namespace rns {

/// The model S(M, p): include each integer in [1, M] independently with
/// probability p as a generator.
struct ModelParams {
    std::int64_t M = 0;
    double p = 0.0;
};

/// a_n(p) = (1-p)^floor(n/2) * h_n(p): probability that n is not a sum of
/// chosen generators below n.  Rejects an h-polynomial bound to another n.
double a_n(int n, double p, const HPolynomial& h);

/// Direct sum over all subsets A of [n-1] with n not in <A>, weighted
/// p^|A| (1-p)^(n-1-|A|).  Requires n <= 25.
double a_n_oracle(int n, double p);

/// P[S = S0] = p^e (1-p)^(g_M); uses the genus when F(S0) <= M.  Minimal
/// generators must all be <= M.
double prob_of_semigroup(const SemigroupProfile& s, const ModelParams& params);

/// h_1, ..., h_K indexed by n - 1.
using HTable = std::vector<HPolynomial>;

std::vector<double> an_table(const HTable& hs, double p);

/// Partial sum through min(M, table size); never extrapolates silently.
struct PartialSum {
    double value = 0.0;
    int computed_through = 0;
    bool complete = false;
};

/// E[e(S)] = p * sum a_n(p).
PartialSum expected_e(const ModelParams& params, const HTable& hs);
/// E[g_M(S)] = (1-p) * sum a_n(p).
PartialSum expected_gM(const ModelParams& params, const HTable& hs);

/// Closed-form bounds on the limits as M -> infinity, for constant
/// p in (0, 1).
struct LimitBounds {
    double e_lower, e_upper;
    double g_lower, g_upper;
    double f_lower, f_upper;
    double an_sum_lower, an_sum_upper;
};

LimitBounds limit_bounds(double p);

}  // namespace rns
