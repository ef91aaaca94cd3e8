#pragma once

#include <cstdint>
#include <vector>

#include "rns/genset.hpp"

namespace rns {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

inline constexpr const char* kRngAlgorithm = "splitmix64-counter";

/// Counter-based per-sample stream: draw k of sample i is a pure function of
/// (seed, i, k), so results never depend on worker count or on how many
/// draws other samples consumed.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index);
    std::uint64_t next();
    double next_unit();  // uniform in [0, 1), 53 bits

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct SampleConfig {
    std::int64_t M = 0;
    double p = 0.0;
    std::int64_t num_samples = 1;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;   // sample variance
    double std_error = 0.0;  // sqrt(variance / n)
};

struct SampleStats {
    std::int64_t num_samples = 0;
    Moments e;
    Moments genus;
    Moments frobenius;
    double cofinite_fraction = 0.0;
    double zero_fraction = 0.0;  // fraction of samples with S = <0>
};

struct Analysis {
    std::int64_t e = 0;
    bool cofinite = false;
    std::int64_t genus = 0;
    std::int64_t frobenius = 0;
};

/// One draw from S(M, p): each n in [1, M] independently with probability p.
GenSet draw(std::int64_t m, double p, SampleRng& rng);

/// Invariants of <A> by incremental closure with early termination: once the
/// running conductor falls below the next element, no later element can be a
/// minimal generator or change the semigroup.  Tables are sized by the
/// discovered conductor, never by M.
Analysis analyze(const GenSet& a);

/// num_samples independent draws; per-sample streams derived from
/// (seed, index), aggregation over exact integer sums, so the result is
/// bit-identical for any worker count.
SampleStats monte_carlo(const SampleConfig& cfg);

struct ThresholdCell {
    std::int64_t M = 0;
    double c = 0.0;
    double p = 0.0;  // c / M, clamped to [0, 1]
    std::int64_t num_samples = 0;
    double cofinite_fraction = 0.0;
    double cofinite_se = 0.0;
    double zero_fraction = 0.0;
    double zero_se = 0.0;
    double exact_zero = 0.0;  // (1-p)^M
};

/// Empirical P[cofinite] and P[S = <0>] at p = c/M for every (M, c) pair,
/// with binomial standard errors and the exact empty-set probability.
std::vector<ThresholdCell> threshold_sweep(const std::vector<std::int64_t>& ms,
                                           const std::vector<double>& cs,
                                           std::int64_t samples_per_cell,
                                           std::uint64_t seed);

}  // namespace rns
