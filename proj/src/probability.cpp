#include "rns/probability.hpp"

#include <cmath>
#include <stdexcept>

#include "rns/closure.hpp"

namespace rns {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

double pow_int(double base, std::int64_t exp) {
    double result = 1.0;
    double acc = base;
    for (std::int64_t e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= acc;
        acc *= acc;
    }
    return result;
}

}  // namespace

double a_n(int n, double p, const HPolynomial& h) {
    if (n < 1) throw std::invalid_argument("a_n: n must be >= 1");
    check_probability(p);
    if (h.n != 0 && h.n != n) {
        throw std::invalid_argument("a_n: h-polynomial belongs to a different n");
    }
    double horner = 0.0;
    for (std::size_t i = h.coeffs.size(); i-- > 0;) {
        horner = horner * p + static_cast<double>(h.coeffs[i]);
    }
    const double value = pow_int(1.0 - p, n / 2) * horner;
    if (value < -1e-9 || value > 1.0 + 1e-9) {
        throw std::logic_error("a_n: value escaped [0, 1]");
    }
    return value;
}

double a_n_oracle(int n, double p) {
    if (n < 1 || n > 25) throw std::invalid_argument("a_n_oracle: n must be in [1, 25]");
    check_probability(p);
    if (n == 1) return 1.0;  // the only subset of [0] is empty
    const std::uint64_t limit = (std::uint64_t{1} << (n + 1)) - 1;
    double acc = 0.0;
    // DFS over elements 1..n-1; a branch whose closure reaches n contributes
    // nothing and is pruned whole.
    auto rec = [&](auto&& self, int a, std::uint64_t mask, double weight) -> void {
        if (a == n) {
            acc += weight;
            return;
        }
        self(self, a + 1, mask, weight * (1.0 - p));
        std::uint64_t next = mask;
        for (;;) {
            const std::uint64_t grown = (next | (next << a)) & limit;
            if (grown == next) break;
            next = grown;
        }
        if (!((next >> n) & 1u)) self(self, a + 1, next, weight * p);
    };
    rec(rec, 1, 1u, 1.0);
    return acc;
}

double prob_of_semigroup(const SemigroupProfile& s, const ModelParams& params) {
    check_probability(params.p);
    if (params.M < 0) throw std::invalid_argument("prob_of_semigroup: M must be >= 0");
    if (!s.min_gens.empty() && s.min_gens.max() > params.M) {
        throw std::invalid_argument("prob_of_semigroup: minimal generators must all be <= M");
    }
    const std::int64_t g_m = (s.cofinite && s.frobenius <= params.M)
                                 ? s.genus
                                 : gap_count_up_to(s.min_gens, params.M);
    return pow_int(params.p, s.embedding_dim()) * pow_int(1.0 - params.p, g_m);
}

std::vector<double> an_table(const HTable& hs, double p) {
    check_probability(p);
    std::vector<double> out;
    out.reserve(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        out.push_back(a_n(static_cast<int>(i) + 1, p, hs[i]));
    }
    return out;
}

namespace {

PartialSum partial_an_sum(const ModelParams& params, const HTable& hs, double scale) {
    check_probability(params.p);
    if (params.M < 0) throw std::invalid_argument("expected value: M must be >= 0");
    const int k = static_cast<int>(std::min<std::int64_t>(params.M, static_cast<std::int64_t>(hs.size())));
    double sum = 0.0;
    for (int n = 1; n <= k; ++n) {  // fixed ascending order for reproducibility
        sum += a_n(n, params.p, hs[static_cast<std::size_t>(n) - 1]);
    }
    PartialSum out;
    out.value = scale * sum;
    out.computed_through = k;
    out.complete = (k == params.M);
    return out;
}

}  // namespace

PartialSum expected_e(const ModelParams& params, const HTable& hs) {
    return partial_an_sum(params, hs, params.p);
}

PartialSum expected_gM(const ModelParams& params, const HTable& hs) {
    return partial_an_sum(params, hs, 1.0 - params.p);
}

LimitBounds limit_bounds(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("limit_bounds: p must lie strictly in (0, 1)");
    }
    const double p2 = p * p;
    const double p3 = p2 * p;
    const double p4 = p3 * p;
    LimitBounds b{};
    b.an_sum_lower = (6 - 8 * p + 3 * p2) / (2 * p - 2 * p3 + p4);
    b.an_sum_upper = (2 - p2) / p2;
    b.e_lower = (6 - 8 * p + 3 * p2) / (2 - 2 * p2 + p3);
    b.e_upper = (2 - p2) / p;
    b.g_lower = (6 - 14 * p + 11 * p2 - 3 * p3) / (2 * p - 2 * p3 + p4);
    b.g_upper = (1 - p) * (2 - p2) / p2;
    b.f_lower = b.g_lower;
    b.f_upper = 2 * (1 - p) * (2 - p2) / p2;
    return b;
}

}  // namespace rns
