#include "rns/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rns/semigroup.hpp"

namespace rns {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index)
    : key_(mix64(seed ^ mix64(sample_index + 0x9E3779B97F4A7C15ULL))) {}

std::uint64_t SampleRng::next() {
    return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
}

double SampleRng::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

constexpr std::int64_t kTableLimit = std::int64_t{1} << 22;

void check_model(std::int64_t m, double p) {
    if (m < 0) throw std::invalid_argument("model: M must be >= 0");
    if (m > (std::int64_t{1} << 31) - 2) throw std::invalid_argument("model: M too large");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("model: p must lie in [0, 1]");
}

// Inverse of y mod m for coprime y, m (extended Euclid).
std::int64_t mod_inverse(std::int64_t y, std::int64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = y % m;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return t < 0 ? t + m : t;
}

// Incremental invariants of the semigroup generated by a strictly increasing
// element stream.  Closure tables are sized by the discovered conductor;
// semigroups whose conductor would exceed the table cap fall back to Apery
// distances, keeping per-element work bounded.
class IncrementalAnalyzer {
public:
    // True once no element >= next can change the semigroup.
    bool can_stop_before(std::int64_t next) const {
        return conductor_ >= 0 && next >= conductor_;
    }

    void feed(std::int64_t v) {
        if (can_stop_before(v) || contains(v)) return;
        gens_.push_back(v);
        gcd_ = std::gcd(gcd_, v);
        if (!apery_mode_ && v < static_cast<std::int64_t>(table_.size())) {
            apply_generator(v);
        } else if (!apery_mode_ && v + 1 <= kTableLimit) {
            grow_table(v + 1);  // pass includes the new generator
        }
        if (gcd_ == 1) refresh_conductor();
    }

    Analysis finish() const {
        Analysis out;
        out.e = static_cast<std::int64_t>(gens_.size());
        out.cofinite = (gcd_ == 1);
        if (!out.cofinite) return out;  // genus = frobenius = 0 by convention
        out.frobenius = conductor_ - 1;
        if (apery_mode_) {
            out.genus = genus_from_apery(w_);
        } else {
            std::int64_t gaps = 0;
            for (std::int64_t i = 1; i < conductor_; ++i) {
                if (!table_[static_cast<std::size_t>(i)]) ++gaps;
            }
            out.genus = gaps;
        }
        return out;
    }

    bool empty() const { return gens_.empty(); }

private:
    std::vector<std::int64_t> gens_;
    std::int64_t gcd_ = 0;
    std::vector<std::uint8_t> table_ = {1};
    bool apery_mode_ = false;
    std::vector<std::int64_t> w_;  // Apery distances mod gens_[0]
    std::int64_t conductor_ = -1;

    bool contains(std::int64_t x) {
        if (conductor_ >= 0 && x >= conductor_) return true;
        if (gens_.empty()) return false;
        if (x % gcd_ != 0) return false;
        if (gens_.size() == 1) return true;
        if (apery_mode_) return w_[static_cast<std::size_t>(x % gens_[0])] <= x;
        if (x < static_cast<std::int64_t>(table_.size())) {
            return table_[static_cast<std::size_t>(x)] != 0;
        }
        if (x < kTableLimit) {
            grow_table(x + 1);
            return table_[static_cast<std::size_t>(x)] != 0;
        }
        return contains_scaled(x);
    }

    // Membership beyond the table cap, only reachable with gcd_ > 1 and at
    // least two huge generators.
    bool contains_scaled(std::int64_t x) {
        const std::int64_t d = gcd_;
        const std::int64_t y = x / d;
        if (gens_.size() == 2) {
            const std::int64_t a = gens_[0] / d;
            const std::int64_t b = gens_[1] / d;
            const std::int64_t t = (y % b) * mod_inverse(a % b, b) % b;
            return y >= t * a;
        }
        std::vector<std::int64_t> scaled;
        scaled.reserve(gens_.size());
        for (std::int64_t g : gens_) scaled.push_back(g / d);
        const auto w = detail::apery_dijkstra(scaled, scaled.front());
        return w[static_cast<std::size_t>(y % scaled.front())] <= y;
    }

    void apply_generator(std::int64_t a) {
        for (std::int64_t i = a; i < static_cast<std::int64_t>(table_.size()); ++i) {
            if (table_[static_cast<std::size_t>(i - a)]) table_[static_cast<std::size_t>(i)] = 1;
        }
    }

    void grow_table(std::int64_t cap) {
        const std::int64_t old = static_cast<std::int64_t>(table_.size());
        if (cap <= old) return;
        table_.resize(static_cast<std::size_t>(cap), 0);
        for (std::int64_t i = old; i < cap; ++i) {
            for (std::int64_t g : gens_) {
                if (i >= g && table_[static_cast<std::size_t>(i - g)]) {
                    table_[static_cast<std::size_t>(i)] = 1;
                    break;
                }
            }
        }
    }

    void refresh_conductor() {
        const std::int64_t m = gens_.front();
        if (m == 1) {
            conductor_ = 0;
            return;
        }
        if (apery_mode_) {
            w_ = detail::apery_dijkstra(gens_, m);
            conductor_ = frobenius_from_apery(w_) + 1;
            return;
        }
        const std::int64_t top = gens_.back();
        if ((m - 1) * (top - 1) + top + 2 > kTableLimit) {
            apery_mode_ = true;
            w_ = detail::apery_dijkstra(gens_, m);
            conductor_ = frobenius_from_apery(w_) + 1;
            return;
        }
        for (;;) {
            std::int64_t run = 0;
            std::int64_t last_false = -1;
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(table_.size()); ++i) {
                if (table_[static_cast<std::size_t>(i)]) {
                    if (++run == m) {
                        conductor_ = last_false + 1;
                        return;
                    }
                } else {
                    run = 0;
                    last_false = i;
                }
            }
            grow_table(static_cast<std::int64_t>(table_.size()) * 2);
        }
    }
};

struct Partials {
    std::int64_t count = 0;
    std::int64_t cofinite = 0;
    std::int64_t zero = 0;
    std::int64_t sum_e = 0, sum_g = 0, sum_f = 0;
    __int128 sum_e2 = 0, sum_g2 = 0, sum_f2 = 0;

    void absorb(const Analysis& a, bool is_zero) {
        ++count;
        if (a.cofinite) ++cofinite;
        if (is_zero) ++zero;
        sum_e += a.e;
        sum_g += a.genus;
        sum_f += a.frobenius;
        sum_e2 += static_cast<__int128>(a.e) * a.e;
        sum_g2 += static_cast<__int128>(a.genus) * a.genus;
        sum_f2 += static_cast<__int128>(a.frobenius) * a.frobenius;
    }

    void merge(const Partials& o) {
        count += o.count;
        cofinite += o.cofinite;
        zero += o.zero;
        sum_e += o.sum_e;
        sum_g += o.sum_g;
        sum_f += o.sum_f;
        sum_e2 += o.sum_e2;
        sum_g2 += o.sum_g2;
        sum_f2 += o.sum_f2;
    }
};

Moments moments_from(std::int64_t sum, __int128 sum2, std::int64_t n) {
    Moments m;
    if (n == 0) return m;
    m.mean = static_cast<double>(sum) / static_cast<double>(n);
    if (n > 1) {
        const long double num = static_cast<long double>(sum2) -
                                static_cast<long double>(sum) * static_cast<long double>(sum) /
                                    static_cast<long double>(n);
        m.variance = static_cast<double>(num / static_cast<long double>(n - 1));
        if (m.variance < 0) m.variance = 0;  // rounding guard
    }
    m.std_error = std::sqrt(m.variance / static_cast<double>(n));
    return m;
}

Analysis run_sample(std::int64_t m, double p, SampleRng& rng, bool* is_zero) {
    IncrementalAnalyzer an;
    for (std::int64_t v = 1; v <= m; ++v) {
        if (an.can_stop_before(v)) break;
        if (rng.next_unit() < p) an.feed(v);
    }
    if (is_zero != nullptr) *is_zero = an.empty();
    return an.finish();
}

}  // namespace

GenSet draw(std::int64_t m, double p, SampleRng& rng) {
    check_model(m, p);
    std::vector<int> elems;
    for (std::int64_t v = 1; v <= m; ++v) {
        if (rng.next_unit() < p) elems.push_back(static_cast<int>(v));
    }
    return GenSet(std::move(elems));
}

Analysis analyze(const GenSet& a) {
    IncrementalAnalyzer an;
    for (int v : a.elements()) {
        if (an.can_stop_before(v)) break;
        an.feed(v);
    }
    return an.finish();
}

SampleStats monte_carlo(const SampleConfig& cfg) {
    check_model(cfg.M, cfg.p);
    if (cfg.num_samples < 1) throw std::invalid_argument("monte_carlo: num_samples must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("monte_carlo: workers must be >= 1");

    const std::int64_t n = cfg.num_samples;
    const int workers = static_cast<int>(std::min<std::int64_t>(cfg.workers, n));
    std::vector<Partials> parts(static_cast<std::size_t>(workers));

    auto run_range = [&](std::int64_t lo, std::int64_t hi, Partials& out) {
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            SampleRng rng(cfg.seed, static_cast<std::uint64_t>(idx));
            bool is_zero = false;
            const Analysis a = run_sample(cfg.M, cfg.p, rng, &is_zero);
            out.absorb(a, is_zero);
        }
    };

    if (workers == 1) {
        run_range(0, n, parts[0]);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t base = n / workers;
        const std::int64_t rem = n % workers;
        std::int64_t lo = 0;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t hi = lo + base + (w < rem ? 1 : 0);
            pool.emplace_back(run_range, lo, hi, std::ref(parts[static_cast<std::size_t>(w)]));
            lo = hi;
        }
        for (auto& t : pool) t.join();
    }

    Partials total;  // exact integer sums: any merge order gives the same result
    for (const auto& p : parts) total.merge(p);

    SampleStats stats;
    stats.num_samples = total.count;
    stats.e = moments_from(total.sum_e, total.sum_e2, total.count);
    stats.genus = moments_from(total.sum_g, total.sum_g2, total.count);
    stats.frobenius = moments_from(total.sum_f, total.sum_f2, total.count);
    stats.cofinite_fraction = static_cast<double>(total.cofinite) / static_cast<double>(total.count);
    stats.zero_fraction = static_cast<double>(total.zero) / static_cast<double>(total.count);
    return stats;
}

std::vector<ThresholdCell> threshold_sweep(const std::vector<std::int64_t>& ms,
                                           const std::vector<double>& cs,
                                           std::int64_t samples_per_cell,
                                           std::uint64_t seed) {
    if (samples_per_cell < 1) throw std::invalid_argument("threshold_sweep: need >= 1 sample");
    std::vector<ThresholdCell> cells;
    std::uint64_t cell_index = 0;
    for (std::int64_t m : ms) {
        for (double c : cs) {
            if (c < 0) throw std::invalid_argument("threshold_sweep: c must be >= 0");
            ThresholdCell cell;
            cell.M = m;
            cell.c = c;
            cell.p = std::min(1.0, c / static_cast<double>(m));
            cell.num_samples = samples_per_cell;
            check_model(m, cell.p);
            const std::uint64_t cell_seed = mix64(seed ^ mix64(0x5DEECE66DULL + cell_index));
            std::int64_t cof = 0, zero = 0;
            for (std::int64_t idx = 0; idx < samples_per_cell; ++idx) {
                SampleRng rng(cell_seed, static_cast<std::uint64_t>(idx));
                bool is_zero = false;
                const Analysis a = run_sample(m, cell.p, rng, &is_zero);
                if (a.cofinite) ++cof;
                if (is_zero) ++zero;
            }
            const double nf = static_cast<double>(samples_per_cell);
            cell.cofinite_fraction = static_cast<double>(cof) / nf;
            cell.zero_fraction = static_cast<double>(zero) / nf;
            cell.cofinite_se = std::sqrt(cell.cofinite_fraction * (1 - cell.cofinite_fraction) / nf);
            cell.zero_se = std::sqrt(cell.zero_fraction * (1 - cell.zero_fraction) / nf);
            cell.exact_zero = std::pow(1.0 - cell.p, static_cast<double>(m));
            cells.push_back(cell);
            ++cell_index;
        }
    }
    return cells;
}

}  // namespace rns
