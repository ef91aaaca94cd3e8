#include "rns/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "rns/closure.hpp"

namespace rns {

namespace detail {

// Shortest paths on the residue graph: edge r -> (r + a) mod m of weight a.
std::vector<std::int64_t> apery_dijkstra(const std::vector<std::int64_t>& gens, std::int64_t m) {
    if (m > (std::int64_t{1} << 26)) throw std::length_error("apery: modulus too large");
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
    dist[0] = 0;
    using Item = std::pair<std::int64_t, std::int64_t>;  // (dist, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, 0});
    while (!heap.empty()) {
        auto [d, r] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (std::int64_t a : gens) {
            std::int64_t nr = (r + a) % m;
            std::int64_t nd = d + a;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                heap.push({nd, nr});
            }
        }
    }
    return dist;
}

}  // namespace detail

namespace {

// Membership tables larger than this switch profile() to the Apery route.
constexpr std::int64_t kTableLimit = std::int64_t{1} << 22;

std::vector<std::int64_t> apery_of(const GenSet& a, std::int64_t m) {
    std::vector<std::int64_t> gens(a.elements().begin(), a.elements().end());
    return detail::apery_dijkstra(gens, m);
}

}  // namespace

bool SemigroupProfile::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x < static_cast<std::int64_t>(membership.size())) {
        return membership[static_cast<std::size_t>(x)];
    }
    if (min_gens.empty()) return false;  // S = {0}
    if (gcd > 1) {
        return x % gcd == 0 && scaled && scaled->contains(x / gcd);
    }
    if (x >= conductor) return true;
    if (!apery.empty()) {
        std::int64_t m = static_cast<std::int64_t>(apery.size());
        return apery[static_cast<std::size_t>(x % m)] <= x;
    }
    return false;  // unreachable: the table covers [0, conductor) otherwise
}

std::int64_t SemigroupProfile::multiplicity() const {
    return min_gens.empty() ? 0 : min_gens.min();
}

GenSet minimal_generators(const GenSet& a) {
    ClosureTable ct;
    std::vector<int> kept;
    for (int v : a.elements()) {
        ct.ensure(v);
        if (!ct.contains(v)) {
            kept.push_back(v);
            ct.add_generator(v);
        }
    }
    return GenSet(std::move(kept));
}

SemigroupProfile profile(const GenSet& a) {
    SemigroupProfile s;
    if (a.empty()) {
        s.membership = {true};
        return s;  // S = <0>: non-cofinite, g = F = 0 by convention
    }
    const int d = a.gcd();
    if (d > 1) {
        auto sub = std::make_shared<SemigroupProfile>(profile(a.divided_by(d)));
        s.min_gens = sub->min_gens.scaled_by(d);
        s.gcd = d;
        s.cofinite = false;
        s.frobenius = 0;
        s.genus = 0;
        s.conductor = 0;
        std::int64_t want = std::min<std::int64_t>(
            d * static_cast<std::int64_t>(sub->membership.size()), kTableLimit);
        s.membership.assign(static_cast<std::size_t>(want), false);
        for (std::int64_t x = 0; x < want; x += d) {
            s.membership[static_cast<std::size_t>(x)] = sub->contains(x / d);
        }
        s.scaled = std::move(sub);
        return s;
    }

    s.min_gens = minimal_generators(a);
    s.gcd = 1;
    s.cofinite = true;
    const std::int64_t m = s.min_gens.min();
    const std::int64_t top = s.min_gens.max();

    if (m == 1) {  // S = N
        s.frobenius = -1;
        s.conductor = 0;
        s.genus = 0;
        s.membership.assign(static_cast<std::size_t>(top) + 2, true);
        return s;
    }

    // F(S) < (m - 1)(top - 1) for coprime generators, so the doubling search
    // below stays within a couple of that bound.
    const std::int64_t schur = (m - 1) * (top - 1);
    if (schur + top + 2 <= kTableLimit) {
        ClosureTable ct;
        ct.ensure(std::min<std::int64_t>(2 * top, schur + top + 1));
        for (int g : s.min_gens.elements()) ct.add_generator(g);
        s.conductor = ct.find_conductor();
        s.frobenius = s.conductor - 1;
        std::int64_t gaps = 0;
        for (std::int64_t i = 1; i < s.conductor; ++i) {
            if (!ct.raw()[static_cast<std::size_t>(i)]) ++gaps;
        }
        s.genus = gaps;
        const std::int64_t want = s.conductor + top + 1;
        ct.ensure(want - 1);
        s.membership.assign(ct.raw().begin(), ct.raw().begin() + want);
    } else {
        s.apery = apery_of(s.min_gens, m);
        s.frobenius = frobenius_from_apery(s.apery);
        s.conductor = s.frobenius + 1;
        s.genus = genus_from_apery(s.apery);
        const std::int64_t want = std::min<std::int64_t>(s.conductor + top + 1, kTableLimit);
        s.membership.assign(static_cast<std::size_t>(want), false);
        for (std::int64_t x = 0; x < want; ++x) {
            s.membership[static_cast<std::size_t>(x)] = s.apery[static_cast<std::size_t>(x % m)] <= x;
        }
    }
    return s;
}

std::vector<std::int64_t> apery_set(const GenSet& a, int m) {
    if (m < 1) throw std::invalid_argument("apery_set: m must be >= 1");
    if (a.gcd() != 1) throw std::invalid_argument("apery_set: gcd of generators must be 1");
    if (!closure_membership(a, m)[static_cast<std::size_t>(m)]) {
        throw std::invalid_argument("apery_set: m is not an element of the semigroup");
    }
    return apery_of(a, m);
}

std::int64_t frobenius_from_apery(const std::vector<std::int64_t>& w) {
    std::int64_t mx = 0;
    for (std::int64_t v : w) mx = std::max(mx, v);
    return mx - static_cast<std::int64_t>(w.size());
}

std::int64_t genus_from_apery(const std::vector<std::int64_t>& w) {
    const std::int64_t m = static_cast<std::int64_t>(w.size());
    std::int64_t g = 0;
    for (std::int64_t v : w) g += v / m;
    return g;
}

namespace detail {

std::int64_t gaps_up_to_from_apery(const std::vector<std::int64_t>& w, std::int64_t m) {
    // Gaps congruent to r are r, r + |w|, ..., w_r - |w|.
    const std::int64_t mod = static_cast<std::int64_t>(w.size());
    std::int64_t total = 0;
    for (std::int64_t r = 0; r < mod; ++r) {
        const std::int64_t first = (r == 0) ? mod : r;
        const std::int64_t last = std::min(m, w[static_cast<std::size_t>(r)] - 1);
        if (last >= first) total += (last - first) / mod + 1;
    }
    return total;
}

}  // namespace detail

std::int64_t gap_count_up_to(const GenSet& a, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("gap_count_up_to: M must be >= 0");
    if (m == 0) return 0;
    if (a.empty()) return m;
    const int d = a.gcd();
    if (d > 1) {
        const std::int64_t members = m / d - gap_count_up_to(a.divided_by(d), m / d);
        return m - members;
    }
    SemigroupProfile s = profile(a);
    if (m >= s.conductor) return s.genus;
    if (m < static_cast<std::int64_t>(s.membership.size())) {
        std::int64_t gaps = 0;
        for (std::int64_t i = 1; i <= m; ++i) {
            if (!s.membership[static_cast<std::size_t>(i)]) ++gaps;
        }
        return gaps;
    }
    return detail::gaps_up_to_from_apery(s.apery, m);
}

bool is_irreducible(const GenSet& a) {
    SemigroupProfile s = profile(a);
    if (!s.cofinite) throw std::invalid_argument("is_irreducible: semigroup is not cofinite");
    if (s.frobenius < 1) throw std::invalid_argument("is_irreducible: Frobenius number must be >= 1");
    const std::int64_t n = s.frobenius;
    for (std::int64_t v = 1; 2 * v < n; ++v) {
        if (!s.contains(n - v) && !s.contains(v)) return false;
    }
    return true;
}

}  // namespace rns
