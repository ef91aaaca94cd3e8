#include "rns/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

namespace rns {

namespace {

// Closure membership as a bit mask over [0, nbits]; small enough to copy on
// every DFS descent.
using Mask = std::vector<std::uint64_t>;

Mask make_base(int nbits) {
    Mask m(static_cast<std::size_t>(nbits) / 64 + 1, 0);
    m[0] = 1;  // 0 is always a member
    return m;
}

bool get_bit(const Mask& m, int i) {
    return (m[static_cast<std::size_t>(i) / 64] >> (static_cast<std::size_t>(i) % 64)) & 1u;
}

// m |= m << a, truncated to [0, nbits], repeated to a fixpoint.  Each pass
// only sets bits that are genuine sums, so the fixpoint is the closure of
// the old mask under adding a.
void close_under(Mask& m, int a, int nbits) {
    const int words = static_cast<int>(m.size());
    const int q = a / 64;
    const int r = a % 64;
    const int top_word = nbits / 64;
    const std::uint64_t top_mask =
        (nbits % 64 == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (nbits % 64 + 1)) - 1);
    for (;;) {
        bool changed = false;
        for (int w = words - 1; w >= q; --w) {
            std::uint64_t shifted = m[static_cast<std::size_t>(w - q)];
            if (r != 0) {
                shifted <<= r;
                if (w - q - 1 >= 0) shifted |= m[static_cast<std::size_t>(w - q - 1)] >> (64 - r);
            }
            if (w == top_word) shifted &= top_mask;
            if (shifted & ~m[static_cast<std::size_t>(w)]) {
                m[static_cast<std::size_t>(w)] |= shifted;
                changed = true;
            }
        }
        if (!changed) return;
    }
}

IrreducibleRecord make_record(int n, const std::vector<int>& kernel, const Mask& mask) {
    IrreducibleRecord rec;
    rec.n = n;
    rec.kernel = GenSet(kernel);
    for (int s = 1; s < n; ++s) {
        if (get_bit(mask, s)) rec.facet.push_back(s);
    }
    for (int s = n / 2 + 1; s < n; ++s) {
        if (!get_bit(mask, s) && !get_bit(mask, n - s)) {
            rec.facet.push_back(s);
            rec.fill_in.push_back(s);
        }
    }
    std::sort(rec.facet.begin(), rec.facet.end());
    return rec;
}

// DFS over kernels: every minimal generating set inside [2, ceil(n/2) - 1]
// avoiding n appears exactly once, with elements added in increasing order.
template <typename Visit>
void kernel_dfs(int n, Visit&& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_irreducibles: n must be >= 1");
    const int hi = (n + 1) / 2 - 1;
    std::vector<int> kernel;
    Mask base = make_base(n);
    auto rec = [&](auto&& self, const Mask& mask, int start) -> void {
        visit(kernel, mask);
        for (int a = start; a <= hi; ++a) {
            if (get_bit(mask, a)) continue;  // not minimal over the current kernel
            Mask next = mask;
            close_under(next, a, n);
            if (get_bit(next, n)) continue;  // n became representable
            kernel.push_back(a);
            self(self, next, a + 1);
            kernel.pop_back();
        }
    };
    rec(rec, base, 2);
}

}  // namespace

void enumerate_irreducibles(int n, const std::function<void(const IrreducibleRecord&)>& emit) {
    kernel_dfs(n, [&](const std::vector<int>& kernel, const Mask& mask) {
        emit(make_record(n, kernel, mask));
    });
}

std::vector<IrreducibleRecord> irreducibles(int n) {
    std::vector<IrreducibleRecord> out;
    enumerate_irreducibles(n, [&](const IrreducibleRecord& rec) { out.push_back(rec); });
    return out;
}

std::int64_t count_irreducibles(int n) {
    std::int64_t count = 0;
    kernel_dfs(n, [&](const std::vector<int>&, const Mask&) { ++count; });
    return count;
}

std::vector<std::int64_t> kernel_size_tally(int n) {
    std::vector<std::int64_t> tally;
    kernel_dfs(n, [&](const std::vector<int>& kernel, const Mask&) {
        if (kernel.size() >= tally.size()) tally.resize(kernel.size() + 1, 0);
        ++tally[kernel.size()];
    });
    return tally;
}

std::vector<std::vector<int>> brute_force_irreducibles(int n) {
    if (n < 1 || n > 34) {
        throw std::invalid_argument("brute_force_irreducibles: n must be in [1, 34]");
    }
    const int hi = (n + 1) / 2 - 1;
    const int k = std::max(0, hi - 1);  // candidates 2..hi
    std::vector<std::vector<int>> facets;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
        Mask mask = make_base(n);
        std::vector<int> kernel;
        bool minimal = true;
        for (int idx = 0; idx < k; ++idx) {
            if (!((bits >> idx) & 1u)) continue;
            const int a = idx + 2;
            if (get_bit(mask, a)) {
                minimal = false;
                break;
            }
            close_under(mask, a, n);
            kernel.push_back(a);
        }
        if (!minimal || get_bit(mask, n)) continue;
        facets.push_back(make_record(n, kernel, mask).facet);
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

GenSet record_generators(const IrreducibleRecord& rec) {
    std::vector<int> gens = rec.facet;
    // A run of n + 2 consecutive integers starting at n + 1 generates all of
    // [n + 1, inf).
    for (int v = rec.n + 1; v <= 2 * rec.n + 2; ++v) gens.push_back(v);
    return GenSet(std::move(gens));
}

}  // namespace rns
