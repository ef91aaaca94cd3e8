#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rns/genset.hpp"

namespace rns {

/// Invariant bundle of the numerical semigroup <A>.
///
/// Conventions: a non-cofinite semigroup reports genus = frobenius = 0 with
/// cofinite == false; S == N (1 is a generator) reports frobenius == -1.
struct SemigroupProfile {
    GenSet min_gens;
    int gcd = 0;  // 0 for the empty generating set
    bool cofinite = false;
    std::int64_t frobenius = 0;
    std::int64_t genus = 0;
    std::int64_t conductor = 0;  // frobenius + 1 when cofinite
    /// Membership over [0, conductor + max(min_gens)]; capped for semigroups
    /// with very large conductor, where contains() falls back to the Apery
    /// distances below.
    std::vector<bool> membership;

    bool contains(std::int64_t x) const;  // exact for every x
    std::int64_t multiplicity() const;    // smallest nonzero element; 0 for {0}
    std::int64_t embedding_dim() const { return static_cast<std::int64_t>(min_gens.size()); }

    // Internal exact-membership fallbacks.
    std::shared_ptr<const SemigroupProfile> scaled;  // profile of <A/gcd> when gcd > 1
    std::vector<std::int64_t> apery;                 // Apery distances when the table is capped
};

SemigroupProfile profile(const GenSet& a);

/// Unique minimal generating set of <A>: processing elements in increasing
/// order, a is kept iff it is not a sum of already-kept elements.
GenSet minimal_generators(const GenSet& a);

/// Apery set of <A> with respect to m: entry r is the least element of <A>
/// congruent to r mod m.  Shortest-path computation, independent of the
/// membership-table scan used by profile().  Requires gcd(A) == 1, m >= 1
/// and m in <A>.
std::vector<std::int64_t> apery_set(const GenSet& a, int m);

std::int64_t frobenius_from_apery(const std::vector<std::int64_t>& w);
std::int64_t genus_from_apery(const std::vector<std::int64_t>& w);

/// #{x in [1, M] : x not in <A>}; defined for cofinite and non-cofinite alike.
std::int64_t gap_count_up_to(const GenSet& a, std::int64_t m);

/// True iff <A> is maximal among numerical semigroups with the same Frobenius
/// number, i.e. n - s not in S implies s in S for all 0 < s < n/2.
/// Requires <A> cofinite with frobenius >= 1.
bool is_irreducible(const GenSet& a);

namespace detail {
/// Gap count in [1, M] from Apery distances (w.size() = modulus).
std::int64_t gaps_up_to_from_apery(const std::vector<std::int64_t>& w, std::int64_t m);
/// Least element of <gens> in each residue class mod m (shortest paths).
std::vector<std::int64_t> apery_dijkstra(const std::vector<std::int64_t>& gens, std::int64_t m);
}  // namespace detail

}  // namespace rns
