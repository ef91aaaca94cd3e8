#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rns/genset.hpp"

namespace rns {

/// Minimal generating set with all generators in [2, ceil(n/2) - 1] whose
/// semigroup avoids n.  Kernels are in bijection with the irreducible
/// numerical semigroups of Frobenius number n.
struct KernelSet {
    int n = 0;
    GenSet gens;
};

struct IrreducibleRecord {
    int n = 0;
    GenSet kernel;
    std::vector<int> facet;    // S cap [1, n-1], sorted ascending
    std::vector<int> fill_in;  // the elements of facet in (n/2, n) added by fill-in
};

/// Emits every irreducible numerical semigroup with Frobenius number n
/// exactly once.  Depth-first over candidate kernel generators in increasing
/// order, so the emission order is deterministic.
void enumerate_irreducibles(int n, const std::function<void(const IrreducibleRecord&)>& emit);

std::vector<IrreducibleRecord> irreducibles(int n);
std::int64_t count_irreducibles(int n);

/// Entry i counts kernels with exactly i generators.
std::vector<std::int64_t> kernel_size_tally(int n);

/// Independent oracle: scans all subsets of [2, ceil(n/2) - 1], keeps the
/// minimal generating sets avoiding n, applies the fill-in.  Facets returned
/// in lexicographic order.  Requires 1 <= n <= 34.
std::vector<std::vector<int>> brute_force_irreducibles(int n);

/// Generating set of the reconstructed semigroup facet + {0} + [n+1, inf).
GenSet record_generators(const IrreducibleRecord& rec);

}  // namespace rns
