#pragma once

#include <cstdint>
#include <vector>

namespace rns {

class GenSet;

/// Membership table of <generators> over [0, capacity()), kept complete
/// under addition at all times.  Adding a generator needs only a single
/// ascending pass: every new member is old-member + k * new-generator.
class ClosureTable {
public:
    ClosureTable();

    void add_generator(int a);
    /// Grows the table so that it covers [0, bound].
    void ensure(std::int64_t bound);
    /// Exact for x < capacity(); x beyond a known conductor is a member.
    bool contains(std::int64_t x) const;

    std::int64_t capacity() const { return static_cast<std::int64_t>(table_.size()); }
    const std::vector<int>& generators() const { return gens_; }
    int gcd() const { return gcd_; }

    /// Smallest c with [c, inf) contained in the semigroup.  Doubles the
    /// table until a run of min-generator consecutive members certifies
    /// the answer.  Requires gcd() == 1.
    std::int64_t find_conductor();

    const std::vector<std::uint8_t>& raw() const { return table_; }

private:
    std::vector<std::uint8_t> table_;
    std::vector<int> gens_;
    int gcd_ = 0;
    std::int64_t conductor_ = -1;

    void grow(std::int64_t cap);
};

/// Entry i is true iff i is a finite sum (with repetition) of elements of a.
/// Entry 0 is always true.
std::vector<bool> closure_membership(const GenSet& a, std::int64_t bound);

}  // namespace rns
