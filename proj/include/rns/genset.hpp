#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rns {

/// Sorted set of distinct integer generators, all >= 1.  The empty set
/// generates the semigroup {0}.
class GenSet {
public:
    GenSet() = default;
    /// Sorts, removes duplicates; rejects entries < 1.
    explicit GenSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    int min() const;  // requires nonempty
    int max() const;  // requires nonempty
    int gcd() const;  // gcd of all elements; 0 for the empty set

    /// Divides every element by d; all elements must be multiples of d.
    GenSet divided_by(int d) const;
    /// Multiplies every element by d >= 1.
    GenSet scaled_by(int d) const;

    bool operator==(const GenSet&) const = default;
    auto operator<=>(const GenSet&) const = default;

private:
    std::vector<int> elems_;
};

std::string to_string(const GenSet& a);        // "{2,3}", "{}"
GenSet parse_genset(const std::string& text);  // "2,3", "{2,3}", "" for empty

}  // namespace rns
