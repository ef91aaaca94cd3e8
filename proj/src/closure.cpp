#include "rns/closure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rns/genset.hpp"

namespace rns {

ClosureTable::ClosureTable() : table_(1, 1) {}

void ClosureTable::grow(std::int64_t cap) {
    const std::int64_t old = capacity();
    if (cap <= old) return;
    table_.resize(static_cast<std::size_t>(cap), 0);
    // One ascending pass completes the closure over the new region: entries
    // below `old` are final, and table_[i - g] is final by the time i is
    // visited.
    for (std::int64_t i = old; i < cap; ++i) {
        for (int g : gens_) {
            if (i >= g && table_[static_cast<std::size_t>(i - g)]) {
                table_[static_cast<std::size_t>(i)] = 1;
                break;
            }
        }
    }
}

void ClosureTable::ensure(std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("ClosureTable::ensure: bound must be >= 0");
    if (bound + 1 > capacity()) grow(bound + 1);
}

void ClosureTable::add_generator(int a) {
    if (a < 1) throw std::invalid_argument("ClosureTable::add_generator: a must be >= 1");
    ensure(a);
    gens_.push_back(a);
    gcd_ = std::gcd(gcd_, a);
    conductor_ = -1;
    for (std::int64_t i = a; i < capacity(); ++i) {
        if (table_[static_cast<std::size_t>(i - a)]) table_[static_cast<std::size_t>(i)] = 1;
    }
}

bool ClosureTable::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (conductor_ >= 0 && x >= conductor_) return true;
    if (x >= capacity()) throw std::out_of_range("ClosureTable::contains: beyond capacity");
    return table_[static_cast<std::size_t>(x)] != 0;
}

std::int64_t ClosureTable::find_conductor() {
    if (gcd_ != 1) throw std::invalid_argument("ClosureTable::find_conductor: gcd != 1");
    if (conductor_ >= 0) return conductor_;
    const int m = *std::min_element(gens_.begin(), gens_.end());
    for (;;) {
        std::int64_t run = 0;
        std::int64_t last_false = -1;
        for (std::int64_t i = 0; i < capacity(); ++i) {
            if (table_[static_cast<std::size_t>(i)]) {
                if (++run == m) {
                    conductor_ = last_false + 1;
                    return conductor_;
                }
            } else {
                run = 0;
                last_false = i;
            }
        }
        grow(capacity() * 2);
    }
}

std::vector<bool> closure_membership(const GenSet& a, std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("closure_membership: bound must be >= 0");
    std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
    table[0] = true;
    for (int g : a.elements()) {
        if (g > bound) break;
        for (std::int64_t i = g; i <= bound; ++i) {
            if (table[static_cast<std::size_t>(i - g)]) table[static_cast<std::size_t>(i)] = true;
        }
    }
    return table;
}

}  // namespace rns
