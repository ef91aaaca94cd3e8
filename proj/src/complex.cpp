#include "rns/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "rns/irreducible.hpp"

namespace rns {

namespace {

constexpr int kFVectorCap = 40;      // face enumeration cap
constexpr int kShellingCap = 64;     // facets as single-word bit masks

std::uint64_t to_mask(const std::vector<int>& facet) {
    std::uint64_t m = 0;
    for (int v : facet) m |= std::uint64_t{1} << v;
    return m;
}

std::vector<int> from_mask(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// R_i = set of vertices v in F_i with F_i - v contained in an earlier facet;
// equivalently the missing vertex of every earlier facet meeting F_i in
// |F_i| - 1 vertices.
std::vector<std::uint64_t> restriction_masks(const std::vector<std::uint64_t>& facets, int d) {
    const std::size_t r = facets.size();
    std::vector<std::uint64_t> rest(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const std::uint64_t common = facets[i] & facets[k];
            if (std::popcount(common) == d - 1) rest[i] |= facets[i] & ~common;
        }
    }
    return rest;
}

}  // namespace

std::int64_t HPolynomial::sum() const {
    std::int64_t total = 0;
    for (std::int64_t c : coeffs) total += c;
    return total;
}

std::string HPolynomial::display() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0 && !(i == 0 && coeffs.size() == 1)) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << coeffs[i];
        } else {
            if (coeffs[i] != 1) os << coeffs[i];
            os << 'x';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

Complex build_complex(int n) {
    if (n < 2) throw std::invalid_argument("build_complex: n must be >= 2");
    Complex c;
    c.n = n;
    c.facet_size = (n - 1) / 2;
    enumerate_irreducibles(n, [&](const IrreducibleRecord& rec) {
        if (static_cast<int>(rec.facet.size()) != c.facet_size) {
            std::ostringstream os;
            os << "build_complex: purity violated at n=" << n << " (facet of size "
               << rec.facet.size() << ", expected " << c.facet_size << ")";
            throw std::logic_error(os.str());
        }
        c.facets.push_back(rec.facet);
    });
    return c;
}

ShellingCertificate make_certificate(int n, std::vector<std::vector<int>> ordered_facets) {
    if (n > kShellingCap) throw std::invalid_argument("make_certificate: n must be <= 64");
    ShellingCertificate cert;
    cert.n = n;
    cert.facets = std::move(ordered_facets);
    if (cert.facets.empty()) return cert;
    const int d = static_cast<int>(cert.facets.front().size());
    std::vector<std::uint64_t> masks;
    masks.reserve(cert.facets.size());
    for (const auto& f : cert.facets) {
        if (static_cast<int>(f.size()) != d) {
            throw std::invalid_argument("make_certificate: facets of unequal size");
        }
        masks.push_back(to_mask(f));
    }
    for (std::uint64_t m : restriction_masks(masks, d)) cert.restrictions.push_back(from_mask(m));
    return cert;
}

ShellingCertificate shelling_order(const Complex& c) {
    auto facets = c.facets;
    auto sum_of = [](const std::vector<int>& f) {
        std::int64_t s = 0;
        for (int v : f) s += v;
        return s;
    };
    std::sort(facets.begin(), facets.end(), [&](const auto& a, const auto& b) {
        const std::int64_t sa = sum_of(a);
        const std::int64_t sb = sum_of(b);
        if (sa != sb) return sa > sb;
        return a > b;  // descending lexicographic tie-break
    });
    return make_certificate(c.n, std::move(facets));
}

bool verify_shelling(const ShellingCertificate& cert) {
    const std::size_t r = cert.facets.size();
    if (cert.restrictions.size() != r) return false;
    if (r == 0) return true;
    if (cert.n > kShellingCap) throw std::invalid_argument("verify_shelling: n must be <= 64");
    const int d = static_cast<int>(cert.facets.front().size());
    std::vector<std::uint64_t> masks(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (static_cast<int>(cert.facets[i].size()) != d) return false;  // not pure
        masks[i] = to_mask(cert.facets[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (masks[i] == masks[j]) return false;  // repeated facet
        }
    }
    const auto rest = restriction_masks(masks, d);
    for (std::size_t i = 0; i < r; ++i) {
        if (to_mask(cert.restrictions[i]) != rest[i]) return false;
    }
    // F_i cap F_j must extend to a codimension-1 intersection F_i cap F_k:
    // exactly when some v in R_i avoids F_j.
    for (std::size_t i = 1; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if ((rest[i] & ~masks[j]) == 0) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> f_vector(const Complex& c) {
    if (c.n > kFVectorCap) {
        throw std::invalid_argument("f_vector: face enumeration capped at n = 40");
    }
    const int d = c.facet_size;
    std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
    std::vector<std::uint64_t> level;
    level.reserve(c.facets.size());
    for (const auto& facet : c.facets) level.push_back(to_mask(facet));
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    f[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(level.size());
    for (int k = d; k >= 1; --k) {
        std::vector<std::uint64_t> next;
        next.reserve(level.size() * static_cast<std::size_t>(k));
        for (std::uint64_t face : level) {
            std::uint64_t rem = face;
            while (rem) {
                const std::uint64_t low = rem & (~rem + 1);
                next.push_back(face & ~low);
                rem &= rem - 1;
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        f[static_cast<std::size_t>(k) - 1] = static_cast<std::int64_t>(next.size());
        level = std::move(next);
    }
    return f;
}

HPolynomial h_from_f(const std::vector<std::int64_t>& f, int facet_size, int n) {
    const int d = facet_size;
    if (static_cast<int>(f.size()) != d + 1) {
        throw std::invalid_argument("h_from_f: f-vector must have facet_size + 1 entries");
    }
    // Small binomials C(a, b) for a <= d.
    std::vector<std::vector<std::int64_t>> choose(static_cast<std::size_t>(d) + 1);
    for (int a = 0; a <= d; ++a) {
        choose[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b) {
            choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
        }
    }
    auto c_of = [&](int a, int b) -> std::int64_t {
        if (b < 0 || a < 0 || b > a) return 0;
        return choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    HPolynomial h;
    h.n = n;
    h.coeffs.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j <= k; ++j) {
            const std::int64_t term = c_of(d - j, k - j) * f[static_cast<std::size_t>(j)];
            acc += ((k - j) % 2 == 0) ? term : -term;
        }
        h.coeffs[static_cast<std::size_t>(k)] = acc;
    }
    while (h.coeffs.size() > 1 && h.coeffs.back() == 0) h.coeffs.pop_back();
    return h;
}

HPolynomial h_from_restrictions(const ShellingCertificate& cert) {
    if (!verify_shelling(cert)) {
        throw std::invalid_argument("h_from_restrictions: certificate does not verify");
    }
    HPolynomial h;
    h.n = cert.n;
    for (const auto& rest : cert.restrictions) {
        if (rest.size() >= h.coeffs.size()) h.coeffs.resize(rest.size() + 1, 0);
        ++h.coeffs[rest.size()];
    }
    while (h.coeffs.size() > 1 && h.coeffs.back() == 0) h.coeffs.pop_back();
    return h;
}

HPolynomial h_from_kernels(int n) {
    HPolynomial h;
    h.n = n;
    h.coeffs = kernel_size_tally(n);
    while (h.coeffs.size() > 1 && h.coeffs.back() == 0) h.coeffs.pop_back();
    return h;
}

int h1_count(int n) {
    if (n < 2) throw std::invalid_argument("h1_count: n must be >= 2");
    const int hi = (n + 1) / 2 - 1;
    int count = 0;
    for (int a = 2; a <= hi; ++a) {
        if (n % a != 0) ++count;
    }
    return count;
}

int dn_formula(int n) {
    if (n < 2) throw std::invalid_argument("dn_formula: n must be >= 2");
    return (n - 1) / 2 - n / 3;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || a < b) return 0;
    if (b == 0 || b == a) return 1;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (std::int64_t k = 1; k <= b; ++k) {
        result *= a - b + k;
        result /= k;  // exact: C(a-b+k, k) is an integer
    }
    return result;
}

BigInt h_lower_bound(int n, int i) {
    if (n < 1 || i < 1) throw std::invalid_argument("h_lower_bound: requires n >= 1 and i >= 1");
    BigInt total = 0;
    for (int j = 2; j <= n; ++j) {
        total += binomial((n - 1) / j - n / (j + 1), i);
    }
    return total;
}

BigInt h_upper_bound(int n, int i) {
    if (n < 1 || i < 1) throw std::invalid_argument("h_upper_bound: requires n >= 1 and i >= 1");
    return binomial((n + 1) / 2 - 2 * std::int64_t{i}, i);
}

}  // namespace rns
