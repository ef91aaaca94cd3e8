#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rns {

using BigInt = boost::multiprecision::cpp_int;

/// The complex Delta_n on vertices [1, n-1]: facets are S cap [1, n-1] over
/// the irreducible semigroups S with Frobenius number n.  Pure: every facet
/// has cardinality floor((n-1)/2).
struct Complex {
    int n = 0;
    int facet_size = 0;
    std::vector<std::vector<int>> facets;  // each sorted ascending
};

struct HPolynomial {
    int n = 0;                          // 0 when not tied to a specific complex
    std::vector<std::int64_t> coeffs;   // h_0, ..., h_d, trailing zeros trimmed

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::int64_t sum() const;           // equals the number of facets
    std::string display() const;        // "1 + 2x", "1 + 4x + x^2"
};

struct ShellingCertificate {
    int n = 0;
    std::vector<std::vector<int>> facets;        // in shelling order
    std::vector<std::vector<int>> restrictions;  // R_j per facet; R_1 = {}
};

/// Builds Delta_n from the irreducible enumeration; throws std::logic_error
/// if purity fails (which would indicate an enumeration bug).  n >= 2.
Complex build_complex(int n);

/// Facets sorted by decreasing element sum, ties broken by descending
/// lexicographic order; the resulting certificate verifies.
ShellingCertificate shelling_order(const Complex& c);

/// Certificate for an arbitrary facet order, restriction faces computed as
/// R_j = {v in F_j : F_j - v contained in some earlier facet}.
ShellingCertificate make_certificate(int n, std::vector<std::vector<int>> ordered_facets);

/// Direct O(r^2 D) check of the shelling condition, plus consistency of the
/// recorded restriction faces.
bool verify_shelling(const ShellingCertificate& cert);

/// (f_{-1}, f_0, ..., f_{D-1}): counts of distinct faces by cardinality.
/// Face enumeration is capped; requires n <= 40.
std::vector<std::int64_t> f_vector(const Complex& c);

/// Inverts sum_i f_{i-1} t^i = sum_i h_i t^i (1+t)^(D-i), D = facet
/// cardinality.  Trailing zeros trimmed.
HPolynomial h_from_f(const std::vector<std::int64_t>& f, int facet_size, int n = 0);

/// h_i = number of restriction faces with i vertices.  Rejects certificates
/// that do not verify.
HPolynomial h_from_restrictions(const ShellingCertificate& cert);

/// h_i = number of irreducibles with exactly i minimal generators below n/2.
HPolynomial h_from_kernels(int n);

/// h_{n,1} as the definitional count #{a in [2, ceil(n/2)-1] : a does not
/// divide n}.
int h1_count(int n);

/// deg h_n(x) = floor((n-1)/2) - floor(n/3).
int dn_formula(int n);

/// Binomial coefficient; 0 when a < b or a < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

/// sum_{j>=2} C(floor((n-1)/j) - floor(n/(j+1)), i); all terms vanish once
/// the intervals shrink below i.
BigInt h_lower_bound(int n, int i);
/// C(ceil(n/2) - 2i, i).
BigInt h_upper_bound(int n, int i);

}  // namespace rns
