#pragma once

#include <cstdint>
#include <vector>

#include "cyclotome/cosets.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

// Factorization of x^n - 1 over GF(q) into the minimal polynomials of the
// powers of a primitive n-th root of unity, one irreducible factor per
// cyclotomic coset.  The factor *multiset* is canonical; the leader ->
// factor labeling depends on the deterministic root choice.
struct Factorization {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> leaders;  // sorted
    std::vector<PolyP> factors;          // factors[i] belongs to leaders[i]

    const PolyP& factor_of(std::uint64_t leader) const;
};

// prod_{i in coset} (x - xi^i), computed in the splitting field; every
// coefficient must land in GF(q) or the inputs are inconsistent
PolyP minimal_polynomial(const NthRoot& root, const CyclotomicCoset& coset, const PrimeField& base);

Factorization factor_xn_minus_1(std::uint64_t n, std::uint64_t q);

}  // namespace cyclotome
