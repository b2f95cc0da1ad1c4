#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cyclotome/cosets.hpp"
#include "cyclotome/factor.hpp"
#include "cyclotome/linalg.hpp"

namespace cyclotome {

// Union of cyclotomic cosets, stored both as sorted leaders and as the
// expanded residue set.  Storing leaders makes "union of cosets" a
// structural invariant instead of a runtime check.
struct DefiningSet {
    std::vector<std::uint64_t> leaders;
    std::vector<std::uint64_t> residues;

    std::set<std::uint64_t> residue_set() const {
        return {residues.begin(), residues.end()};
    }
};

// Cyclic code of length n over GF(q): generator polynomial g | x^n - 1,
// defining set S (the exponents i with g(xi^i) = 0), dimension n - deg g.
class CyclicCode {
public:
    CyclicCode(std::uint64_t n, std::uint64_t q, DefiningSet s, PolyP g)
        : n_(n), q_(q), s_(std::move(s)), g_(std::move(g)) {}

    std::uint64_t length() const { return n_; }
    std::uint64_t q() const { return q_; }
    const DefiningSet& defining_set() const { return s_; }
    const PolyP& generator() const { return g_; }
    std::uint64_t dimension() const { return n_ - static_cast<std::uint64_t>(g_.degree()); }

private:
    std::uint64_t n_, q_;
    DefiningSet s_;
    PolyP g_;
};

// Fixed (n, q) context: the cosets, the factorization of x^n - 1, and the
// negation pairing between cosets.  All code constructions go through it.
class CyclicSpace {
public:
    CyclicSpace(std::uint64_t n, std::uint64_t q);

    std::uint64_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const PrimeField& field() const { return field_; }
    const Factorization& factorization() const { return fact_; }
    const std::vector<CyclotomicCoset>& cosets() const { return cosets_; }
    std::size_t coset_count() const { return cosets_.size(); }

    std::size_t index_of_leader(std::uint64_t leader) const;
    // index of the coset -C_i
    std::size_t negation_partner(std::size_t index) const { return neg_partner_[index]; }

    DefiningSet defining_set_from_leaders(const std::vector<std::uint64_t>& leaders) const;
    DefiningSet defining_set_from_mask(std::uint64_t mask) const;
    std::uint64_t mask_of(const DefiningSet& s) const;

    CyclicCode from_defining_set(const std::vector<std::uint64_t>& leaders) const;
    CyclicCode from_mask(std::uint64_t mask) const;
    // recovers S by testing which irreducible factors divide g
    CyclicCode from_generator(const PolyP& g) const;

    CyclicCode dual(const CyclicCode& c) const;

    const PolyP& xn_minus_1() const { return xn1_; }

private:
    std::uint64_t n_, q_;
    PrimeField field_;
    std::vector<CyclotomicCoset> cosets_;
    std::vector<std::size_t> neg_partner_;
    Factorization fact_;
    PolyP xn1_;
};

// k x n matrix with row i = coefficients of x^i * g(x)
Mat generator_matrix(const CyclicCode& c);
// (n-k) x n matrix built from the reciprocal of h = (x^n - 1)/g; G H^T = 0.
// Requires 0 < k < n.
Mat parity_check_matrix(const CyclicCode& c);

// check polynomial h = (x^n - 1) / g
PolyP check_polynomial(const CyclicCode& c);

// hull defining set S u (Z_n \ (-S)), returned over the same space
DefiningSet hull_defining_set(const CyclicSpace& space, const DefiningSet& s);

// dim Hull(C) = |S \ (-S)|
std::uint64_t hull_dimension(const DefiningSet& s, std::uint64_t n);

// independent oracle: dim(C n C-dual) from row-space ranks
std::uint64_t hull_dimension_matrix_oracle(const CyclicSpace& space, const CyclicCode& c);

bool is_lcd(const CyclicCode& c);

}  // namespace cyclotome
