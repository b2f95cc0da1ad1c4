#pragma once

#include <cstdint>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

bool is_probable_prime(std::uint64_t n);

// GF(p) for an odd prime p < 2^31.  Elements are canonical residues in
// [0, p-1]; all operations are pure and exact.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem from_int(std::int64_t v) const {
        std::int64_t m = static_cast<std::int64_t>(p_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

using PolyP = Poly<PrimeField>;

// First monic irreducible of degree m over GF(p) in the scan order
// c0 + c1*p + ... (constant coefficient as the least significant digit).
// Deterministic, so factor labelings are reproducible across runs.
PolyP find_irreducible(const PrimeField& f, unsigned m);

bool is_irreducible(const PrimeField& f, const PolyP& poly);

// GF(p^m) as polynomial residues mod a fixed monic irreducible of degree m.
// Element representatives are coefficient vectors of length exactly m.
class ExtField {
public:
    using Elem = std::vector<std::uint64_t>;

    ExtField(PrimeField base, PolyP modulus);

    static ExtField make(std::uint64_t p, unsigned m);

    const PrimeField& base() const { return base_; }
    const PolyP& modulus() const { return modulus_; }
    unsigned degree() const { return m_; }
    BigInt size() const;  // p^m

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem embed(PrimeField::Elem c) const;
    bool in_base_field(const Elem& a) const;
    PrimeField::Elem to_base(const Elem& a) const;

    // element with index j in the fixed enumeration order: base-p digits of j,
    // constant coefficient least significant
    Elem element_at(const BigInt& index) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem pow(const Elem& a, const BigInt& e) const;

private:
    PrimeField base_;
    PolyP modulus_;
    unsigned m_;
};

// Splitting field of x^n - 1 over GF(q) together with a primitive n-th root
// of unity in it.
struct NthRoot {
    ExtField field;
    ExtField::Elem xi;
    unsigned r;  // extension degree = ord_n(q)
};

// Deterministic: scans field elements in enumeration order for the first
// generator gamma of the multiplicative group and returns gamma^((q^r-1)/n).
NthRoot primitive_nth_root(std::uint64_t n, std::uint64_t q);

}  // namespace cyclotome
