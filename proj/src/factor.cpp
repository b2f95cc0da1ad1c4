#include "cyclotome/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclotome {

const PolyP& Factorization::factor_of(std::uint64_t leader) const {
    auto it = std::lower_bound(leaders.begin(), leaders.end(), leader);
    if (it == leaders.end() || *it != leader)
        throw std::invalid_argument("Factorization: unknown coset leader " + std::to_string(leader));
    return factors[static_cast<std::size_t>(it - leaders.begin())];
}

PolyP minimal_polynomial(const NthRoot& root, const CyclotomicCoset& coset, const PrimeField& base) {
    const ExtField& K = root.field;
    std::vector<ExtField::Elem> roots;
    roots.reserve(coset.size());
    for (auto i : coset.elements) roots.push_back(K.pow(root.xi, i));
    auto prod = poly_from_roots(K, std::span<const ExtField::Elem>(roots));

    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(prod.coeffs().size());
    for (const auto& c : prod.coeffs()) {
        if (!K.in_base_field(c))
            throw std::logic_error("minimal_polynomial: coefficient escaped the base field "
                                   "(inconsistent root or coset)");
        coeffs.push_back(c[0]);
    }
    return PolyP::from_coeffs(base, std::move(coeffs));
}

Factorization factor_xn_minus_1(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("factor_xn_minus_1: n must be a power of two");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("factor_xn_minus_1: gcd(n, q) must be 1");
    PrimeField base(q);
    const auto root = primitive_nth_root(n, q);
    Factorization out;
    out.n = n;
    out.q = q;
    PolyP product = poly_one(base);
    for (const auto& coset : coset_leaders(n, q)) {
        auto m = minimal_polynomial(root, coset, base);
        if (m.degree() != static_cast<int>(coset.size()))
            throw std::logic_error("factor_xn_minus_1: factor degree does not match coset size");
        product = poly_mul(base, product, m);
        out.leaders.push_back(coset.leader);
        out.factors.push_back(std::move(m));
    }
    const auto target = poly_xn_plus_const(base, n, base.neg(base.one()));  // x^n - 1
    if (!(product == target))
        throw std::logic_error("factor_xn_minus_1: factor product does not reproduce x^n - 1");
    return out;
}

}  // namespace cyclotome
