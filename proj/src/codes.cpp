#include "cyclotome/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclotome {

CyclicSpace::CyclicSpace(std::uint64_t n, std::uint64_t q)
    : n_(n), q_(q), field_(q), cosets_(coset_leaders(n, q)), fact_(factor_xn_minus_1(n, q)) {
    xn1_ = poly_xn_plus_const(field_, n_, field_.neg(field_.one()));
    neg_partner_.resize(cosets_.size());
    for (std::size_t i = 0; i < cosets_.size(); ++i) {
        const auto neg_leader = cyclotomic_coset((n_ - cosets_[i].leader) % n_, n_, q_).leader;
        neg_partner_[i] = index_of_leader(neg_leader);
    }
}

std::size_t CyclicSpace::index_of_leader(std::uint64_t leader) const {
    auto it = std::lower_bound(cosets_.begin(), cosets_.end(), leader,
                               [](const CyclotomicCoset& c, std::uint64_t v) { return c.leader < v; });
    if (it == cosets_.end() || it->leader != leader)
        throw std::invalid_argument("CyclicSpace: unknown coset leader " + std::to_string(leader));
    return static_cast<std::size_t>(it - cosets_.begin());
}

DefiningSet CyclicSpace::defining_set_from_leaders(const std::vector<std::uint64_t>& leaders) const {
    std::uint64_t mask = 0;
    for (auto l : leaders) mask |= 1ull << index_of_leader(l);
    return defining_set_from_mask(mask);
}

DefiningSet CyclicSpace::defining_set_from_mask(std::uint64_t mask) const {
    DefiningSet s;
    for (std::size_t i = 0; i < cosets_.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        s.leaders.push_back(cosets_[i].leader);
        s.residues.insert(s.residues.end(), cosets_[i].elements.begin(), cosets_[i].elements.end());
    }
    std::sort(s.residues.begin(), s.residues.end());
    return s;
}

std::uint64_t CyclicSpace::mask_of(const DefiningSet& s) const {
    std::uint64_t mask = 0;
    for (auto l : s.leaders) mask |= 1ull << index_of_leader(l);
    return mask;
}

CyclicCode CyclicSpace::from_defining_set(const std::vector<std::uint64_t>& leaders) const {
    return from_mask([&] {
        std::uint64_t mask = 0;
        for (auto l : leaders) mask |= 1ull << index_of_leader(l);
        return mask;
    }());
}

CyclicCode CyclicSpace::from_mask(std::uint64_t mask) const {
    auto s = defining_set_from_mask(mask);
    PolyP g = poly_one(field_);
    for (std::size_t i = 0; i < cosets_.size(); ++i)
        if (mask >> i & 1) g = poly_mul(field_, g, fact_.factors[i]);
    return CyclicCode(n_, q_, std::move(s), std::move(g));
}

CyclicCode CyclicSpace::from_generator(const PolyP& g) const {
    if (g.is_zero() || g.leading(field_) != 1)
        throw std::invalid_argument("from_generator: generator must be monic");
    if (!poly_rem(field_, xn1_, g).is_zero())
        throw std::invalid_argument("not a cyclic-code generator: g does not divide x^n - 1");
    std::uint64_t mask = 0;
    int degree_sum = 0;
    for (std::size_t i = 0; i < cosets_.size(); ++i) {
        if (poly_rem(field_, g, fact_.factors[i]).is_zero()) {
            mask |= 1ull << i;
            degree_sum += fact_.factors[i].degree();
        }
    }
    if (degree_sum != g.degree())
        throw std::logic_error("from_generator: factor membership does not add up");
    auto code = from_mask(mask);
    if (!(code.generator() == g)) throw std::logic_error("from_generator: reconstruction mismatch");
    return code;
}

CyclicCode CyclicSpace::dual(const CyclicCode& c) const {
    // defining set Z_n \ (-S), generator the monic reciprocal of the check
    // polynomial (or 1 for the dual of the zero code)
    const std::uint64_t mask = mask_of(c.defining_set());
    std::uint64_t neg_mask = 0;
    for (std::size_t i = 0; i < cosets_.size(); ++i)
        if (mask >> i & 1) neg_mask |= 1ull << neg_partner_[i];
    const std::uint64_t full = cosets_.size() == 64 ? ~0ull : (1ull << cosets_.size()) - 1;
    auto dual_code = from_mask(full & ~neg_mask);

    // cross-check against the polynomial route
    const auto h = check_polynomial(c);
    const auto g_dual = poly_reciprocal(field_, h);
    if (!(g_dual == dual_code.generator()))
        throw std::logic_error("dual: defining-set route disagrees with reciprocal of h");
    return dual_code;
}

Mat generator_matrix(const CyclicCode& c) {
    const std::uint64_t k = c.dimension();
    const std::uint64_t n = c.length();
    Mat g(k, n);
    const auto& coeffs = c.generator().coeffs();
    for (std::uint64_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < coeffs.size(); ++j) g.at(i, i + j) = coeffs[j];
    return g;
}

PolyP check_polynomial(const CyclicCode& c) {
    PrimeField f(c.q());
    const auto xn1 = poly_xn_plus_const(f, c.length(), f.neg(f.one()));
    auto [h, r] = poly_divrem(f, xn1, c.generator());
    if (!r.is_zero()) throw std::logic_error("check_polynomial: generator does not divide x^n - 1");
    return h;
}

Mat parity_check_matrix(const CyclicCode& c) {
    const std::uint64_t k = c.dimension();
    const std::uint64_t n = c.length();
    if (k == 0 || k == n) throw std::invalid_argument("parity_check_matrix: requires 0 < k < n");
    PrimeField f(c.q());
    const auto hrev = poly_reciprocal(f, check_polynomial(c));  // degree k
    Mat h(n - k, n);
    const auto& coeffs = hrev.coeffs();
    for (std::uint64_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < coeffs.size(); ++j) h.at(i, i + j) = coeffs[j];
    return h;
}

DefiningSet hull_defining_set(const CyclicSpace& space, const DefiningSet& s) {
    const std::uint64_t mask = space.mask_of(s);
    std::uint64_t neg_mask = 0;
    for (std::size_t i = 0; i < space.coset_count(); ++i)
        if (mask >> i & 1) neg_mask |= 1ull << space.negation_partner(i);
    const std::uint64_t full =
        space.coset_count() == 64 ? ~0ull : (1ull << space.coset_count()) - 1;
    return space.defining_set_from_mask(mask | (full & ~neg_mask));
}

std::uint64_t hull_dimension(const DefiningSet& s, std::uint64_t n) {
    const auto res = s.residue_set();
    const auto neg = negate_set(res, n);
    std::uint64_t count = 0;
    for (auto x : res)
        if (!neg.contains(x)) ++count;
    return count;
}

std::uint64_t hull_dimension_matrix_oracle(const CyclicSpace& space, const CyclicCode& c) {
    // dim(C n C') = dim C + dim C' - dim(C + C'), all via row-space ranks
    const auto dual_code = space.dual(c);
    const auto g = generator_matrix(c);
    const auto gd = generator_matrix(dual_code);
    const std::size_t sum_rank = mat_rank(space.field(), mat_vstack(g, gd));
    return c.dimension() + dual_code.dimension() - sum_rank;
}

bool is_lcd(const CyclicCode& c) {
    return hull_dimension(c.defining_set(), c.length()) == 0;
}

}  // namespace cyclotome
