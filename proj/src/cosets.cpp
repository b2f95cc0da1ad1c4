#include "cyclotome/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclotome {

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: n must be >= 1");
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(q, n) must be 1");
    std::uint64_t acc = q % n;
    std::uint64_t r = 1;
    while (acc != 1) {
        acc = (acc * (q % n)) % n;
        ++r;
        if (r > n) throw std::logic_error("multiplicative_order: did not converge");
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

CyclotomicCoset cyclotomic_coset(std::uint64_t a, std::uint64_t n, std::uint64_t q) {
    if (a >= n) throw std::invalid_argument("cyclotomic_coset: residue out of range");
    CyclotomicCoset c;
    std::uint64_t x = a;
    do {
        c.elements.push_back(x);
        x = (x * (q % n)) % n;
    } while (x != a);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

std::vector<CyclotomicCoset> coset_leaders(std::uint64_t n, std::uint64_t q) {
    if (std::gcd(n, q) != 1) throw std::invalid_argument("coset_leaders: gcd(n, q) must be 1");
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> cosets;
    for (std::uint64_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        auto c = cyclotomic_coset(a, n, q);
        for (auto x : c.elements) seen[x] = true;
        cosets.push_back(std::move(c));
    }
    return cosets;  // already sorted by leader: leaders appear in scan order
}

TPartition t_partition(unsigned e) {
    if (e < 1) throw std::invalid_argument("t_partition: e must be >= 1");
    TPartition t;
    t.e = e;
    t.levels.resize(e + 1);
    for (unsigned i = 0; i < e; ++i) {
        const std::uint64_t step = 1ull << i;
        for (std::uint64_t k = 1; k <= (1ull << (e - i)); k += 2)
            t.levels[i].push_back(step * k % (1ull << e));
        std::sort(t.levels[i].begin(), t.levels[i].end());
    }
    t.levels[e].push_back(0);
    return t;
}

unsigned t_level(std::uint64_t a, unsigned e) {
    if (a == 0) return e;
    unsigned v = 0;
    while ((a & 1) == 0) {
        a >>= 1;
        ++v;
    }
    return v;
}

namespace {

unsigned v2(std::uint64_t x) {
    unsigned v = 0;
    while (x > 0 && (x & 1) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

}  // namespace

FamilyInfo classify_family(std::uint64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("parameter family not covered: q must be odd");
    if (q % 4 == 1) return {QFamily::OneMod4, v2(q - 1)};
    if (q % 8 == 3) {
        // q = 3 itself is not of the form 2^s f + 3 with f odd, but its coset
        // structure mod 2^e matches the family; treat v2(0) as unbounded.
        unsigned s = q == 3 ? 64 : v2(q - 3);
        return {QFamily::ThreeMod8, s};
    }
    throw std::invalid_argument("parameter family not covered by the supported congruences (q = 7 mod 8)");
}

std::map<unsigned, LevelProfile> coset_size_profile(unsigned e, std::uint64_t q) {
    const auto info = classify_family(q);
    const std::uint64_t n = 1ull << e;

    std::map<unsigned, LevelProfile> predicted;
    if (info.family == QFamily::OneMod4) {
        if (info.s > e)
            throw std::invalid_argument("coset_size_profile: requires v2(q-1) <= e for the q = 1 mod 4 family");
        const unsigned t = e - info.s;
        for (unsigned i = 0; i < t; ++i)
            predicted[i] = {1ull << (t - i), 1ull << (info.s - 1)};
        for (unsigned i = t; i <= e; ++i)
            predicted[i] = {1, i == e ? 1ull : 1ull << (e - i - 1)};
    } else {
        if (e < 3)
            throw std::invalid_argument("coset_size_profile: q = 3 mod 8 family needs e >= 3");
        for (unsigned i = 0; i + 3 <= e; ++i)
            predicted[i] = {1ull << (e - i - 2), 2};
        predicted[e - 2] = {2, 1};
        predicted[e - 1] = {1, 1};
        predicted[e] = {1, 1};
    }

    // never trust the closed form alone: recompute from raw orbits
    std::map<unsigned, std::map<std::uint64_t, std::uint64_t>> observed;
    for (const auto& c : coset_leaders(n, q))
        observed[t_level(c.leader, e)][c.size()] += 1;
    for (unsigned i = 0; i <= e; ++i) {
        const auto& got = observed[i];
        const auto& want = predicted.at(i);
        if (got.size() != 1 || got.begin()->first != want.coset_size || got.begin()->second != want.coset_count)
            throw std::logic_error("coset_size_profile: prediction disagrees with computed cosets");
    }
    return predicted;
}

std::set<std::uint64_t> negate_set(const std::set<std::uint64_t>& s, std::uint64_t n) {
    std::set<std::uint64_t> out;
    for (auto x : s) out.insert((n - x) % n);
    return out;
}

std::vector<SymmetricBlock> symmetric_blocks(std::uint64_t n, std::uint64_t q) {
    const auto cosets = coset_leaders(n, q);
    std::map<std::uint64_t, std::size_t> index_of_leader;
    for (std::size_t i = 0; i < cosets.size(); ++i) index_of_leader[cosets[i].leader] = i;

    std::vector<SymmetricBlock> blocks;
    std::vector<bool> used(cosets.size(), false);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (used[i]) continue;
        const auto neg_leader = cyclotomic_coset((n - cosets[i].leader) % n, n, q).leader;
        const auto j = index_of_leader.at(neg_leader);
        SymmetricBlock b;
        if (j == i) {
            b.kind = SymmetricBlock::Kind::Self;
            b.coset_leaders = {cosets[i].leader};
            b.elements = cosets[i].elements;
        } else {
            b.kind = SymmetricBlock::Kind::Paired;
            b.coset_leaders = {cosets[i].leader, cosets[j].leader};
            b.elements = cosets[i].elements;
            b.elements.insert(b.elements.end(), cosets[j].elements.begin(), cosets[j].elements.end());
            std::sort(b.elements.begin(), b.elements.end());
            used[j] = true;
        }
        used[i] = true;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace cyclotome
