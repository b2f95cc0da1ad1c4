#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace cyclotome {

// Multiplicative structure of Z_n under the action x -> q*x: cyclotomic
// cosets, the valuation levels T_i, negation, and the symmetric blocks that
// drive the hull theory.

struct CyclotomicCoset {
    std::uint64_t leader = 0;             // minimum element
    std::vector<std::uint64_t> elements;  // sorted
    std::size_t size() const { return elements.size(); }
};

// smallest r >= 1 with q^r = 1 (mod n); requires gcd(q, n) = 1
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

CyclotomicCoset cyclotomic_coset(std::uint64_t a, std::uint64_t n, std::uint64_t q);

// all distinct cosets, sorted by leader; they partition Z_n
std::vector<CyclotomicCoset> coset_leaders(std::uint64_t n, std::uint64_t q);

// T_i = { 2^i * k mod n : k odd, 1 <= k <= 2^(e-i) } for i < e, T_e = {0}
struct TPartition {
    unsigned e = 0;
    std::vector<std::vector<std::uint64_t>> levels;  // e+1 sets
};

TPartition t_partition(unsigned e);

// level of a residue: its 2-adic valuation capped at e (level e holds 0 only)
unsigned t_level(std::uint64_t a, unsigned e);

// The paper's two parameter families of odd primes q, classified by 2-adic
// valuations: q = 2^s f + 1 with f odd and s >= 2, and q = 2^s f + 3 with
// f odd and s >= 3.  Everything else (q even, q = 7 mod 8) is out of scope.
enum class QFamily { OneMod4, ThreeMod8 };

struct FamilyInfo {
    QFamily family;
    unsigned s;
};

FamilyInfo classify_family(std::uint64_t q);

struct LevelProfile {
    std::uint64_t coset_size = 0;
    std::uint64_t coset_count = 0;
};

// per-level (coset size, coset count) predicted by the family structure and
// verified against the raw cosets; throws if the family is unsupported
std::map<unsigned, LevelProfile> coset_size_profile(unsigned e, std::uint64_t q);

std::set<std::uint64_t> negate_set(const std::set<std::uint64_t>& s, std::uint64_t n);

struct SymmetricBlock {
    enum class Kind { Paired, Self };
    Kind kind;
    std::vector<std::uint64_t> coset_leaders;  // one leader (self) or two (paired)
    std::vector<std::uint64_t> elements;       // union, sorted; closed under negation
};

// partition of the cosets into self-symmetric singletons and {C, -C} pairs
std::vector<SymmetricBlock> symmetric_blocks(std::uint64_t n, std::uint64_t q);

}  // namespace cyclotome
