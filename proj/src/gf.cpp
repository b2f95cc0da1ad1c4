#include "cyclotome/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclotome {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Miller-Rabin with the first twelve primes as bases is deterministic
    // for every 64-bit input.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p == 2) throw std::invalid_argument("PrimeField: p = 2 is not supported (odd primes only)");
    if (p >= (1ull << 31)) throw std::invalid_argument("PrimeField: p must be below 2^31");
    if (!is_probable_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    return powmod_u64(a, e, p_);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return pow(a, p_ - 2);
}

bool is_irreducible(const PrimeField& f, const PolyP& poly) {
    const int m = poly.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    if (f.is_zero(poly[0])) return false;  // divisible by x
    // No irreducible factor of degree <= m/2  <=>  irreducible: every
    // degree-d irreducible divides x^(p^d) - x.
    const std::uint64_t p = f.modulus();
    auto xp = Poly<PrimeField>(std::vector<std::uint64_t>{0, 1});  // x
    for (int i = 1; i <= m / 2; ++i) {
        xp = poly_powmod(f, xp, p, poly);  // now x^(p^i) mod poly
        auto diff = poly_sub(f, xp, Poly<PrimeField>(std::vector<std::uint64_t>{0, 1}));
        auto g = poly_gcd(f, poly, diff);
        if (g.degree() != 0) return false;
    }
    return true;
}

PolyP find_irreducible(const PrimeField& f, unsigned m) {
    if (m == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    const std::uint64_t p = f.modulus();
    BigInt count = big_pow(p, m);
    for (BigInt j = 0; j < count; ++j) {
        std::vector<std::uint64_t> c(m + 1, 0);
        BigInt rest = j;
        for (unsigned i = 0; i < m; ++i) {
            c[i] = static_cast<std::uint64_t>(rest % p);
            rest /= p;
        }
        c[m] = 1;
        PolyP cand(std::move(c));
        if (is_irreducible(f, cand)) return cand;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

ExtField::ExtField(PrimeField base, PolyP modulus) : base_(base), modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("ExtField: modulus degree must be >= 1");
    if (modulus_.leading(base_) != 1) throw std::invalid_argument("ExtField: modulus must be monic");
    if (!is_irreducible(base_, modulus_)) throw std::invalid_argument("ExtField: modulus is reducible");
    m_ = static_cast<unsigned>(modulus_.degree());
}

ExtField ExtField::make(std::uint64_t p, unsigned m) {
    PrimeField base(p);
    return ExtField(base, find_irreducible(base, m));
}

BigInt ExtField::size() const {
    return big_pow(base_.modulus(), m_);
}

ExtField::Elem ExtField::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

bool ExtField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

ExtField::Elem ExtField::embed(PrimeField::Elem c) const {
    Elem e(m_, 0);
    e[0] = c;
    return e;
}

bool ExtField::in_base_field(const Elem& a) const {
    for (unsigned i = 1; i < m_; ++i)
        if (a[i] != 0) return false;
    return true;
}

PrimeField::Elem ExtField::to_base(const Elem& a) const {
    if (!in_base_field(a)) throw std::domain_error("ExtField: element is not in the base field");
    return a[0];
}

ExtField::Elem ExtField::element_at(const BigInt& index) const {
    Elem e(m_, 0);
    BigInt rest = index;
    const std::uint64_t p = base_.modulus();
    for (unsigned i = 0; i < m_; ++i) {
        e[i] = static_cast<std::uint64_t>(rest % p);
        rest /= p;
    }
    if (rest != 0) throw std::invalid_argument("ExtField: element index out of range");
    return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    // schoolbook product, then reduction by the monic modulus
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    const std::uint64_t p = base_.modulus();
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            prod[i - m_ + j] = base_.sub(prod[i - m_ + j], base_.mul(c, modulus_[j]));
    }
    prod.resize(m_);
    return prod;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("zero has no inverse");
    // extended Euclid on (a, modulus) over GF(p)
    PolyP r0 = modulus_;
    PolyP r1 = PolyP::from_coeffs(base_, a);
    PolyP t0 = poly_zero(base_);
    PolyP t1 = poly_one(base_);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(base_, r0, r1);
        auto t2 = poly_sub(base_, t0, poly_mul(base_, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd(a, modulus), a nonzero constant since the modulus is irreducible
    auto scale = base_.inv(r0.leading(base_));
    auto t = poly_scale(base_, t0, scale);
    Elem out(m_, 0);
    for (std::size_t i = 0; i < t.coeffs().size(); ++i) out[i] = t[i];
    return out;
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one();
    Elem b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ExtField::Elem ExtField::pow(const Elem& a, const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("ExtField::pow: negative exponent");
    Elem r = one();
    if (e == 0) return r;
    const unsigned bits = boost::multiprecision::msb(e) + 1;
    for (unsigned i = bits; i-- > 0;) {
        r = mul(r, r);
        if (boost::multiprecision::bit_test(e, i)) r = mul(r, a);
    }
    return r;
}

namespace {

// Prime divisors of chunk, by trial division.  Chunks here are at most
// q^(r/2) + 1, which stays within 64 bits for every desk-scale instance.
void prime_divisors_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
}

// Distinct prime divisors of q^r - 1 where r is a power of two, via the
// split q^r - 1 = (q - 1)(q + 1)(q^2 + 1)...(q^(r/2) + 1).
std::vector<std::uint64_t> prime_divisors_of_group_order(std::uint64_t q, unsigned r) {
    std::vector<std::uint64_t> primes;
    prime_divisors_u64(q - 1, primes);
    BigInt qpow = q;
    for (unsigned d = 1; d < r; d *= 2) {
        BigInt chunk = qpow + 1;
        if (chunk > BigInt(UINT64_MAX))
            throw std::invalid_argument("primitive_nth_root: splitting field too large for this implementation");
        prime_divisors_u64(static_cast<std::uint64_t>(chunk), primes);
        qpow *= qpow;
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

}  // namespace

NthRoot primitive_nth_root(std::uint64_t n, std::uint64_t q) {
    if (n == 0) throw std::invalid_argument("primitive_nth_root: n must be >= 1");
    PrimeField base(q);
    if (std::gcd(n, q) != 1) throw std::invalid_argument("primitive_nth_root: gcd(n, q) must be 1");

    // r = ord_n(q)
    unsigned r = 1;
    std::uint64_t acc = q % n;
    while (acc != 1 % n) {
        acc = (acc * (q % n)) % n;
        ++r;
        if (r > n) throw std::logic_error("primitive_nth_root: order computation failed");
    }
    if ((r & (r - 1)) != 0)
        throw std::invalid_argument("primitive_nth_root: ord_n(q) must be a power of two (n = 2^e scope)");

    ExtField field = ExtField::make(q, r);
    const BigInt group_order = field.size() - 1;
    if (group_order % n != 0) throw std::logic_error("primitive_nth_root: n does not divide q^r - 1");
    const auto primes = prime_divisors_of_group_order(q, r);

    // first generator of the multiplicative group, in enumeration order
    for (BigInt j = 1; j < field.size(); ++j) {
        auto gamma = field.element_at(j);
        bool primitive = true;
        for (auto ell : primes) {
            if (field.eq(field.pow(gamma, group_order / ell), field.one())) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        auto xi = field.pow(gamma, group_order / n);
        if (!field.eq(field.pow(xi, n), field.one()))
            throw std::logic_error("primitive_nth_root: root verification failed");
        if (n > 1 && field.eq(field.pow(xi, n / 2), field.one()))
            throw std::logic_error("primitive_nth_root: root has deficient order");
        return NthRoot{std::move(field), std::move(xi), r};
    }
    throw std::logic_error("primitive_nth_root: no generator found");  // unreachable
}

}  // namespace cyclotome
