#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclotome {

// Dense univariate polynomial over a field F.  Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial is the empty
// vector and reports degree() == -1.  Every arithmetic routine takes the
// field instance explicitly, so the same template serves GF(p) and GF(p^m).
//
// F must provide: Elem, zero(), one(), add, sub, mul, neg, inv, is_zero.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) {}

    static Poly from_coeffs(const F& f, std::vector<Elem> coeffs) {
        Poly p(std::move(coeffs));
        p.normalize(f);
        return p;
    }

    // degree of the zero polynomial is the distinguished marker -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const std::vector<Elem>& coeffs() const { return c_; }
    const Elem& operator[](std::size_t i) const { return c_[i]; }

    Elem coeff(const F& f, std::size_t i) const {
        return i < c_.size() ? c_[i] : f.zero();
    }

    Elem leading(const F& f) const {
        return c_.empty() ? f.zero() : c_.back();
    }

    bool operator==(const Poly& other) const = default;

    void normalize(const F& f) {
        while (!c_.empty() && f.is_zero(c_.back())) c_.pop_back();
    }

private:
    std::vector<Elem> c_;
};

template <class F>
Poly<F> poly_zero(const F&) {
    return Poly<F>{};
}

template <class F>
Poly<F> poly_one(const F& f) {
    return Poly<F>(std::vector<typename F::Elem>{f.one()});
}

template <class F>
Poly<F> poly_constant(const F& f, typename F::Elem e) {
    if (f.is_zero(e)) return Poly<F>{};
    return Poly<F>(std::vector<typename F::Elem>{std::move(e)});
}

// x - r
template <class F>
Poly<F> poly_linear_root(const F& f, const typename F::Elem& r) {
    return Poly<F>(std::vector<typename F::Elem>{f.neg(r), f.one()});
}

// x^n + c
template <class F>
Poly<F> poly_xn_plus_const(const F& f, std::size_t n, const typename F::Elem& c) {
    std::vector<typename F::Elem> v(n + 1, f.zero());
    v[0] = c;
    v[n] = f.one();
    return Poly<F>(std::move(v));
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(f, i), b.coeff(f, i));
    return Poly<F>::from_coeffs(f, std::move(v));
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(f, i), b.coeff(f, i));
    return Poly<F>::from_coeffs(f, std::move(v));
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>{};
    std::vector<typename F::Elem> v(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a[i], b[j]));
    }
    return Poly<F>::from_coeffs(f, std::move(v));
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& s) {
    std::vector<typename F::Elem> v(a.coeffs().size(), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(a[i], s);
    return Poly<F>::from_coeffs(f, std::move(v));
}

// (quotient, remainder) with deg r < deg b
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<F>{}, a};
    auto r = a.coeffs();
    const auto lead_inv = f.inv(b.leading(f));
    const std::size_t db = b.coeffs().size() - 1;
    std::vector<typename F::Elem> q(r.size() - db, f.zero());
    for (std::size_t i = r.size(); i-- > db;) {
        if (f.is_zero(r[i])) continue;
        const auto factor = f.mul(r[i], lead_inv);
        q[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, b[j]));
    }
    return {Poly<F>::from_coeffs(f, std::move(q)), Poly<F>::from_coeffs(f, std::move(r))};
}

template <class F>
Poly<F> poly_rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_divrem(f, a, b).second;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.leading(f)));
}

// monic gcd; gcd(f, 0) = monic(f)
template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = poly_rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

template <class F>
typename F::Elem poly_eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
    auto acc = f.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

// prod (x - r_i)
template <class F>
Poly<F> poly_from_roots(const F& f, std::span<const typename F::Elem> roots) {
    auto p = poly_one(f);
    for (const auto& r : roots) p = poly_mul(f, p, poly_linear_root(f, r));
    return p;
}

// monic normalization of x^deg(f) * f(1/x); requires f(0) != 0
template <class F>
Poly<F> poly_reciprocal(const F& f, const Poly<F>& a) {
    if (a.is_zero() || f.is_zero(a[0]))
        throw std::invalid_argument("reciprocal undefined: constant term is zero");
    std::vector<typename F::Elem> v(a.coeffs().rbegin(), a.coeffs().rend());
    return poly_monic(f, Poly<F>(std::move(v)));
}

// a^e mod m, e a machine-word exponent
template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> a, std::uint64_t e, const Poly<F>& m) {
    auto r = poly_rem(f, poly_one(f), m);
    a = poly_rem(f, a, m);
    while (e > 0) {
        if (e & 1) r = poly_rem(f, poly_mul(f, r, a), m);
        a = poly_rem(f, poly_mul(f, a, a), m);
        e >>= 1;
    }
    return r;
}

}  // namespace cyclotome
