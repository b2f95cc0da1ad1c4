#include "cyclotome/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cyclotome {

std::string poly_to_text(const PrimeField& f, const PolyP& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const auto c = p[static_cast<std::size_t>(d)];
        if (f.is_zero(c)) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "x";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

std::uint64_t parse_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("poly_parse: expected a number at '" + c.s.substr(start) + "'");
    return std::stoull(c.s.substr(start, c.i - start));
}

}  // namespace

PolyP poly_parse(const PrimeField& f, const std::string& text) {
    Cursor c{text};
    std::vector<std::uint64_t> coeffs;
    const auto add_term = [&](std::uint64_t coef, std::uint64_t deg, bool negative) {
        if (deg + 1 > coeffs.size()) coeffs.resize(deg + 1, 0);
        auto v = f.from_int(static_cast<std::int64_t>(coef % f.modulus()));
        if (negative) v = f.neg(v);
        coeffs[deg] = f.add(coeffs[deg], v);
    };

    if (c.done()) throw std::invalid_argument("poly_parse: empty input");
    bool negative = false;
    if (c.peek() == '+' || c.peek() == '-') {
        negative = c.peek() == '-';
        ++c.i;
    }
    while (true) {
        std::uint64_t coef = 1;
        bool have_coef = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = parse_number(c);
            have_coef = true;
        }
        if (!c.done() && c.peek() == '*') ++c.i;  // "3*x^2" form
        std::uint64_t deg = 0;
        if (!c.done() && (c.peek() == 'x' || c.peek() == 'X')) {
            ++c.i;
            deg = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                deg = parse_number(c);
            }
        } else if (!have_coef) {
            throw std::invalid_argument("poly_parse: malformed term in '" + text + "'");
        }
        add_term(coef, deg, negative);
        if (c.done()) break;
        const char op = c.peek();
        if (op != '+' && op != '-')
            throw std::invalid_argument("poly_parse: expected '+' or '-' in '" + text + "'");
        negative = op == '-';
        ++c.i;
        if (c.done()) throw std::invalid_argument("poly_parse: trailing operator in '" + text + "'");
    }
    return PolyP::from_coeffs(f, std::move(coeffs));
}

std::vector<std::uint64_t> poly_to_coeff_list(const PolyP& p) {
    return p.coeffs();
}

PolyP poly_from_coeff_list(const PrimeField& f, const std::vector<std::uint64_t>& coeffs) {
    std::vector<std::uint64_t> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(c % f.modulus());
    return PolyP::from_coeffs(f, std::move(v));
}

}  // namespace cyclotome
