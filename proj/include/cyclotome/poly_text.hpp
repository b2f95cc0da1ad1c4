#pragma once

#include <string>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

// Text form of a GF(p) polynomial: terms in descending degree, coefficients
// as decimal integers in [0, p-1], coefficient 1 and zero terms omitted,
// e.g. "x^4 + 3x^2 + 10".  Round trips bit-exactly through poly_parse.
std::string poly_to_text(const PrimeField& f, const PolyP& p);

// Accepts both "3x^2" and "3*x^2", optional '-' terms, arbitrary spacing.
PolyP poly_parse(const PrimeField& f, const std::string& text);

// JSON form is the ascending coefficient array, e.g. x^2 + 2 -> [2, 0, 1].
std::vector<std::uint64_t> poly_to_coeff_list(const PolyP& p);
PolyP poly_from_coeff_list(const PrimeField& f, const std::vector<std::uint64_t>& coeffs);

}  // namespace cyclotome
