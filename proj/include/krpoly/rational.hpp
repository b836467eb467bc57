// Exact rational scalars and dense rational containers.
//
// Every quantity in this library is an arbitrary-precision rational kept in
// canonical form (reduced fraction, positive denominator), so equality,
// interiority and facet coincidence are decided exactly rather than within a
// tolerance.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace krpoly {

using Integer   = boost::multiprecision::mpz_int;
using Rational  = boost::multiprecision::mpq_rational;
using RatVector = std::vector<Rational>;

/// p/q in canonical form; q must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

/// Strict parser for the serialized form "p" or "p/q" with q > 0 and an
/// optional leading '-' on p. Rejects everything else (floats, whitespace,
/// signs on q, empty fields) with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

std::string format_vector(const RatVector& v);

/// Dense row-major matrix of rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RatVector entries;  // rows * cols, row-major

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool is_symmetric() const;

    static RatMatrix identity(std::size_t n);
};

}  // namespace krpoly
