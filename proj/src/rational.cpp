#include "krpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace krpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    // The two-argument constructor canonicalizes (reduces and normalizes sign).
    return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }

    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    Integer num{std::string(num_part)};
    if (negative) num = -num;

    Integer den = 1;
    if (slash != std::string_view::npos) {
        if (!all_digits(den_part))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        den = Integer{std::string(den_part)};
        if (den == 0)
            throw std::invalid_argument("malformed rational (zero denominator): '" +
                                        std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_vector(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    out += ")";
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace krpoly
