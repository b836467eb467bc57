#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krpoly/linalg.hpp"
#include "krpoly/metric.hpp"
#include "krpoly/rational.hpp"
#include "krpoly/simplex_lp.hpp"
#include "oracles.hpp"

using namespace krpoly;

namespace {

Rational q(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

RatMatrix matrix_from(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting round-trip in canonical form") {
    CHECK(format_rational(parse_rational("-3/7")) == "-3/7");
    CHECK(format_rational(parse_rational("4/2")) == "2");
    CHECK(format_rational(parse_rational("0/9")) == "0");
    CHECK(format_rational(parse_rational("12")) == "12");
    CHECK(parse_rational("2/4") == q(1, 2));

    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays canonical") {
    // (a/b)+(c/d) = (ad+bc)/(bd) reduced
    const Rational sum = q(1, 6) + q(1, 3);
    CHECK(numerator(sum) == 1);
    CHECK(denominator(sum) == 2);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = q(long(rng.uniform(0, 40)) - 20, long(rng.uniform(1, 12)));
        const Rational b = q(long(rng.uniform(0, 40)) - 20, long(rng.uniform(1, 12)));
        const std::vector<Rational> results{Rational(a + b), Rational(a - b), Rational(a * b)};
        for (const Rational& r : results) {
            CHECK(denominator(r) > 0);
            CHECK(gcd(Integer(abs(numerator(r))), Integer(denominator(r))) == 1);
        }
    }
}

TEST_CASE("solve_lp: forced single variable") {
    // min x s.t. x = 1, x >= 0
    const auto res = solve_lp({q(1)}, matrix_from({{1}}), {q(1)});
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == 1);
    CHECK(res.solution == RatVector{q(1)});
}

TEST_CASE("solve_lp: objective equals constraint") {
    // min x+y s.t. x+y = 1, x,y >= 0
    const auto res = solve_lp({q(1), q(1)}, matrix_from({{1, 1}}), {q(1)});
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == 1);
}

TEST_CASE("solve_lp: improving ray is reported unbounded") {
    // min -x s.t. x - y = 0, x,y >= 0 (ray (t,t))
    const auto res = solve_lp({q(-1), q(0)}, matrix_from({{1, -1}}), {q(0)});
    CHECK(res.status == LPStatus::Unbounded);
}

TEST_CASE("solve_lp: infeasible system") {
    // x + y = -1 with x,y >= 0
    const auto res = solve_lp({q(1), q(1)}, matrix_from({{1, 1}}), {q(-1)});
    CHECK(res.status == LPStatus::Infeasible);
}

TEST_CASE("solve_lp: free variables and negative rhs") {
    // min x with x free: x = -5 forced by constraint
    std::vector<bool> nonneg{false};
    const auto res = solve_lp({q(1)}, matrix_from({{1}}), {q(-5)}, nonneg);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == -5);
}

TEST_CASE("solve_lp: redundant rows are tolerated") {
    // same row twice
    const auto res = solve_lp({q(1), q(2)}, matrix_from({{1, 1}, {1, 1}}), {q(1), q(1)});
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == 1);
}

TEST_CASE("solve_lp: dimension mismatches are rejected") {
    CHECK_THROWS_AS(solve_lp({q(1)}, matrix_from({{1, 2}}), {q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(solve_lp({q(1)}, matrix_from({{1}}), {q(1), q(2)}), std::invalid_argument);
    CHECK_THROWS_AS(solve_lp({q(1)}, matrix_from({{1}}), {q(1)}, std::vector<bool>{}),
                    std::invalid_argument);
}

TEST_CASE("solve_lp agrees with basis enumeration on random nonnegative-cost LPs") {
    Rng rng(2024);
    int optimal_seen = 0;
    int infeasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t nvars = 2 + rng.uniform(0, 5);   // <= 7 variables
        const std::size_t nrows = 1 + rng.uniform(0, 2);
        RatMatrix a(nrows, nvars);
        RatVector b(nrows), c(nvars);
        for (std::size_t i = 0; i < nrows; ++i) {
            for (std::size_t j = 0; j < nvars; ++j)
                a.at(i, j) = q(long(rng.uniform(0, 6)) - 3);
            b[i] = q(long(rng.uniform(0, 8)) - 2);
        }
        // Nonnegative costs keep the LP bounded below, which the basis
        // enumeration needs to be a complete oracle.
        for (std::size_t j = 0; j < nvars; ++j) c[j] = q(long(rng.uniform(0, 5)));

        const auto res = solve_lp(c, a, b);
        const auto expected = oracle::lp_by_basis_enumeration(c, a, b);
        REQUIRE(res.status != LPStatus::Unbounded);
        if (expected.feasible) {
            REQUIRE(res.status == LPStatus::Optimal);
            CHECK(res.value == expected.value);
            ++optimal_seen;
        } else {
            CHECK(res.status == LPStatus::Infeasible);
            ++infeasible_seen;
        }
        if (res.status == LPStatus::Optimal) {
            // Re-substitution is exact equality, not approximation.
            for (std::size_t i = 0; i < nrows; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < nvars; ++j) acc += a.at(i, j) * res.solution[j];
                CHECK(acc == b[i]);
            }
            Rational obj = 0;
            for (std::size_t j = 0; j < nvars; ++j) obj += c[j] * res.solution[j];
            CHECK(obj == res.value);
        }
    }
    // The generator must exercise both outcomes.
    CHECK(optimal_seen > 10);
    CHECK(infeasible_seen > 10);
}

TEST_CASE("psd_check on fixed matrices") {
    CHECK(psd_check(RatMatrix::identity(3)));
    CHECK_FALSE(psd_check(matrix_from({{0, 1}, {1, 0}})));  // eigenvalues +-1
    CHECK(psd_check(matrix_from({{1, 1}, {1, 1}})));        // rank-1 Gram matrix
    CHECK(psd_check(matrix_from({{0, 0}, {0, 0}})));
    CHECK_FALSE(psd_check(matrix_from({{-1}})));
    CHECK_THROWS_AS(psd_check(matrix_from({{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("psd_check agrees with the principal-minor oracle") {
    Rng rng(7);
    int positive_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.uniform(0, 4);  // up to 5x5
        RatMatrix s(n, n);
        if (trial % 2 == 0) {
            // Random symmetric matrix: usually indefinite.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    s.at(i, j) = q(long(rng.uniform(0, 8)) - 4, long(rng.uniform(1, 3)));
                    s.at(j, i) = s.at(i, j);
                }
        } else {
            // Gram matrix B^T B: always PSD.
            const std::size_t k = 1 + rng.uniform(0, 2);
            RatMatrix bmat(k, n);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) bmat.at(i, j) = q(long(rng.uniform(0, 6)) - 3);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Rational acc = 0;
                    for (std::size_t r = 0; r < k; ++r) acc += bmat.at(r, i) * bmat.at(r, j);
                    s.at(i, j) = acc;
                }
        }
        const bool expected = oracle::psd_by_principal_minors(s);
        CHECK(psd_check(s) == expected);
        if (expected) ++positive_seen;
    }
    CHECK(positive_seen > 100);
}

TEST_CASE("affine_rank basics") {
    CHECK(affine_rank({{q(0), q(0)}}) == 0);
    CHECK(affine_rank({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(0)}}) == 1);
    CHECK_THROWS_AS(affine_rank({}), std::invalid_argument);
    CHECK_THROWS_AS(affine_rank({{q(0)}, {q(0), q(1)}}), std::invalid_argument);
}

TEST_CASE("affine_rank of the 6 generator points at n=3 equals n-1") {
    const auto points = fundamental_vectors(unit_metric(3));
    std::vector<RatVector> coords;
    for (const auto& p : points) coords.push_back(p.coords);
    CHECK(coords.size() == 6);
    CHECK(affine_rank(coords) == 2);
}
