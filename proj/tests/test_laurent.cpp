#include <catch2/catch.hpp>

#include <random>

#include <vknot/laurent.hpp>

using namespace vknot;

namespace {

LaurentPoly2 random_poly(std::mt19937& rng, int max_terms = 6, int max_exp = 3,
                         int max_coeff = 9) {
    LaurentPoly2 p;
    const int terms = 1 + int(rng() % unsigned(max_terms));
    for (int t = 0; t < terms; ++t) {
        const long c = long(rng() % unsigned(2 * max_coeff + 1)) - max_coeff;
        const int ex = int(rng() % unsigned(2 * max_exp + 1)) - max_exp;
        const int ey = int(rng() % unsigned(2 * max_exp + 1)) - max_exp;
        p += LaurentPoly2::monomial(c, ex, ey);
    }
    return p;
}

} // namespace

TEST_CASE("ring basics") {
    auto x = LaurentPoly2::x();
    auto y = LaurentPoly2::y();
    auto p = x * y - LaurentPoly2::constant(1);

    CHECK((p + (-p)).is_zero());
    CHECK(LaurentPoly2::x(1) * LaurentPoly2::y(-1) * (LaurentPoly2::x(2) * LaurentPoly2::y()) ==
          LaurentPoly2::x(3));
    CHECK(p.to_string() == "-1 + x*y");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(42);
    for (int t = 0; t < 200; ++t) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LaurentPoly2::zero());
    }
}

TEST_CASE("parser and serializer") {
    CHECK(LaurentPoly2::parse("0").is_zero());
    // graded-lex term order: x^3*y^-3 has total degree 0 and sorts early
    CHECK(LaurentPoly2::parse("-1 + x^2 - x^3*y^-3").to_string() == "-1 - x^3*y^-3 + x^2");
    // "/y^k" is an alias for "*y^-k"
    CHECK(LaurentPoly2::parse("x^3/y^3") == LaurentPoly2::parse("x^3*y^-3"));
    CHECK(LaurentPoly2::parse(" 2*x \t- 3 ") == LaurentPoly2::parse("2x-3"));
    CHECK(LaurentPoly2::parse("5") == LaurentPoly2::constant(5));
    CHECK_THROWS_AS(LaurentPoly2::parse("x^"), laurent_error);
    CHECK_THROWS_AS(LaurentPoly2::parse("z"), laurent_error);
    CHECK_THROWS_AS(LaurentPoly2::parse("1/2"), laurent_error);

    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(rng);
        CHECK(LaurentPoly2::parse(p.to_string()) == p);
    }
}

TEST_CASE("div_exact") {
    auto x = LaurentPoly2::x();
    auto y = LaurentPoly2::y();
    CHECK(LaurentPoly2::div_exact(LaurentPoly2::zero(), x - y).is_zero());
    CHECK(LaurentPoly2::div_exact(x * x - y * y, x - y) == x + y);
    CHECK_THROWS_AS(LaurentPoly2::div_exact(x, LaurentPoly2::zero()), laurent_error);
    CHECK_THROWS_AS(LaurentPoly2::div_exact(x + LaurentPoly2::constant(1), x - y),
                    laurent_error);

    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        auto p = random_poly(rng);
        auto q = random_poly(rng);
        if (q.is_zero()) continue;
        CHECK(LaurentPoly2::div_exact(p * q, q) == p);
    }
}

TEST_CASE("unit normalization") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(rng);
        if (p.is_zero()) continue;
        const int ex = int(rng() % 7) - 3, ey = int(rng() % 7) - 3;
        auto u = LaurentPoly2::monomial((rng() & 1) ? 1 : -1, ex, ey);
        CHECK((p * u).normalize_unit() == p.normalize_unit());
    }
}

TEST_CASE("determinants") {
    CHECK(LaurentMatrix::identity(0).det() == LaurentPoly2::constant(1));
    CHECK(LaurentMatrix::identity(3).det() == LaurentPoly2::constant(1));
    CHECK(LaurentMatrix::identity(6).det_bareiss() == LaurentPoly2::constant(1));

    std::mt19937 rng(1234);
    SECTION("2x2 is ad - bc") {
        for (int t = 0; t < 50; ++t) {
            LaurentMatrix m(2);
            auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng),
                 d = random_poly(rng);
            m.at(0, 0) = a;
            m.at(0, 1) = b;
            m.at(1, 0) = c;
            m.at(1, 1) = d;
            CHECK(m.det() == a * d - b * c);
        }
    }
    SECTION("elimination agrees with cofactor expansion on random 6x6") {
        for (int t = 0; t < 8; ++t) {
            LaurentMatrix m(6);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    m.at(i, j) = random_poly(rng, 2, 2, 4);
            CHECK(m.det_bareiss() == m.det_cofactor());
        }
    }
    SECTION("alternating and multiplicative") {
        for (int t = 0; t < 6; ++t) {
            LaurentMatrix m(4), n(4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    m.at(i, j) = random_poly(rng, 2, 1, 3);
                    n.at(i, j) = random_poly(rng, 2, 1, 3);
                }
            // swap two rows -> determinant negates
            LaurentMatrix sw = m;
            for (std::size_t j = 0; j < 4; ++j) std::swap(sw.at(0, j), sw.at(2, j));
            CHECK(sw.det() == -m.det());
            CHECK((m * n).det() == m.det() * n.det());
            // linearity in one row
            LaurentMatrix ma = m, mb = m, msum = m;
            for (std::size_t j = 0; j < 4; ++j) {
                auto a = random_poly(rng, 2, 1, 3), b = random_poly(rng, 2, 1, 3);
                ma.at(1, j) = a;
                mb.at(1, j) = b;
                msum.at(1, j) = a + b;
            }
            CHECK(msum.det() == ma.det() + mb.det());
        }
    }
}

TEST_CASE("eval_mod matches symbolic evaluation") {
    // (x - 1)(y + 2) at (3, 5) mod p equals 2 * 7 = 14
    auto p = (LaurentPoly2::x() - LaurentPoly2::constant(1)) *
             (LaurentPoly2::y() + LaurentPoly2::constant(2));
    CHECK(p.eval_mod(3, 5, (1ull << 61) - 1) == 14);
}
