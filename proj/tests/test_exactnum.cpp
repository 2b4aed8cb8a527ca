#include <doctest.h>

#include <random>

#include "twinfoam/exact.hpp"

using namespace twinfoam;

namespace {

GaussianRational random_gq(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 6);
    while (true) {
        GaussianRational g(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
        if (!nonzero || !g.is_zero()) return g;
    }
}

} // namespace

TEST_CASE("gaussian rational basics") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));

    GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK(one_plus_i.inv() == GaussianRational(make_rational(1, 2), make_rational(-1, 2)));

    CHECK(GaussianRational(2) + GaussianRational(-2) == GaussianRational(0));
    CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZeroError);
}

TEST_CASE("gaussian rational field properties on random samples") {
    std::mt19937_64 rng(20240811);
    for (int t = 0; t < 200; ++t) {
        GaussianRational x = random_gq(rng), y = random_gq(rng), z = random_gq(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        GaussianRational nz = random_gq(rng, true);
        CHECK(nz * nz.inv() == GaussianRational(1));
    }
}

TEST_CASE("gaussian rational rendering and parsing") {
    CHECK(GaussianRational(0).to_string() == "0");
    CHECK(GaussianRational(make_rational(1, 2), make_rational(-1, 2)).to_string() == "1/2-1/2*i");
    CHECK(GaussianRational::i().to_string() == "i");
    CHECK((-GaussianRational::i()).to_string() == "-i");
    CHECK(GaussianRational(Rational(2), Rational(1)).to_string() == "2+i");

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        GaussianRational g = random_gq(rng);
        CHECK(GaussianRational::parse(g.to_string()) == g);
    }
    CHECK(GaussianRational::parse("-3/4") == GaussianRational(make_rational(-3, 4)));
    CHECK(GaussianRational::parse("1/2 + 3/4 i") ==
          GaussianRational(make_rational(1, 2), make_rational(3, 4)));
    CHECK(GaussianRational::parse("2*i") == GaussianRational(Rational(0), Rational(2)));
    CHECK_THROWS_AS(GaussianRational::parse(""), InputError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2+3"), InputError);
    CHECK_THROWS_AS(GaussianRational::parse("x"), InputError);
}

TEST_CASE("laurent polynomial ring operations") {
    LaurentPolynomial circle = LaurentPolynomial::q(1) + LaurentPolynomial::q(-1);

    // (q+q^-1)^2 = q^2 + 2 + q^-2
    LaurentPolynomial sq = circle * circle;
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(-2) == 1);
    CHECK(sq.coeff(1) == 0);

    CHECK(circle.eval(GaussianRational(1)) == GaussianRational(2));
    CHECK(circle.pow(5).eval(GaussianRational(1)) == GaussianRational(32));

    // the Reidemeister-I skein computation for a positive kink:
    // q*(q+q^-1)^2 - q^2*(q+q^-1) = q + q^-1
    LaurentPolynomial kink = LaurentPolynomial::q(1) * sq - LaurentPolynomial::q(2) * circle;
    CHECK(kink == circle);

    CHECK(circle.to_string() == "q^-1 + q");
    CHECK((sq - LaurentPolynomial(4)).to_string() == "q^-2 - 2 + q^2");
    CHECK(LaurentPolynomial().to_string() == "0");
}

TEST_CASE("laurent polynomial distributivity on random samples") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto random_poly = [&]() {
        LaurentPolynomial p;
        for (int t = 0; t < 4; ++t) p += LaurentPolynomial::monomial(coeff(rng), expo(rng));
        return p;
    };
    for (int t = 0; t < 100; ++t) {
        LaurentPolynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("laurent evaluation with negative exponents") {
    LaurentPolynomial p = LaurentPolynomial::q(-2);
    CHECK(p.eval(GaussianRational(2)) == GaussianRational(make_rational(1, 4)));
    CHECK_THROWS_AS(p.eval(GaussianRational(0)), DivisionByZeroError);
}
