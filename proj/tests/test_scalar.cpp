#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sbq/laurent.hpp"

#include <random>

using namespace sbq;

namespace {
LaurentScalar q_pow(long k) { return LaurentScalar::t_power(2 * k); }

LaurentScalar random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentScalar p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        p += LaurentScalar::monomial({Rat(num(rng), den(rng)), Rat(num(rng), den(rng))}, expo(rng));
    return p;
}
}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::i_pow(-1) == -i);
    CHECK(GaussianRational::i_pow(6) == GaussianRational(-1));
    GaussianRational z{Rat(3, 4), Rat(-2, 5)};
    CHECK(z * z.inverse() == GaussianRational(1));
}

TEST_CASE("laurent ring axioms on random samples") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 50; ++it) {
        LaurentScalar a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == LaurentScalar());
    }
}

TEST_CASE("qpoch_finite basic values") {
    // (q^2; m=2) = (1-q^2)(1-q^4)
    RationalScalar v = qpoch_finite(q_pow(2), 2);
    LaurentScalar want = (LaurentScalar::one() - q_pow(2)) * (LaurentScalar::one() - q_pow(4));
    CHECK(v == RationalScalar(want));

    // empty product
    CHECK(qpoch_finite(q_pow(3), 0) == RationalScalar(1));

    // (z; m=-1) = 1/(1 - z q^{-2}) with z = q^5
    RationalScalar neg = qpoch_finite(q_pow(5), -1);
    RationalScalar want_neg(LaurentScalar::one(), LaurentScalar::one() - q_pow(3));
    CHECK(neg == want_neg);

    // vanishing factor at negative index
    CHECK_THROWS_AS(qpoch_finite(q_pow(2), -1), PoleError);
}

TEST_CASE("qpoch_finite shift identity for all integer m") {
    LaurentScalar z = q_pow(3);
    for (long m = -4; m <= 4; ++m) {
        RationalScalar lhs = qpoch_finite(z, m + 1);
        RationalScalar rhs = qpoch_finite(z, m) * RationalScalar(LaurentScalar::one() - z * q_pow(2 * m));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rational scalar field ops") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        LaurentScalar a = random_poly(rng), b = random_poly(rng);
        LaurentScalar na = random_poly(rng), nb = random_poly(rng) + LaurentScalar::one();
        if (a.is_zero() || b.is_zero() || nb.is_zero()) continue;
        RationalScalar x(na, a), y(nb, b);
        CHECK(x + y == y + x);
        CHECK((x * y) / y == x);
        CHECK(x - x == RationalScalar(0));
    }
}

TEST_CASE("series_inverse") {
    // 1 - t -> geometric series
    TruncatedSeries s(12, LaurentScalar::one() - LaurentScalar::t_power(1));
    TruncatedSeries inv = series_inverse(s);
    for (long k = 0; k < inv.order(); ++k) CHECK(inv.coeff(k) == GaussianRational(1));

    // pure monomial t^2 -> t^{-2}
    TruncatedSeries m(10, LaurentScalar::t_power(2));
    TruncatedSeries minv = series_inverse(m);
    CHECK(minv.coeff(-2) == GaussianRational(1));
    CHECK(minv.valuation() == -2);

    // multiply-back oracle on 1 + 2t^2
    LaurentScalar p = LaurentScalar::one() + LaurentScalar::monomial(GaussianRational(2), 2);
    TruncatedSeries sp(16, p);
    TruncatedSeries ip = series_inverse(sp);
    TruncatedSeries prod = sp * ip;
    TruncatedSeries one(prod.order(), LaurentScalar::one());
    CHECK(prod == one);

    CHECK_THROWS_AS(series_inverse(TruncatedSeries(5)), NotInvertible);
}

TEST_CASE("truncated series agrees with polynomial arithmetic below cutoff") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        LaurentScalar a = random_poly(rng), b = random_poly(rng);
        TruncatedSeries ta(30, a), tb(30, b);
        LaurentScalar prod = a * b;
        TruncatedSeries tp = ta * tb;
        for (long e = -20; e < 20; ++e) CHECK(tp.coeff(e) == prod.coeff(e));
        TruncatedSeries ts = ta + tb;
        LaurentScalar sum = a + b;
        for (long e = -20; e < 30; ++e) CHECK(ts.coeff(e) == sum.coeff(e));
    }
}

TEST_CASE("qfrac factored fractions") {
    QFrac a = QFrac::inv_qpoch2(3);             // 1/(q^2;q^2)_3
    QFrac b = QFrac::inv_qpoch2(1);
    QFrac s = a + b;
    RationalScalar rs = a.to_rational() + b.to_rational();
    CHECK(s.to_rational() == rs);
    CHECK((a * b).to_rational() == a.to_rational() * b.to_rational());
    CHECK(a == a);
    CHECK(a != b);
}
