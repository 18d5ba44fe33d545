#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "peuler/egf.hpp"

using namespace peuler;

namespace {

PadicNumber num(i64 n, i64 d = 1) { return PadicNumber::make(5, 6, n, d); }

TruncatedEGF random_unit_series(std::mt19937_64& rng, i64 p, int prec, int order) {
    std::vector<PadicNumber> c;
    i64 c0 = 1 + i64(rng() % 9);
    while (c0 % p == 0) ++c0;
    c.push_back(PadicNumber::make(p, prec, c0));
    for (int n = 1; n <= order; ++n)
        c.push_back(PadicNumber::make(p, prec, i64(rng() % 21) - 10));
    return TruncatedEGF(std::move(c));
}

}  // namespace

TEST_CASE("egf_exp_linear") {
    TruncatedEGF z = egf_exp_linear(PadicNumber::zero(5, 6), 4);
    CHECK(z.coeff(0) == num(1));
    for (int n = 1; n <= 4; ++n) CHECK(z.coeff(n).is_zero());

    TruncatedEGF e = egf_exp_linear(num(1), 4);
    for (int n = 0; n <= 4; ++n) CHECK(e.coeff(n) == num(1));

    TruncatedEGF e2 = egf_exp_linear(num(2), 3);
    CHECK(e2.coeffs() == std::vector<PadicNumber>{num(1), num(2), num(4), num(8)});
}

TEST_CASE("egf_mul") {
    std::mt19937_64 rng(17);
    TruncatedEGF a = random_unit_series(rng, 5, 6, 6);

    SUBCASE("multiplicative identity") {
        CHECK(egf_mul(a, egf_const(num(1), 6)) == a);
    }
    SUBCASE("exponent law e^{at} e^{bt} = e^{(a+b)t}") {
        for (i64 av : {0, 2, 7}) {
            for (i64 bv : {1, 3}) {
                TruncatedEGF lhs = egf_mul(egf_exp_linear(num(av), 8), egf_exp_linear(num(bv), 8));
                TruncatedEGF rhs = egf_exp_linear(num(av + bv), 8);
                for (int n = 0; n <= 8; ++n)
                    CHECK(lhs.coeff(n).equal_mod(rhs.coeff(n),
                                                 std::min(lhs.coeff(n).prec(), rhs.coeff(n).prec())));
            }
        }
    }
    SUBCASE("(e^t + 1)(e^t - 1) = e^{2t} - 1 through order 6") {
        TruncatedEGF e = egf_exp_linear(num(1), 6);
        TruncatedEGF one = egf_const(num(1), 6);
        TruncatedEGF lhs = egf_mul(egf_add(e, one), egf_sub(e, one));
        CHECK(lhs == egf_sub(egf_exp_linear(num(2), 6), one));
    }
    SUBCASE("context mismatch") {
        TruncatedEGF b = egf_exp_linear(PadicNumber::one(3, 6), 6);
        CHECK_THROWS_AS(egf_mul(a, b), DomainError);
    }
}

TEST_CASE("egf_inv") {
    TruncatedEGF one = egf_const(num(1), 5);
    CHECK(egf_inv(one) == one);

    // (e^t + 1)/2 has coefficients (1, 1/2, 1/2, ...); its inverse starts
    // with the classical Euler numbers 1, -1/2, 0, 1/4, 0
    TruncatedEGF half_shift =
        egf_scale(num(1, 2), egf_add(egf_exp_linear(num(1), 4), egf_const(num(1), 4)));
    CHECK(half_shift.coeff(0) == num(1));
    CHECK(half_shift.coeff(1) == num(1, 2));
    TruncatedEGF inv = egf_inv(half_shift);
    CHECK(inv.coeff(0) == num(1));
    CHECK(inv.coeff(1) == num(-1, 2));
    CHECK(inv.coeff(2).is_zero());
    CHECK(inv.coeff(3) == num(1, 4));
    CHECK(inv.coeff(4).is_zero());

    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        TruncatedEGF a = random_unit_series(rng, 7, 6, 7);
        TruncatedEGF prod = egf_mul(a, egf_inv(a));
        CHECK(prod.coeff(0) == PadicNumber::one(7, 6));
        for (int n = 1; n <= 7; ++n) CHECK(prod.coeff(n).is_zero());
    }

    std::vector<PadicNumber> bad{num(5), num(1)};
    CHECK_THROWS_AS(egf_inv(TruncatedEGF(bad)), NotInvertible);
}

TEST_CASE("egf_scale_arg") {
    std::mt19937_64 rng(5);
    TruncatedEGF a = random_unit_series(rng, 5, 6, 8);
    CHECK(egf_scale_arg(a, 1) == a);
    CHECK(egf_scale_arg(egf_exp_linear(num(1), 6), 3) == egf_exp_linear(num(3), 6));
    for (int i = 0; i < 10; ++i) {
        TruncatedEGF b = random_unit_series(rng, 5, 6, 8);
        CHECK(egf_scale_arg(egf_scale_arg(b, 2), 3) == egf_scale_arg(b, 6));
    }
}

TEST_CASE("euler_egf") {
    SUBCASE("constant coefficient is 2/(lambda+1)") {
        for (i64 lv : {1, 2, 6}) {
            PadicNumber lam = num(lv);
            CHECK(euler_egf(lam, 5).coeff(0) ==
                  num(2).mul(lam.add(num(1)).inv()));
        }
    }
    SUBCASE("lambda = 1 gives the classical Euler numbers") {
        TruncatedEGF e = euler_egf(num(1), 5);
        CHECK(e.coeff(0) == num(1));
        CHECK(e.coeff(1) == num(-1, 2));
        CHECK(e.coeff(2).is_zero());
        CHECK(e.coeff(3) == num(1, 4));
        CHECK(e.coeff(4).is_zero());
        CHECK(e.coeff(5) == num(-1, 2));
    }
    SUBCASE("lambda = -1 mod p is rejected") {
        CHECK_THROWS_AS(euler_egf(num(4), 3), NotInvertible);
        CHECK_THROWS_AS(euler_egf(num(-1), 3), NotInvertible);
    }
}

TEST_CASE("generalized_euler_egf") {
    SUBCASE("trivial character mod 1 reduces to euler_egf(1)") {
        DirichletCharacter chi = make_character(CharacterKind::trivial, 1, 5, 6);
        CHECK(generalized_euler_egf(chi, 6) == euler_egf(num(1), 6));
    }
    SUBCASE("quadratic character mod 3: E_{0,chi} = -2") {
        DirichletCharacter chi = make_character(CharacterKind::quadratic, 3, 5, 6);
        CHECK(generalized_euler_egf(chi, 4).coeff(0) == num(-2));
    }
}

TEST_CASE("carrier identity: 2e^{xt}/(lambda e^t+1) equals its conductor-F form") {
    // both sides built from the ring primitives, exact at working precision
    for (i64 p : {5, 7}) {
        int prec = 6;
        int order = 10;
        PadicNumber one = PadicNumber::one(p, prec);
        for (i64 lv : {i64(1), 1 + p}) {
            PadicNumber lam = PadicNumber::make(p, prec, lv);
            for (i64 F : {1, 3}) {
                for (i64 xv : {0, 1, 2}) {
                    PadicNumber x = PadicNumber::make(p, prec, xv);
                    TruncatedEGF lhs = egf_mul(euler_egf(lam, order), egf_exp_linear(x, order));

                    TruncatedEGF num_rhs = egf_const(PadicNumber::zero(p, prec), order);
                    PadicNumber sign = one;
                    PadicNumber lpow = one;
                    for (i64 a = 0; a < F; ++a) {
                        num_rhs = egf_add(
                            num_rhs,
                            egf_scale(sign.mul(lpow),
                                      egf_exp_linear(PadicNumber::make(p, prec, xv + a), order)));
                        sign = sign.neg();
                        lpow = lpow.mul(lam);
                    }
                    num_rhs = egf_scale(PadicNumber::make(p, prec, 2), num_rhs);
                    TruncatedEGF den_rhs =
                        egf_add(egf_scale(lam.pow_int(u64(F)),
                                          egf_scale_arg(egf_exp_linear(one, order), F)),
                                egf_const(one, order));
                    TruncatedEGF rhs = egf_mul(num_rhs, egf_inv(den_rhs));
                    for (int n = 0; n <= order; ++n)
                        CHECK(lhs.coeff(n).equal_mod(rhs.coeff(n), prec));
                }
            }
        }
    }
}
