#include "peuler/euler.hpp"

#include <algorithm>
#include <numeric>

#include "peuler/binomial.hpp"

namespace peuler {

namespace {

void check_max_n(int max_n) {
    if (max_n < 0 || max_n > kMaxBinomialRow) throw DomainError("max_n out of range");
}

int table_prec(const std::vector<PadicNumber>& values, int fallback) {
    int prec = fallback;
    for (const PadicNumber& v : values) prec = std::min(prec, v.prec());
    return prec;
}

EulerTable finish(EulerFamily family, ComputeRoute route, i64 p, int fallback_prec,
                  std::vector<std::pair<std::string, std::string>> params,
                  std::vector<PadicNumber> values) {
    EulerTable t;
    t.family = family;
    t.route = route;
    t.p = p;
    t.achieved_prec = table_prec(values, fallback_prec);
    t.params = std::move(params);
    t.values = std::move(values);
    return t;
}

}  // namespace

const char* family_name(EulerFamily f) {
    switch (f) {
        case EulerFamily::twisted: return "twisted";
        case EulerFamily::polynomial: return "polynomial";
        case EulerFamily::higher_order: return "higher_order";
        case EulerFamily::generalized: return "generalized";
        case EulerFamily::bernoulli_analogue: return "bernoulli_analogue";
    }
    return "?";
}

const char* route_name(ComputeRoute r) {
    switch (r) {
        case ComputeRoute::recurrence: return "recurrence";
        case ComputeRoute::egf: return "egf";
        case ComputeRoute::integral: return "integral";
    }
    return "?";
}

EulerTable euler_numbers(const PadicNumber& lambda, int max_n) {
    check_max_n(max_n);
    i64 p = lambda.prime();
    int prec = lambda.prec();
    PadicNumber one = PadicNumber::one(p, prec);
    PadicNumber lp1 = lambda.add(one);
    if (!lp1.is_unit())
        throw NotInvertible("lambda + 1 must be a p-adic unit (lambda = -1 mod p is excluded)");
    PadicNumber lp1_inv = lp1.inv();
    PadicNumber factor = lambda.neg().mul(lp1_inv);

    std::vector<PadicNumber> e;
    e.reserve(size_t(max_n) + 1);
    e.push_back(PadicNumber::make(p, prec, 2).mul(lp1_inv));
    for (int n = 1; n <= max_n; ++n) {
        PadicNumber s = PadicNumber::zero(p, prec);
        for (int k = 0; k < n; ++k)
            s = s.add(PadicNumber::make(p, prec, i64(binomial_u64(n, k))).mul(e[size_t(k)]));
        e.push_back(factor.mul(s));
    }
    return finish(EulerFamily::twisted, ComputeRoute::recurrence, p, prec,
                  {{"lambda", lambda.str()}}, std::move(e));
}

EulerTable euler_numbers_egf(const PadicNumber& lambda, int max_n) {
    check_max_n(max_n);
    TruncatedEGF series = euler_egf(lambda, max_n);
    return finish(EulerFamily::twisted, ComputeRoute::egf, lambda.prime(), series.prec(),
                  {{"lambda", lambda.str()}}, series.coeffs());
}

EulerTable euler_numbers_integral(const PadicNumber& lambda, int max_n,
                                  const PrecisionPolicy& policy) {
    check_max_n(max_n);
    i64 p = lambda.prime();
    int prec = lambda.prec();
    std::vector<PadicNumber> e;
    e.reserve(size_t(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        UDFunction f = UDFunction::product(UDFunction::twist(lambda),
                                           UDFunction::monomial(p, prec, n));
        e.push_back(fermionic_integral(f, policy).value);
    }
    return finish(EulerFamily::twisted, ComputeRoute::integral, p, policy.working_prec,
                  {{"lambda", lambda.str()}}, std::move(e));
}

PadicNumber euler_polynomial(const PadicNumber& lambda, const PadicNumber& x, int n) {
    check_max_n(n);
    if (lambda.prime() != x.prime()) throw DomainError("mixed primes in euler_polynomial");
    EulerTable e = euler_numbers(lambda, n);
    i64 p = lambda.prime();
    int prec = std::min(lambda.prec(), x.prec());
    PadicNumber s = PadicNumber::zero(p, prec);
    PadicNumber xpow = PadicNumber::one(p, prec);  // x^(n-k), built from k = n down
    for (int k = n; k >= 0; --k) {
        s = s.add(PadicNumber::make(p, prec, i64(binomial_u64(n, k)))
                      .mul(e.values[size_t(k)])
                      .mul(xpow));
        if (k > 0) xpow = xpow.mul(x);
    }
    return s;
}

EulerTable euler_polynomial_table(const PadicNumber& lambda, const PadicNumber& x, int max_n) {
    check_max_n(max_n);
    std::vector<PadicNumber> v;
    v.reserve(size_t(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) v.push_back(euler_polynomial(lambda, x, n));
    return finish(EulerFamily::polynomial, ComputeRoute::recurrence, lambda.prime(),
                  std::min(lambda.prec(), x.prec()),
                  {{"lambda", lambda.str()}, {"x", x.str()}}, std::move(v));
}

std::pair<PadicNumber, PadicNumber> distribution_sides(const PadicNumber& lambda,
                                                       const PadicNumber& x, int n, i64 F) {
    check_max_n(n);
    i64 p = lambda.prime();
    if (F < 1 || F % 2 == 0) throw DomainError("conductor F must be an odd positive integer");
    if (std::gcd(F, p) != 1) throw DomainError("conductor F must be coprime to p");
    int prec = std::min(lambda.prec(), x.prec());

    PadicNumber lhs = euler_polynomial(lambda, x, n);

    PadicNumber lamF = lambda.pow_int(u64(F));
    PadicNumber f_inv = PadicNumber::make(p, prec, F).inv();
    PadicNumber rhs = PadicNumber::zero(p, prec);
    PadicNumber sign = PadicNumber::one(p, prec);
    PadicNumber lpow = PadicNumber::one(p, prec);
    for (i64 a = 0; a < F; ++a) {
        PadicNumber arg = x.add(PadicNumber::make(p, prec, a)).mul(f_inv);
        rhs = rhs.add(sign.mul(lpow).mul(euler_polynomial(lamF, arg, n)));
        sign = sign.neg();
        lpow = lpow.mul(lambda);
    }
    rhs = PadicNumber::make(p, prec, F).pow_int(u64(n)).mul(rhs);
    return {lhs, rhs};
}

bool distribution_check(const PadicNumber& lambda, const PadicNumber& x, int n, i64 F) {
    auto [lhs, rhs] = distribution_sides(lambda, x, n, F);
    return lhs.equal_mod(rhs, std::min(lhs.prec(), rhs.prec()));
}

EulerTable euler_higher_order(const PadicNumber& lambda, int r, const PadicNumber& x, int max_n) {
    check_max_n(max_n);
    if (r < 1) throw DomainError("order r must be >= 1");
    if (lambda.prime() != x.prime()) throw DomainError("mixed primes in euler_higher_order");
    TruncatedEGF base = euler_egf(lambda, max_n);
    TruncatedEGF acc = egf_exp_linear(x, max_n);
    for (int i = 0; i < r; ++i) acc = egf_mul(acc, base);
    return finish(EulerFamily::higher_order, ComputeRoute::egf, lambda.prime(), acc.prec(),
                  {{"lambda", lambda.str()}, {"r", std::to_string(r)}, {"x", x.str()}},
                  acc.coeffs());
}

EulerTable generalized_euler_numbers(const DirichletCharacter& chi, int max_n) {
    check_max_n(max_n);
    TruncatedEGF series = generalized_euler_egf(chi, max_n);
    return finish(EulerFamily::generalized, ComputeRoute::egf, chi.prime(), series.prec(),
                  {{"chi", chi.label()}}, series.coeffs());
}

EulerTable generalized_euler_numbers_integral(const DirichletCharacter& chi, int max_n,
                                              const PrecisionPolicy& policy) {
    check_max_n(max_n);
    i64 p = chi.prime();
    int prec = chi.prec();
    std::vector<PadicNumber> v;
    v.reserve(size_t(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        UDFunction f = UDFunction::product(UDFunction::character(chi),
                                           UDFunction::monomial(p, prec, n));
        v.push_back(fermionic_integral_X(f, chi.modulus(), policy).value);
    }
    return finish(EulerFamily::generalized, ComputeRoute::integral, p, policy.working_prec,
                  {{"chi", chi.label()}}, std::move(v));
}

EulerTable bernoulli_analogue(const PadicNumber& w, int max_n) {
    check_max_n(max_n);
    i64 p = w.prime();
    int prec = w.prec();
    PadicNumber one = PadicNumber::one(p, prec);
    PadicNumber wm1 = w.sub(one);
    if (!wm1.is_unit())
        throw NotInvertible(
            "w - 1 must be a p-adic unit (w = 1 mod p degenerates the constant term)");
    PadicNumber wm1_inv = wm1.inv();
    PadicNumber factor = w.neg().mul(wm1_inv);

    std::vector<PadicNumber> b;
    b.reserve(size_t(max_n) + 1);
    b.push_back(PadicNumber::zero(p, prec));
    if (max_n >= 1) b.push_back(wm1_inv);
    for (int n = 2; n <= max_n; ++n) {
        PadicNumber s = PadicNumber::zero(p, prec);
        for (int k = 0; k < n; ++k)
            s = s.add(PadicNumber::make(p, prec, i64(binomial_u64(n, k))).mul(b[size_t(k)]));
        b.push_back(factor.mul(s));
    }
    return finish(EulerFamily::bernoulli_analogue, ComputeRoute::recurrence, p, prec,
                  {{"w", w.str()}}, std::move(b));
}

}  // namespace peuler
