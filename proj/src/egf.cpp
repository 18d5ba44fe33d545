#include "peuler/egf.hpp"

#include <algorithm>

#include "peuler/binomial.hpp"

namespace peuler {

namespace {

void check_context(const TruncatedEGF& a, const TruncatedEGF& b) {
    if (a.prime() != b.prime()) throw DomainError("mixed primes in EGF arithmetic");
}

int min_order(const TruncatedEGF& a, const TruncatedEGF& b) {
    return std::min(a.order(), b.order());
}

void check_order(int order) {
    if (order < 0 || order > kMaxBinomialRow) throw DomainError("EGF order out of range");
}

}  // namespace

TruncatedEGF::TruncatedEGF(std::vector<PadicNumber> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("EGF needs at least the constant coefficient");
    check_order(int(coeffs_.size()) - 1);
    p_ = coeffs_.front().prime();
    prec_ = coeffs_.front().prec();
    for (const PadicNumber& c : coeffs_) {
        if (c.prime() != p_) throw DomainError("mixed primes in EGF coefficients");
        prec_ = std::min(prec_, c.prec());
    }
}

TruncatedEGF egf_exp_linear(const PadicNumber& a, int order) {
    check_order(order);
    std::vector<PadicNumber> c;
    c.reserve(size_t(order) + 1);
    c.push_back(PadicNumber::one(a.prime(), a.prec()));
    for (int n = 1; n <= order; ++n) c.push_back(c.back().mul(a));
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_const(const PadicNumber& c0, int order) {
    check_order(order);
    std::vector<PadicNumber> c(size_t(order) + 1, PadicNumber::zero(c0.prime(), c0.prec()));
    c[0] = c0;
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_mul(const TruncatedEGF& a, const TruncatedEGF& b) {
    check_context(a, b);
    int order = min_order(a, b);
    i64 p = a.prime();
    int prec = std::min(a.prec(), b.prec());
    std::vector<PadicNumber> c;
    c.reserve(size_t(order) + 1);
    for (int n = 0; n <= order; ++n) {
        PadicNumber s = PadicNumber::zero(p, prec);
        for (int k = 0; k <= n; ++k) {
            PadicNumber w = PadicNumber::make(p, prec, i64(binomial_u64(n, k)));
            s = s.add(w.mul(a.coeff(k)).mul(b.coeff(n - k)));
        }
        c.push_back(s);
    }
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_add(const TruncatedEGF& a, const TruncatedEGF& b) {
    check_context(a, b);
    int order = min_order(a, b);
    std::vector<PadicNumber> c;
    c.reserve(size_t(order) + 1);
    for (int n = 0; n <= order; ++n) c.push_back(a.coeff(n).add(b.coeff(n)));
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_sub(const TruncatedEGF& a, const TruncatedEGF& b) {
    check_context(a, b);
    int order = min_order(a, b);
    std::vector<PadicNumber> c;
    c.reserve(size_t(order) + 1);
    for (int n = 0; n <= order; ++n) c.push_back(a.coeff(n).sub(b.coeff(n)));
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_scale(const PadicNumber& s, const TruncatedEGF& a) {
    if (s.prime() != a.prime()) throw DomainError("mixed primes in EGF arithmetic");
    std::vector<PadicNumber> c;
    c.reserve(size_t(a.order()) + 1);
    for (int n = 0; n <= a.order(); ++n) c.push_back(s.mul(a.coeff(n)));
    return TruncatedEGF(std::move(c));
}

TruncatedEGF egf_inv(const TruncatedEGF& a) {
    if (!a.coeff(0).is_unit())
        throw NotInvertible("EGF inverse requires a unit constant term");
    i64 p = a.prime();
    int prec = a.prec();
    PadicNumber c0inv = a.coeff(0).inv();
    std::vector<PadicNumber> b;
    b.reserve(size_t(a.order()) + 1);
    b.push_back(c0inv);
    for (int n = 1; n <= a.order(); ++n) {
        PadicNumber s = PadicNumber::zero(p, prec);
        for (int k = 1; k <= n; ++k) {
            PadicNumber w = PadicNumber::make(p, prec, i64(binomial_u64(n, k)));
            s = s.add(w.mul(a.coeff(k)).mul(b[size_t(n - k)]));
        }
        b.push_back(c0inv.neg().mul(s));
    }
    return TruncatedEGF(std::move(b));
}

TruncatedEGF egf_scale_arg(const TruncatedEGF& a, i64 factor) {
    if (factor < 1) throw DomainError("argument scale factor must be positive");
    i64 p = a.prime();
    int prec = a.prec();
    PadicNumber f = PadicNumber::make(p, prec, factor);
    std::vector<PadicNumber> c;
    c.reserve(size_t(a.order()) + 1);
    PadicNumber fpow = PadicNumber::one(p, prec);
    for (int n = 0; n <= a.order(); ++n) {
        c.push_back(fpow.mul(a.coeff(n)));
        if (n < a.order()) fpow = fpow.mul(f);
    }
    return TruncatedEGF(std::move(c));
}

TruncatedEGF euler_egf(const PadicNumber& lambda, int order) {
    check_order(order);
    i64 p = lambda.prime();
    int prec = lambda.prec();
    PadicNumber one = PadicNumber::one(p, prec);
    if (!lambda.add(one).is_unit())
        throw NotInvertible("lambda + 1 must be a p-adic unit (lambda = -1 mod p is excluded)");
    PadicNumber half = PadicNumber::make(p, prec, 1, 2);
    // (lambda e^t + 1) / 2
    TruncatedEGF denom = egf_scale(
        half, egf_add(egf_scale(lambda, egf_exp_linear(one, order)), egf_const(one, order)));
    return egf_inv(denom);
}

TruncatedEGF generalized_euler_egf(const DirichletCharacter& chi, int order) {
    check_order(order);
    i64 p = chi.prime();
    int prec = chi.prec();
    i64 f = chi.modulus();
    PadicNumber one = PadicNumber::one(p, prec);
    PadicNumber two = PadicNumber::make(p, prec, 2);

    TruncatedEGF num = egf_const(PadicNumber::zero(p, prec), order);
    for (i64 a = 0; a < f; ++a) {
        PadicNumber w = chi.at(a);
        if (w.is_zero()) continue;
        if (a & 1) w = w.neg();
        num = egf_add(num, egf_scale(w, egf_exp_linear(PadicNumber::make(p, prec, a), order)));
    }
    num = egf_scale(two, num);

    TruncatedEGF denom =
        egf_add(egf_scale_arg(egf_exp_linear(one, order), f), egf_const(one, order));
    return egf_mul(num, egf_inv(denom));
}

}  // namespace peuler
