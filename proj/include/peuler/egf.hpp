#pragma once

#include <vector>

#include "peuler/character.hpp"
#include "peuler/padic.hpp"

namespace peuler {

// Truncated exponential generating function: coefficients c_0..c_M of
// sum c_n t^n / n!, all sharing one prime.  Products are binomial
// convolutions, so a product through t^n depends only on inputs through
// t^n: no order guard is needed anywhere.
class TruncatedEGF {
public:
    explicit TruncatedEGF(std::vector<PadicNumber> coeffs);

    i64 prime() const { return p_; }
    // minimum absolute precision across coefficients
    int prec() const { return prec_; }
    int order() const { return int(coeffs_.size()) - 1; }
    const PadicNumber& coeff(int n) const { return coeffs_[size_t(n)]; }
    const std::vector<PadicNumber>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedEGF& a, const TruncatedEGF& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<PadicNumber> coeffs_;
    i64 p_;
    int prec_;
};

// e^{at}: c_n = a^n through t^order.
TruncatedEGF egf_exp_linear(const PadicNumber& a, int order);

// the constant series c + 0 t + ...
TruncatedEGF egf_const(const PadicNumber& c, int order);

// binomial convolution through the minimum order of the operands
TruncatedEGF egf_mul(const TruncatedEGF& a, const TruncatedEGF& b);

TruncatedEGF egf_add(const TruncatedEGF& a, const TruncatedEGF& b);
TruncatedEGF egf_sub(const TruncatedEGF& a, const TruncatedEGF& b);
TruncatedEGF egf_scale(const PadicNumber& c, const TruncatedEGF& a);

// series inverse by triangular solve; requires a unit constant term
TruncatedEGF egf_inv(const TruncatedEGF& a);

// substitution t -> F t, i.e. c_n -> F^n c_n
TruncatedEGF egf_scale_arg(const TruncatedEGF& a, i64 factor);

// 2/(lambda e^t + 1): coefficient n is the twisted Euler number E_n(lambda).
// Requires lambda + 1 to be a unit.
TruncatedEGF euler_egf(const PadicNumber& lambda, int order);

// 2 sum_{a<F} e^{at} (-1)^a chi(a) / (e^{Ft} + 1): coefficient n is the
// generalized Euler number E_{n,chi} for chi mod F (F odd, coprime to p).
TruncatedEGF generalized_euler_egf(const DirichletCharacter& chi, int order);

}  // namespace peuler
