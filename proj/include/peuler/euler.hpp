#pragma once

#include <string>
#include <utility>
#include <vector>

#include "peuler/character.hpp"
#include "peuler/egf.hpp"
#include "peuler/measure.hpp"
#include "peuler/padic.hpp"

namespace peuler {

enum class EulerFamily { twisted, polynomial, higher_order, generalized, bernoulli_analogue };
enum class ComputeRoute { recurrence, egf, integral };

const char* family_name(EulerFamily f);
const char* route_name(ComputeRoute r);

// A computed sequence of one family, with enough provenance to reproduce
// it: route and parameters determine the values at achieved_prec.
struct EulerTable {
    EulerFamily family;
    ComputeRoute route;
    i64 p = 0;
    int achieved_prec = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<PadicNumber> values;  // index n
};

// Twisted Euler numbers E_n(lambda) from the recurrence forced by
// (lambda e^t + 1) sum E_n t^n/n! = 2:
//   E_0 = 2/(lambda+1),  E_n = -lambda/(lambda+1) sum_{k<n} C(n,k) E_k.
// Requires lambda + 1 to be a unit.
EulerTable euler_numbers(const PadicNumber& lambda, int max_n);

// Same family through the series route (coefficients of 2/(lambda e^t+1)).
EulerTable euler_numbers_egf(const PadicNumber& lambda, int max_n);

// Measure route: E_n(lambda) as the stabilized alternating sums of
// lambda^x x^n.  The sums converge to E_n(lambda) for principal lambda
// (lambda = 1 mod p); for other units they converge to the Teichmuller-
// twisted value (1 + omega(lambda))/2 * E_n(lambda) instead, which is what
// this route faithfully reports.
EulerTable euler_numbers_integral(const PadicNumber& lambda, int max_n,
                                  const PrecisionPolicy& policy);

// E_n(lambda: x) = sum_k C(n,k) E_k(lambda) x^(n-k)
PadicNumber euler_polynomial(const PadicNumber& lambda, const PadicNumber& x, int n);

// table of E_n(lambda: x), n = 0..max_n
EulerTable euler_polynomial_table(const PadicNumber& lambda, const PadicNumber& x, int max_n);

// Distribution relation at conductor F (odd, coprime to p):
//   E_n(lambda: x) = F^n sum_{a<F} (-1)^a lambda^a E_n(lambda^F: (x+a)/F).
// distribution_sides returns (lhs, rhs); distribution_check returns true
// iff they agree at the certifiable precision.
std::pair<PadicNumber, PadicNumber> distribution_sides(const PadicNumber& lambda,
                                                       const PadicNumber& x, int n, i64 F);
bool distribution_check(const PadicNumber& lambda, const PadicNumber& x, int n, i64 F);

// Higher-order polynomials: coefficients of (2/(lambda e^t+1))^r e^{xt}.
EulerTable euler_higher_order(const PadicNumber& lambda, int r, const PadicNumber& x, int max_n);

// Generalized Euler numbers attached to chi (series route).
EulerTable generalized_euler_numbers(const DirichletCharacter& chi, int max_n);

// Measure route over X: stabilized alternating sums of chi(x) x^n with
// summation lengths F p^N.
EulerTable generalized_euler_numbers_integral(const DirichletCharacter& chi, int max_n,
                                              const PrecisionPolicy& policy);

// Bernoulli analogue B_m(w) from (w e^t - 1) sum B_m t^m/m! = t:
//   B_0 = 0,  B_1 = 1/(w-1),  B_n = -w/(w-1) sum_{k<n} C(n,k) B_k  (n >= 2).
// Requires w - 1 to be a unit (w = 1, the classical degeneration, is out
// of scope and rejected).
EulerTable bernoulli_analogue(const PadicNumber& w, int max_n);

}  // namespace peuler
