#pragma once

#include "peuler/padic.hpp"
#include "peuler/udfunction.hpp"

namespace peuler {

// Witness of how an integral value was truncated.  achieved_prec never
// exceeds the working precision of the inputs; stabilized records that the
// accepted partial sum agreed with the next one at achieved_prec.
struct TruncationReport {
    int n_used = 0;
    int achieved_prec = 0;
    bool stabilized = false;
};

struct IntegralResult {
    PadicNumber value;
    TruncationReport report;
};

// S_N = sum_{x=0}^{p^N - 1} (-1)^x f(x), exact at the term's working
// precision.  The sum is evaluated in chunks reduced associatively; exact
// arithmetic makes the result independent of the execution schedule.
PadicNumber fermionic_sum(const UDFunction& f, int N);

// Alternating sum over the extended domain: sum_{x=0}^{d p^N - 1} (-1)^x f(x)
// for d odd and coprime to p, so the summation length stays odd.
PadicNumber fermionic_sum_X(const UDFunction& f, i64 d, int N);

// mu_{-q} partial sum (1/[p^N]_{-q}) sum_{x<p^N} (-q)^x f(x), for q in the
// region |q-1|_p < 1 where [p^N]_{-q} = (1+q^{p^N})/(1+q) is a unit.
// q = 1 degenerates to fermionic_sum.
PadicNumber fermionic_q_sum(const UDFunction& f, const PadicNumber& q, int N);

// The fermionic invariant integral I_{-1}(f) as a stabilized truncated sum.
//
// Truncation rule: start at N = working_prec + guard_digits and accept S_N
// once S_N = S_{N+1} (mod p^working_prec), recording the witness.  The
// rationale: for odd n = p^N the translation identity gives
// S_N = (I_{-1}(f) + I_{-1}(f(. + p^N)))/2, and for the supported term
// class ||f(. + p^N) - f|| shrinks at least linearly in N (polynomials gain
// a factor p^N termwise; principal twists gain p^(N+1) through
// lambda^(p^N) -> 1; character factors are p^N-periodic over X).  The
// stability check is mandatory: a term outside the class (e.g. a character
// summed over Z_p instead of X, or a non-principal twist that drifts to its
// Teichmuller representative) either fails to stabilize and raises
// ConvergenceError, or stabilizes to the limit the sums actually have.
IntegralResult fermionic_integral(const UDFunction& f, const PrecisionPolicy& policy);

// Same driver over X_d (summation lengths d*p^N); d = 1 is the Z_p case.
IntegralResult fermionic_integral_X(const UDFunction& f, i64 d, const PrecisionPolicy& policy);

// q-bracket [x]_q = (1 - q^x)/(1 - q) = 1 + q + ... + q^(x-1), computed by
// binary splitting so no division by the non-unit 1 - q occurs.
PadicNumber q_bracket(u64 x, const PadicNumber& q);

}  // namespace peuler
