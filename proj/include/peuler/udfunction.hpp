#pragma once

#include <memory>
#include <optional>
#include <string>

#include "peuler/character.hpp"
#include "peuler/padic.hpp"

namespace peuler {

// A closed DSL term denoting a function on {0, 1, 2, ...} (and by the usual
// density argument on Z_p, or on X when characters are involved), built from
// constants, monomials, lambda^x twists, character twists, shifts, sums,
// products and scalar multiples.  Terms are immutable and cheap to share.
//
// Every constructor in the closed class preserves uniform differentiability
// over its natural domain; note that lambda^x is a genuinely uniformly
// differentiable function of x in Z_p only for lambda = 1 (mod p), and a
// character factor chi(x) is continuous on X_F, not on Z_p.  The summation
// operators accept any term; the stabilization check in fermionic_integral
// is what certifies (or loudly rejects) the limit.
class UDFunction {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Kind { kConst, kMonomial, kTwist, kCharacter, kSum, kProduct, kScale };

    struct Node {
        Kind kind;
        std::optional<PadicNumber> scalar;         // kConst / kTwist / kScale
        int degree = 0;                            // kMonomial
        i64 offset = 0;                            // kMonomial, kCharacter: arg is x+offset
        std::optional<DirichletCharacter> chi;     // kCharacter
        NodePtr lhs, rhs;                          // children (kScale uses lhs)
    };

    static UDFunction constant(const PadicNumber& c);
    // x^degree (degree >= 0; degree 0 is the constant 1)
    static UDFunction monomial(i64 p, int prec, int degree);
    // lambda^x for lambda in Z_p (valuation >= 0)
    static UDFunction twist(const PadicNumber& lambda);
    static UDFunction character(const DirichletCharacter& chi);
    static UDFunction sum(const UDFunction& a, const UDFunction& b);
    static UDFunction product(const UDFunction& a, const UDFunction& b);
    static UDFunction scale(const PadicNumber& c, const UDFunction& f);

    i64 prime() const { return p_; }
    // minimum absolute precision across all scalars of the term
    int prec() const { return prec_; }

    // exact evaluation at a non-negative integer point
    PadicNumber eval(i64 x) const;

    // DSL text form, parseable by parse_udfunction
    std::string str() const;

    const NodePtr& root() const { return root_; }

    friend UDFunction shift(const UDFunction& f, i64 n);

private:
    UDFunction(NodePtr root, i64 p, int prec) : root_(std::move(root)), p_(p), prec_(prec) {}

    NodePtr root_;
    i64 p_;
    int prec_;
};

// The translated term x |-> f(x + n), normalized: shifts distribute through
// sums/products/scales, move into monomial and character offsets, and pull
// a lambda^n factor out of twists.
UDFunction shift(const UDFunction& f, i64 n);

}  // namespace peuler
