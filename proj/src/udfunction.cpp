#include "peuler/udfunction.hpp"

#include <algorithm>

namespace peuler {

namespace {

constexpr int kMaxDegree = 64;

std::string scalar_text(const PadicNumber& c) {
    // residue representative as DSL rational text: unit*p^val, val<0 as a
    // fraction; re-parsing yields the same value at this precision
    if (c.is_zero()) return "0";
    i64 p = c.prime();
    int v = c.valuation();
    u64 u = c.unit();
    if (v >= 0) {
        u64 r = u;
        for (int i = 0; i < v; ++i) r *= u64(p);
        return std::to_string(r);
    }
    u64 den = 1;
    for (int i = 0; i < -v; ++i) den *= u64(p);
    return std::to_string(u) + "/" + std::to_string(den);
}

}  // namespace

UDFunction UDFunction::constant(const PadicNumber& c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kConst;
    n->scalar = c;
    return UDFunction(n, c.prime(), c.prec());
}

UDFunction UDFunction::monomial(i64 p, int prec, int degree) {
    if (degree < 0 || degree > kMaxDegree) throw DomainError("monomial degree out of range");
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kMonomial;
    n->degree = degree;
    n->offset = 0;
    return UDFunction(n, p, prec);
}

UDFunction UDFunction::twist(const PadicNumber& lambda) {
    if (!lambda.is_padic_integer())
        throw DomainError("twist base must lie in Z_p (valuation >= 0)");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kTwist;
    n->scalar = lambda;
    return UDFunction(n, lambda.prime(), lambda.prec());
}

UDFunction UDFunction::character(const DirichletCharacter& chi) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kCharacter;
    n->chi = chi;
    n->offset = 0;
    return UDFunction(n, chi.prime(), chi.prec());
}

UDFunction UDFunction::sum(const UDFunction& a, const UDFunction& b) {
    if (a.p_ != b.p_) throw DomainError("mixed primes in DSL term");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kSum;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return UDFunction(n, a.p_, std::min(a.prec_, b.prec_));
}

UDFunction UDFunction::product(const UDFunction& a, const UDFunction& b) {
    if (a.p_ != b.p_) throw DomainError("mixed primes in DSL term");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kProduct;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return UDFunction(n, a.p_, std::min(a.prec_, b.prec_));
}

UDFunction UDFunction::scale(const PadicNumber& c, const UDFunction& f) {
    if (c.prime() != f.p_) throw DomainError("mixed primes in DSL term");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kScale;
    n->scalar = c;
    n->lhs = f.root_;
    return UDFunction(n, f.p_, std::min(c.prec(), f.prec_));
}

namespace {

PadicNumber eval_node(const UDFunction::Node& n, i64 x, i64 p, int prec) {
    using Kind = UDFunction::Kind;
    switch (n.kind) {
        case Kind::kConst:
            return *n.scalar;
        case Kind::kMonomial:
            return PadicNumber::make(p, prec, x + n.offset).pow_int(u64(n.degree));
        case Kind::kTwist:
            return n.scalar->pow_int(u64(x));
        case Kind::kCharacter:
            return n.chi->at(x + n.offset);
        case Kind::kSum:
            return eval_node(*n.lhs, x, p, prec).add(eval_node(*n.rhs, x, p, prec));
        case Kind::kProduct:
            return eval_node(*n.lhs, x, p, prec).mul(eval_node(*n.rhs, x, p, prec));
        case Kind::kScale:
            return n.scalar->mul(eval_node(*n.lhs, x, p, prec));
    }
    throw DomainError("corrupt DSL term");
}

UDFunction::NodePtr shift_node(const UDFunction::NodePtr& n, i64 m, i64 p, int prec);

std::string node_text(const UDFunction::Node& n) {
    using Kind = UDFunction::Kind;
    switch (n.kind) {
        case Kind::kConst:
            return scalar_text(*n.scalar);
        case Kind::kMonomial: {
            std::string base = "x";
            if (n.degree != 1) base += "^" + std::to_string(n.degree);
            if (n.offset == 0) return base;
            return "shift(" + base + "," + std::to_string(n.offset) + ")";
        }
        case Kind::kTwist:
            return "twist(" + scalar_text(*n.scalar) + ")";
        case Kind::kCharacter: {
            // label forms: trivial:F, quad:F, teich^j:F; composed labels
            // have no grammar form and are emitted verbatim
            std::string label = n.chi->label();
            std::string inner = label;
            size_t colon = label.rfind(':');
            if (colon != std::string::npos) {
                std::string kind = label.substr(0, colon);
                std::string mod = label.substr(colon + 1);
                size_t caret = kind.find('^');
                if (caret != std::string::npos)
                    inner = kind.substr(0, caret) + "," + kind.substr(caret + 1) + "," + mod;
                else
                    inner = kind + "," + mod;
            }
            std::string base = "chi(" + inner + ")";
            if (n.offset == 0) return base;
            return "shift(" + base + "," + std::to_string(n.offset) + ")";
        }
        case Kind::kSum:
            return "(" + node_text(*n.lhs) + " + " + node_text(*n.rhs) + ")";
        case Kind::kProduct:
            return node_text(*n.lhs) + " * " + node_text(*n.rhs);
        case Kind::kScale:
            return scalar_text(*n.scalar) + " * " + node_text(*n.lhs);
    }
    return "?";
}

}  // namespace

PadicNumber UDFunction::eval(i64 x) const {
    if (x < 0) throw DomainError("DSL evaluation point must be non-negative");
    return eval_node(*root_, x, p_, prec_);
}

std::string UDFunction::str() const {
    return node_text(*root_);
}

namespace {

UDFunction::NodePtr shift_node(const UDFunction::NodePtr& n, i64 m, i64 p, int prec) {
    using Kind = UDFunction::Kind;
    using Node = UDFunction::Node;
    switch (n->kind) {
        case Kind::kConst:
            return n;
        case Kind::kMonomial: {
            auto c = std::make_shared<Node>(*n);
            c->offset += m;
            return c;
        }
        case Kind::kTwist: {
            // lambda^(x+m) = lambda^m * lambda^x
            auto t = std::make_shared<Node>(*n);
            auto s = std::make_shared<Node>();
            s->kind = Kind::kScale;
            s->scalar = n->scalar->pow_int(u64(m));
            s->lhs = t;
            return s;
        }
        case Kind::kCharacter: {
            auto c = std::make_shared<Node>(*n);
            c->offset += m;
            return c;
        }
        case Kind::kSum:
        case Kind::kProduct: {
            auto c = std::make_shared<Node>(*n);
            c->lhs = shift_node(n->lhs, m, p, prec);
            c->rhs = shift_node(n->rhs, m, p, prec);
            return c;
        }
        case Kind::kScale: {
            auto c = std::make_shared<Node>(*n);
            c->lhs = shift_node(n->lhs, m, p, prec);
            return c;
        }
    }
    throw DomainError("corrupt DSL term");
}

}  // namespace

UDFunction shift(const UDFunction& f, i64 n) {
    if (n < 0) throw DomainError("shift amount must be non-negative");
    if (n == 0) return f;
    return UDFunction(shift_node(f.root(), n, f.prime(), f.prec()), f.prime(), f.prec());
}

}  // namespace peuler
