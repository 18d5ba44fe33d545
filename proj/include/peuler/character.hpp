#pragma once

#include <string>
#include <vector>

#include "peuler/padic.hpp"

namespace peuler {

enum class CharacterKind { trivial, quadratic, teichmuller_power };

// A Dirichlet character mod F with values realized inside Z_p: +-1 for the
// trivial/quadratic kinds, and Teichmuller-lifted roots of unity of order
// dividing gcd(F-1, p-1) for the teichmuller_power kind.  F is odd and
// coprime to p; chi(a) = 0 exactly when gcd(a, F) > 1, and evaluation
// extends to all of X by reduction mod F.  Primitivity is not checked: chi
// is used as a character mod F verbatim.
class DirichletCharacter {
public:
    i64 modulus() const { return modulus_; }
    i64 prime() const { return p_; }
    int prec() const { return prec_; }
    // parseable spec string, e.g. "quad:3", "trivial:1", "teich^2:7"
    const std::string& label() const { return label_; }

    // chi(x) for any integer x, reduced mod F
    const PadicNumber& at(i64 x) const {
        i64 r = x % modulus_;
        if (r < 0) r += modulus_;
        return values_[size_t(r)];
    }
    const std::vector<PadicNumber>& table() const { return values_; }

    friend DirichletCharacter make_character(CharacterKind kind, i64 modulus, i64 p, int prec,
                                             int power);
    friend DirichletCharacter compose(const DirichletCharacter& a, const DirichletCharacter& b);

private:
    DirichletCharacter(i64 modulus, i64 p, int prec, std::string label,
                       std::vector<PadicNumber> values)
        : modulus_(modulus), p_(p), prec_(prec), label_(std::move(label)),
          values_(std::move(values)) {}

    i64 modulus_;
    i64 p_;
    int prec_;
    std::string label_;
    std::vector<PadicNumber> values_;
};

// Builds the value table for a character mod `modulus` (odd, coprime to p).
// kind quadratic requires an odd prime modulus (Legendre symbol); kind
// teichmuller_power requires an odd prime modulus and yields chi_1^power
// where chi_1 generates the order-gcd(F-1, p-1) cyclic group of characters
// mod F with values in Z_p.  `power` is ignored for the other kinds.
DirichletCharacter make_character(CharacterKind kind, i64 modulus, i64 p, int prec,
                                  int power = 0);

// Product character mod F1*F2 for coprime moduli (CRT composition).
DirichletCharacter compose(const DirichletCharacter& a, const DirichletCharacter& b);

}  // namespace peuler
