#pragma once

#include <stdexcept>

#include "ghost/kostant.hpp"
#include "ghost/root_system.hpp"

namespace ghost {

// Weight bookkeeping for the boundary degeneration.  All weights here are
// weights of the similitude torus, affine in (a, c); the similitude
// character always enters through -2 kappa.

// A class in H^q of the full variety would be pure of this weight.
inline AffineForm middle_weight(const SymbolicWeight& lambda, long long degree) {
    return AffineForm::constant(lambda.kappa.nvars(), Rational(degree)) -
           Rational(2) * lambda.kappa;
}

// Weight of the boundary-face contribution attached to w * lambda.
inline AffineForm boundary_face_weight(const SymbolicWeight& wdot) {
    return Rational(-2) * wdot.kappa + Rational(-2) * wdot.eps.at(0);
}

// Upper bound for the weight of H^degree of the rank-i Levi factor at
// w * lambda; the rank-two face mixes the first two coordinates.
inline AffineForm levi_weight_bound(ParabolicId id, long long degree, const SymbolicWeight& wdot) {
    AffineForm base = AffineForm::constant(wdot.kappa.nvars(), Rational(degree)) -
                      Rational(2) * wdot.kappa;
    switch (id) {
        case ParabolicId::P1:
            return base - Rational(2) * wdot.eps.at(0);
        case ParabolicId::P2:
            return base - wdot.eps.at(0) - wdot.eps.at(1);
        default:
            throw std::invalid_argument("weight bound applies to the maximal parabolics only");
    }
}

// Boundary contributions of w sit in degree length(w) + 1.
inline long long cohomological_degree(int len) { return len + 1; }

// boundary_face_weight minus middle_weight in the contribution's own degree;
// the similitude part cancels, leaving -2 n1(w * lambda) - length(w) - 1.
inline AffineForm weight_offset_from_middle(const SymbolicWeight& wdot, int len) {
    AffineForm offset = Rational(-2) * wdot.eps.at(0);
    offset -= AffineForm::constant(wdot.kappa.nvars(), Rational(cohomological_degree(len)));
    return offset;
}

}  // namespace ghost
