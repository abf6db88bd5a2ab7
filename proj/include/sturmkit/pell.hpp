#pragma once

#include <vector>

#include "sturmkit/mat2.hpp"
#include "sturmkit/real.hpp"

namespace sturmkit {

// Integral solution of x^2 - s^2 * delta = 4 * sign * m (x stored as the "2t"
// of the stabilizer parametrization; its parity is unconstrained).
struct PellSolution {
    Int x;
    Int s;
    int sign;  // +1 or -1

    bool operator==(const PellSolution&) const = default;
};

// Fundamental unit of the order of discriminant delta as a +-4 Pell solution:
// the smallest (x + s*sqrt(delta))/2 > 1 with x^2 - s^2 delta = +-4.
// delta must be positive, congruent to 0 or 1 mod 4, and not a square.
PellSolution pell_unit(const Int& delta);

// Fundamental +4 solution (norm-one unit): pell_unit squared when the
// fundamental has norm -1.
PellSolution pell_plus4_unit(const Int& delta);

// Complete finite set of class representatives of x^2 - s^2 delta = +-4m
// modulo the action of the +4 fundamental unit (and global sign). Each class
// is reported by its canonical representative: the associate (x + s sqrt)/2
// in [1, unit). Empty when no solutions exist.
std::vector<PellSolution> pell_fundamental(const Int& delta, const Int& m);

// Unique primitive hyperbolic matrix in SL_2(Z) fixing x, built from
// minimal_quadratic(x) and the fundamental +4 Pell solution. Positive trace,
// determinant one, apply(F, x) == x.
Mat2 stabilizer_matrix(const RealValue& x);

// Primitive generator of the full GL_2(Z) stabilizer of x (determinant -1
// when the fundamental unit has norm -1).
Mat2 primitive_stabilizer(const RealValue& x);

// t*I + s*(-b/2 -c / a b/2) over Q; fixes x, det = t^2 - s^2 delta / 4.
Mat2 rational_stabilizer_element(const RealValue& x, const Rat& t, const Rat& s);

}  // namespace sturmkit
