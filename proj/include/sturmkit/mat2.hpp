#pragma once

#include <array>
#include <string>

#include "sturmkit/real.hpp"

namespace sturmkit {

// 2x2 rational matrix with nonzero determinant, acting on RP^1 by linear
// fractional transformations.
struct Mat2 {
    Rat m11, m12, m21, m22;

    Mat2() : m11(1), m12(0), m21(0), m22(1) {}
    Mat2(Rat a, Rat b, Rat c, Rat d);

    static Mat2 identity() { return Mat2(); }
    static Mat2 from_ints(long a, long b, long c, long d) {
        return Mat2(Rat(a), Rat(b), Rat(c), Rat(d));
    }
    static Mat2 diag(const Rat& a, const Rat& d) { return Mat2(a, Rat(0), Rat(0), d); }

    Rat det() const { return m11 * m22 - m12 * m21; }
    Rat trace() const { return m11 + m22; }
    Mat2 inverse() const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const { return Mat2(-m11, -m12, -m21, -m22); }
    bool operator==(const Mat2& o) const = default;

    bool is_integral() const;
    // Projective normalization: divide by content, make the first nonzero
    // entry positive. Deterministic PGL_2 representative.
    Mat2 projective_normal() const;
    bool projectively_equal(const Mat2& o) const {
        return projective_normal() == o.projective_normal();
    }

    Mat2 pow(long k) const;  // k may be negative
    std::string str() const;
};

// Moebius action (m11*x + m12) / (m21*x + m22); throws PoleHit on a zero
// denominator.
RealValue apply(const Mat2& m, const RealValue& x);

// Smith-style factorization M = U * diag(m, 1) * V with U, V in SL_2(Z) and
// m = det(M) (unique up to units, so |m| = |det M|). Requires integer
// entries, det != 0, and globally coprime entries.
struct SmithFactorization {
    Mat2 u;
    Int m;
    Mat2 v;
};
SmithFactorization smith_factor(const Mat2& m);

}  // namespace sturmkit
