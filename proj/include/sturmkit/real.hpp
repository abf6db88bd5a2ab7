#pragma once

#include <string>
#include <vector>

#include "sturmkit/basis.hpp"
#include "sturmkit/errors.hpp"
#include "sturmkit/numeric.hpp"

namespace sturmkit {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// Exact real number as rational coordinates over a declared basis.
// Immutable after construction; all operations are pure.
class RealValue {
public:
    RealValue() = default;
    RealValue(BasisPtr basis, std::vector<Rat> coords);

    static RealValue make(const BasisPtr& basis, std::vector<Rat> coords);
    static RealValue zero(const BasisPtr& basis);
    static RealValue one(const BasisPtr& basis);
    static RealValue from_rat(const BasisPtr& basis, const Rat& q);  // promotion helper

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& coord(size_t i) const { return coords_[i]; }

    bool is_zero() const;
    bool is_rational() const;   // all non-constant coordinates vanish
    bool is_irrational() const { return !is_rational(); }
    Rat rational_part() const { return coords_[0]; }
    Rat as_rational() const;    // throws RationalInput misuse guard when irrational

    RealValue operator-() const;
    RealValue operator+(const RealValue& o) const;
    RealValue operator-(const RealValue& o) const;
    RealValue operator*(const Rat& q) const;
    RealValue operator+(const Rat& q) const;
    RealValue operator-(const Rat& q) const;

    // Field operations; quadratic and rational bases only.
    RealValue operator*(const RealValue& o) const;
    RealValue inverse() const;
    RealValue operator/(const RealValue& o) const;

    bool operator==(const RealValue& o) const;
    bool operator!=(const RealValue& o) const { return !(*this == o); }

    std::string str() const;   // canonical textual form, doubles as hash key
    double approx() const;

private:
    BasisPtr basis_;
    std::vector<Rat> coords_;
};

// Exact sign of x - y; shared basis required. Formal bases resolve by interval
// refinement and may throw PrecisionExhausted.
Ordering compare(const RealValue& x, const RealValue& y);
int sign(const RealValue& x);

inline bool lt(const RealValue& x, const RealValue& y) { return compare(x, y) == Ordering::LT; }
inline bool le(const RealValue& x, const RealValue& y) { return compare(x, y) != Ordering::GT; }
inline bool gt(const RealValue& x, const RealValue& y) { return compare(x, y) == Ordering::GT; }
inline bool ge(const RealValue& x, const RealValue& y) { return compare(x, y) != Ordering::LT; }

Int floor(const RealValue& x);
RealValue frac(const RealValue& x);  // x - floor(x)

struct MinimalQuadratic {
    Int a, b, c;  // primitive, a > 0, a*x^2 + b*x + c = 0
    Int delta;    // b^2 - 4ac, positive non-square
};

// Minimal integer polynomial of a quadratic irrational.
MinimalQuadratic minimal_quadratic(const RealValue& x);

// Galois conjugate x + y*sqrt(D) -> x - y*sqrt(D); quadratic basis only.
RealValue conjugate(const RealValue& x);

void require_same_basis(const RealValue& x, const RealValue& y);

}  // namespace sturmkit
