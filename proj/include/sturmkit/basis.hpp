#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sturmkit/numeric.hpp"

namespace sturmkit {

// Closed interval with rational endpoints.
struct Interval {
    Rat lo, hi;

    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

// Element of a formal basis. Either an exact surd r + s*sqrt(n) (refinable to
// any precision) or a decimal enclosure [lo, hi] certified to a fixed number
// of digits. Elements are declared Q-linearly independent together with 1;
// that independence is an axiom of the basis, not something we check.
class FormalElement {
public:
    enum class Kind { one, surd, decimal };

    static FormalElement one();
    static FormalElement surd(Rat r, Rat s, Int n);  // r + s*sqrt(n), n >= 2 non-square
    static FormalElement decimal(Rat lo, Rat hi, int digits);

    Kind kind() const { return kind_; }
    // Enclosure with ~digits decimal digits of width; throws PrecisionExhausted
    // when a decimal element cannot be refined that far.
    Interval enclosure(int digits) const;
    bool is_constant_one() const { return kind_ == Kind::one; }

    bool operator==(const FormalElement& o) const;
    std::string describe() const;

    Rat r_, s_;
    Int n_;
    Rat lo_, hi_;
    int digits_ = 0;

private:
    FormalElement() = default;
    Kind kind_ = Kind::one;
};

enum class BasisKind { rational, quadratic, formal };

// Ambient Q-vector space in which RealValues live: Q, Q(sqrt(D)), or a formal
// space spanned by 1 and declared-independent elements.
class Basis {
public:
    static std::shared_ptr<const Basis> rational();
    static std::shared_ptr<const Basis> quadratic(const Int& d);
    static std::shared_ptr<const Basis> formal(std::vector<FormalElement> elems,
                                               int precision_cap = 10000);

    BasisKind kind() const { return kind_; }
    int rank() const;
    const Int& d() const { return d_; }
    const std::vector<FormalElement>& elements() const { return elems_; }
    int precision_cap() const { return precision_cap_; }

    bool operator==(const Basis& o) const;
    bool operator!=(const Basis& o) const { return !(*this == o); }
    std::string describe() const;

private:
    Basis() = default;
    BasisKind kind_ = BasisKind::rational;
    Int d_ = 0;
    std::vector<FormalElement> elems_;
    int precision_cap_ = 10000;
};

using BasisPtr = std::shared_ptr<const Basis>;

inline bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace sturmkit
