#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturmkit/mat2.hpp"
#include "sturmkit/real.hpp"

namespace sturmkit {

// Eventually periodic continued fraction in canonical form: shortest
// preperiod, primitive period, and no finite expansion ending in 1 (except
// [1] itself). An empty period means the value is rational.
struct ContinuedFraction {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool is_finite() const { return period.empty(); }
    bool operator==(const ContinuedFraction& o) const = default;

    // digits 0..n-1 of the expansion (unrolling the period)
    std::vector<Int> digits(size_t n) const;
    std::string str() const;  // "[c0; c1, (p1, p2)]"
};

// First n partial quotients; shorter if the value is rational with fewer
// digits. Works on every basis kind (formal via interval refinement).
std::vector<Int> expand_prefix(const RealValue& x, size_t n);

// Exact eventually periodic expansion of a rational or quadratic value,
// detected by cycle detection on the reduced-surd state.
ContinuedFraction expand_periodic(const RealValue& x);

// Value of a canonical continued fraction: a rational (rational basis) or
// the quadratic surd solving the periodic fixed-point equation.
RealValue from_cf(const ContinuedFraction& cf);

// Product of digit matrices [[a,1],[1,0]]; maps the tail to the full number.
Mat2 convergent_matrix(const std::vector<Int>& digits);

// Complete quotients x_0 = x, x_{k+1} = 1/(x_k - floor(x_k)) while defined.
std::vector<RealValue> complete_quotients(const RealValue& x, size_t count);

// True when the primitive period cycles agree up to rotation (same CF tail
// set); both inputs must be eventually periodic with nonempty period.
bool same_period_cycle(const ContinuedFraction& a, const ContinuedFraction& b);

}  // namespace sturmkit
