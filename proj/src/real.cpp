#include "sturmkit/real.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sturmkit {

RealValue::RealValue(BasisPtr basis, std::vector<Rat> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
    if (!basis_) throw Error("RealValue: null basis");
    if (static_cast<int>(coords_.size()) != basis_->rank()) throw RankMismatch();
}

RealValue RealValue::make(const BasisPtr& basis, std::vector<Rat> coords) {
    return RealValue(basis, std::move(coords));
}

RealValue RealValue::zero(const BasisPtr& basis) {
    return RealValue(basis, std::vector<Rat>(basis->rank(), Rat(0)));
}

RealValue RealValue::one(const BasisPtr& basis) {
    return from_rat(basis, Rat(1));
}

RealValue RealValue::from_rat(const BasisPtr& basis, const Rat& q) {
    std::vector<Rat> c(basis->rank(), Rat(0));
    c[0] = q;
    return RealValue(basis, std::move(c));
}

bool RealValue::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool RealValue::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat RealValue::as_rational() const {
    if (!is_rational()) throw Error("as_rational: value is irrational");
    return coords_[0];
}

RealValue RealValue::operator-() const {
    std::vector<Rat> c(coords_);
    for (Rat& x : c) x = -x;
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator+(const RealValue& o) const {
    require_same_basis(*this, o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator-(const RealValue& o) const {
    require_same_basis(*this, o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator*(const Rat& q) const {
    std::vector<Rat> c(coords_);
    for (Rat& x : c) x *= q;
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator+(const Rat& q) const {
    std::vector<Rat> c(coords_);
    c[0] += q;
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator-(const Rat& q) const {
    std::vector<Rat> c(coords_);
    c[0] -= q;
    return RealValue(basis_, std::move(c));
}

RealValue RealValue::operator*(const RealValue& o) const {
    require_same_basis(*this, o);
    switch (basis_->kind()) {
        case BasisKind::rational:
            return RealValue(basis_, {coords_[0] * o.coords_[0]});
        case BasisKind::quadratic: {
            const Rat& x1 = coords_[0];
            const Rat& y1 = coords_[1];
            const Rat& x2 = o.coords_[0];
            const Rat& y2 = o.coords_[1];
            Rat d(basis_->d());
            return RealValue(basis_, {x1 * x2 + y1 * y2 * d, x1 * y2 + x2 * y1});
        }
        case BasisKind::formal:
            if (o.is_rational()) return *this * o.coords_[0];
            if (is_rational()) return o * coords_[0];
            throw FormalBasisUnsupported("multiplication of formal irrationals leaves the basis");
    }
    throw Error("unreachable");
}

RealValue RealValue::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    switch (basis_->kind()) {
        case BasisKind::rational:
            return RealValue(basis_, {Rat(1) / coords_[0]});
        case BasisKind::quadratic: {
            // 1/(x + y*sqrt(D)) = (x - y*sqrt(D)) / (x^2 - y^2 D)
            const Rat& x = coords_[0];
            const Rat& y = coords_[1];
            Rat norm = x * x - y * y * Rat(basis_->d());
            return RealValue(basis_, {x / norm, -y / norm});
        }
        case BasisKind::formal:
            if (is_rational()) {
                std::vector<Rat> c(coords_.size(), Rat(0));
                c[0] = Rat(1) / coords_[0];
                return RealValue(basis_, std::move(c));
            }
            throw FormalBasisUnsupported("inverse of a formal irrational leaves the basis");
    }
    throw Error("unreachable");
}

RealValue RealValue::operator/(const RealValue& o) const {
    if (o.is_rational()) {
        if (o.coords_[0] == 0) throw Error("division by zero");
        return *this * (Rat(1) / o.coords_[0]);
    }
    return *this * o.inverse();
}

bool RealValue::operator==(const RealValue& o) const {
    return same_basis(basis_, o.basis_) && coords_ == o.coords_;
}

std::string RealValue::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << rat_str(coords_[i]);
    }
    out << "]";
    return out.str();
}

double RealValue::approx() const {
    switch (basis_->kind()) {
        case BasisKind::rational:
            return coords_[0].get_d();
        case BasisKind::quadratic:
            return coords_[0].get_d() + coords_[1].get_d() * std::sqrt(basis_->d().get_d());
        case BasisKind::formal: {
            double v = 0;
            for (size_t i = 0; i < coords_.size(); ++i) {
                Interval iv = basis_->elements()[i].enclosure(
                    std::min(18, basis_->precision_cap()));
                v += coords_[i].get_d() * (iv.lo.get_d() + iv.hi.get_d()) / 2;
            }
            return v;
        }
    }
    return 0;
}

void require_same_basis(const RealValue& x, const RealValue& y) {
    if (!same_basis(x.basis(), y.basis())) throw BasisMismatch();
}

namespace {

// Exact sign of x + y*sqrt(d), d > 0 non-square; no floating point.
int quadratic_sign(const Rat& x, const Rat& y, const Int& d) {
    if (y == 0) return sgn(x);
    if (x == 0) return sgn(y);
    int sx = sgn(x), sy = sgn(y);
    if (sx == sy) return sx;
    // mixed signs: compare x^2 against y^2 d
    int c = cmp(x * x, y * y * Rat(d));
    if (c == 0) throw Error("quadratic_sign: sqrt(d) rational, d not squarefree?");
    return c > 0 ? sx : sy;
}

// Enclosure of a formal value at the given precision.
Interval formal_enclosure(const RealValue& v, int digits) {
    Interval acc{Rat(0), Rat(0)};
    const auto& elems = v.basis()->elements();
    for (size_t i = 0; i < v.coords().size(); ++i) {
        const Rat& c = v.coord(i);
        if (c == 0) continue;
        Interval e = elems[i].enclosure(digits);
        if (c > 0) {
            acc.lo += c * e.lo;
            acc.hi += c * e.hi;
        } else {
            acc.lo += c * e.hi;
            acc.hi += c * e.lo;
        }
    }
    return acc;
}

int formal_sign(const RealValue& v) {
    if (v.is_zero()) return 0;
    // Nonzero coordinates + declared independence mean the value is nonzero,
    // so refinement terminates unless a decimal element runs out of digits.
    const int cap = v.basis()->precision_cap();
    for (int digits = 12; digits <= cap; digits = digits * 2 > cap ? cap : digits * 2) {
        Interval iv = formal_enclosure(v, digits);
        int s = iv.sign();
        if (s != 0) return s;
        if (digits == cap) break;
    }
    throw PrecisionExhausted("formal comparison undecided at precision cap");
}

}  // namespace

int sign(const RealValue& x) {
    switch (x.basis()->kind()) {
        case BasisKind::rational:
            return sgn(x.coord(0));
        case BasisKind::quadratic:
            return quadratic_sign(x.coord(0), x.coord(1), x.basis()->d());
        case BasisKind::formal:
            return formal_sign(x);
    }
    throw Error("unreachable");
}

Ordering compare(const RealValue& x, const RealValue& y) {
    require_same_basis(x, y);
    RealValue diff = x - y;
    if (diff.is_zero()) return Ordering::EQ;
    int s = sign(diff);
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

Int floor(const RealValue& x) {
    switch (x.basis()->kind()) {
        case BasisKind::rational:
            return rat_floor(x.coord(0));
        case BasisKind::quadratic: {
            const Rat& p = x.coord(0);
            const Rat& q = x.coord(1);
            if (q == 0) return rat_floor(p);
            // write x = (A + B*sqrt(d)) / C with integers, C > 0
            Int C = lcm(p.get_den(), q.get_den());
            Int A = p.get_num() * (C / p.get_den());
            Int B = q.get_num() * (C / q.get_den());
            Int t = isqrt(B * B * x.basis()->d());  // floor of |B| sqrt(d)
            // sqrt is irrational, so floor(+-t') needs no tie handling
            Int num = B > 0 ? Int(A + t) : Int(A - t - 1);
            return floor_div(num, C);
        }
        case BasisKind::formal: {
            if (x.is_rational()) return rat_floor(x.coord(0));
            const int cap = x.basis()->precision_cap();
            for (int digits = 12; digits <= cap; digits = digits * 2 > cap ? cap : digits * 2) {
                Interval iv = formal_enclosure(x, digits);
                Int flo = rat_floor(iv.lo);
                Int fhi = rat_floor(iv.hi);
                if (flo == fhi) return flo;
                if (digits == cap) break;
            }
            throw PrecisionExhausted("formal floor undecided: value straddles an integer at precision cap");
        }
    }
    throw Error("unreachable");
}

RealValue frac(const RealValue& x) {
    return x - Rat(floor(x));
}

MinimalQuadratic minimal_quadratic(const RealValue& x) {
    if (x.basis()->kind() != BasisKind::quadratic) throw RationalInput("minimal_quadratic: quadratic basis required");
    const Rat& p = x.coord(0);
    const Rat& q = x.coord(1);
    if (q == 0) throw RationalInput("minimal_quadratic: input is rational");
    // (x - p)^2 = q^2 d: x^2 - 2 p x + (p^2 - q^2 d) = 0, clear denominators
    Rat b_r = -2 * p;
    Rat c_r = p * p - q * q * Rat(x.basis()->d());
    Int L = lcm(Int(1), lcm(b_r.get_den(), c_r.get_den()));
    Int a = L;
    Int b = b_r.get_num() * (L / b_r.get_den());
    Int c = c_r.get_num() * (L / c_r.get_den());
    Int g = gcd(a, gcd(b, c));
    a /= g;
    b /= g;
    c /= g;
    if (a < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    MinimalQuadratic m{a, b, c, b * b - 4 * a * c};
    if (m.delta <= 0 || is_perfect_square(m.delta)) throw Error("minimal_quadratic: discriminant not a positive non-square");
    return m;
}

RealValue conjugate(const RealValue& x) {
    if (x.basis()->kind() != BasisKind::quadratic) throw Error("conjugate: quadratic basis required");
    return RealValue::make(x.basis(), {x.coord(0), -x.coord(1)});
}

}  // namespace sturmkit
