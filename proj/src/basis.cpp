#include "sturmkit/basis.hpp"

#include <sstream>

#include "sturmkit/errors.hpp"

namespace sturmkit {

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n <= 0) throw Error("squarefree_decompose: need n > 0");
    Int core = 1, square = 1, m = n;
    // Values like convergent-matrix discriminants are tiny cores times huge
    // squares, so once the small primes are gone the cofactor is usually a
    // perfect square; test for that before grinding through trial division.
    auto take_square = [&]() -> bool {
        if (m > 1 && is_perfect_square(m)) {
            square *= isqrt(m);
            m = 1;
            return true;
        }
        return m == 1;
    };
    for (Int p = 2; p * p <= m; ++p) {
        if (p > 10000 && take_square()) break;
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) square *= p;
        if (e % 2 == 1) core *= p;
        if (take_square()) break;
    }
    core *= m;
    return {core, square};
}

Rat rat_content(const std::vector<Rat>& values) {
    Int num = 0, den = 1;
    for (const Rat& v : values) {
        if (v == 0) continue;
        num = gcd(num, v.get_num());
        den = lcm(den, v.get_den());
    }
    if (num == 0) return Rat(0);
    return make_rat(num, den);
}

FormalElement FormalElement::one() {
    FormalElement e;
    e.kind_ = Kind::one;
    return e;
}

FormalElement FormalElement::surd(Rat r, Rat s, Int n) {
    if (n < 2 || is_perfect_square(n)) throw Error("FormalElement::surd: n must be >= 2 and non-square");
    if (s == 0) throw Error("FormalElement::surd: s must be nonzero");
    FormalElement e;
    e.kind_ = Kind::surd;
    e.r_ = std::move(r);
    e.s_ = std::move(s);
    e.n_ = std::move(n);
    return e;
}

FormalElement FormalElement::decimal(Rat lo, Rat hi, int digits) {
    if (lo > hi) throw Error("FormalElement::decimal: lo > hi");
    FormalElement e;
    e.kind_ = Kind::decimal;
    e.lo_ = std::move(lo);
    e.hi_ = std::move(hi);
    e.digits_ = digits;
    return e;
}

Interval FormalElement::enclosure(int digits) const {
    switch (kind_) {
        case Kind::one:
            return {Rat(1), Rat(1)};
        case Kind::decimal:
            // fixed certificate: no refinement beyond the stated digits
            return {lo_, hi_};
        case Kind::surd: {
            // floor(sqrt(n) * 10^digits) via integer sqrt
            Int scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
            Int f = isqrt(n_ * scale * scale);
            Rat lo = r_ + s_ * make_rat(f, scale);
            Rat hi = r_ + s_ * make_rat(f + 1, scale);
            if (s_ < 0) std::swap(lo, hi);
            return {lo, hi};
        }
    }
    throw Error("unreachable");
}

bool FormalElement::operator==(const FormalElement& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::one: return true;
        case Kind::surd: return r_ == o.r_ && s_ == o.s_ && n_ == o.n_;
        case Kind::decimal: return lo_ == o.lo_ && hi_ == o.hi_ && digits_ == o.digits_;
    }
    return false;
}

std::string FormalElement::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::one: out << "1"; break;
        case Kind::surd: out << rat_str(r_) << "+" << rat_str(s_) << "*sqrt(" << n_.get_str() << ")"; break;
        case Kind::decimal: out << "[" << rat_str(lo_) << "," << rat_str(hi_) << "]~" << digits_; break;
    }
    return out.str();
}

std::shared_ptr<const Basis> Basis::rational() {
    auto b = std::shared_ptr<Basis>(new Basis());
    b->kind_ = BasisKind::rational;
    return b;
}

std::shared_ptr<const Basis> Basis::quadratic(const Int& d) {
    if (d < 2) throw Error("Basis::quadratic: D must be >= 2");
    if (!is_squarefree(d)) throw Error("Basis::quadratic: D must be squarefree");
    auto b = std::shared_ptr<Basis>(new Basis());
    b->kind_ = BasisKind::quadratic;
    b->d_ = d;
    return b;
}

std::shared_ptr<const Basis> Basis::formal(std::vector<FormalElement> elems, int precision_cap) {
    if (elems.empty()) throw Error("Basis::formal: need at least the constant element");
    if (!elems.front().is_constant_one()) throw Error("Basis::formal: first element must be 1");
    for (size_t i = 1; i < elems.size(); ++i) {
        if (elems[i].is_constant_one()) throw Error("Basis::formal: only the first element may be 1");
        // non-constant elements must be enclosed away from 0
        Interval iv = elems[i].enclosure(std::min(12, precision_cap));
        if (iv.contains_zero()) throw Error("Basis::formal: element enclosure must exclude 0");
    }
    auto b = std::shared_ptr<Basis>(new Basis());
    b->kind_ = BasisKind::formal;
    b->elems_ = std::move(elems);
    b->precision_cap_ = precision_cap;
    return b;
}

int Basis::rank() const {
    switch (kind_) {
        case BasisKind::rational: return 1;
        case BasisKind::quadratic: return 2;
        case BasisKind::formal: return static_cast<int>(elems_.size());
    }
    return 0;
}

bool Basis::operator==(const Basis& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case BasisKind::rational: return true;
        case BasisKind::quadratic: return d_ == o.d_;
        case BasisKind::formal:
            return precision_cap_ == o.precision_cap_ && elems_ == o.elems_;
    }
    return false;
}

std::string Basis::describe() const {
    switch (kind_) {
        case BasisKind::rational: return "Q";
        case BasisKind::quadratic: return "Q(sqrt(" + d_.get_str() + "))";
        case BasisKind::formal: {
            std::string s = "formal{";
            for (size_t i = 0; i < elems_.size(); ++i) {
                if (i) s += ", ";
                s += elems_[i].describe();
            }
            return s + "}";
        }
    }
    return "?";
}

}  // namespace sturmkit
