#include "sturmkit/mat2.hpp"

#include <sstream>

namespace sturmkit {

Mat2::Mat2(Rat a, Rat b, Rat c, Rat d)
    : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)) {
    if (det() == 0) throw SingularMatrix();
}

Mat2 Mat2::inverse() const {
    Rat d = det();
    return Mat2(m22 / d, -m12 / d, -m21 / d, m11 / d);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2(m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22);
}

bool Mat2::is_integral() const {
    return m11.get_den() == 1 && m12.get_den() == 1 && m21.get_den() == 1 && m22.get_den() == 1;
}

Mat2 Mat2::projective_normal() const {
    Rat content = rat_content({m11, m12, m21, m22});
    Rat scale = Rat(1) / content;
    for (const Rat* e : {&m11, &m12, &m21, &m22}) {
        if (*e != 0) {
            if (*e < 0) scale = -scale;
            break;
        }
    }
    return Mat2(m11 * scale, m12 * scale, m21 * scale, m22 * scale);
}

Mat2 Mat2::pow(long k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Mat2 acc;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Mat2::str() const {
    std::ostringstream out;
    out << "(" << rat_str(m11) << " " << rat_str(m12) << " / " << rat_str(m21) << " "
        << rat_str(m22) << ")";
    return out.str();
}

RealValue apply(const Mat2& m, const RealValue& x) {
    RealValue den = x * m.m21 + m.m22;
    if (den.is_zero()) throw PoleHit();
    RealValue num = x * m.m11 + m.m12;
    return num / den;
}

namespace {

struct IntMat {
    Int a, b, c, d;

    IntMat operator*(const IntMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Int det() const { return a * d - b * c; }
};

const IntMat kId{1, 0, 0, 1};
// det-1 "swap": (0 1 / -1 0)
const IntMat kSwap{0, 1, -1, 0};

// row1 -= q * row2 is L(q) * M with L in SL_2
IntMat shear_upper(const Int& q) { return {1, -q, 0, 1}; }
IntMat shear_lower(const Int& q) { return {1, 0, -q, 1}; }

Mat2 to_mat2(const IntMat& m) {
    return Mat2(Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d));
}

}  // namespace

SmithFactorization smith_factor(const Mat2& mat) {
    if (!mat.is_integral()) throw Error("smith_factor: integer entries required");
    if (mat.det() == 0) throw SingularMatrix();
    IntMat m{mat.m11.get_num(), mat.m12.get_num(), mat.m21.get_num(), mat.m22.get_num()};
    Int content = gcd(gcd(m.a, m.b), gcd(m.c, m.d));
    if (content != 1) throw NotCoprime();

    // invariants: l * original * r == m with l, r in SL_2(Z)
    IntMat l = kId, r = kId;
    auto left = [&](const IntMat& g) {
        m = g * m;
        l = g * l;
    };
    auto right = [&](const IntMat& g) {
        m = m * g;
        r = r * g;
    };

    // clear the off-diagonal by alternating gcd sweeps; column ops can
    // reintroduce a lower-left entry, so alternate until both vanish
    auto reduce_to_diagonal = [&] {
        while (m.c != 0 || m.b != 0) {
            while (m.c != 0) {
                if (m.a == 0 || (abs(m.a) > abs(m.c))) {
                    left(kSwap);  // rows (r1,r2) -> (r2,-r1)
                    continue;
                }
                left(shear_lower(Int(m.c / m.a)));
            }
            while (m.b != 0) {
                if (m.a == 0 || (abs(m.a) > abs(m.b))) {
                    right(kSwap);
                    continue;
                }
                right(shear_upper(Int(m.b / m.a)));
            }
        }
    };
    reduce_to_diagonal();
    // force a | d; content 1 then gives a = +-1
    if (m.d % m.a != 0) {
        right({1, 0, 1, 1});  // add column 2 to column 1
        reduce_to_diagonal();
    }
    if (m.a < 0) left({-1, 0, 0, -1});
    if (m.a != 1) throw Error("smith_factor: content-1 reduction failed");
    // diag(1, y) = S^-1 diag(y, 1) S with S in SL_2
    // U = l^-1 * S^-1, V = S * r^-1 gives original = U diag(y,1) V
    IntMat swap_inv{0, -1, 1, 0};
    Mat2 u = to_mat2(l).inverse() * to_mat2(swap_inv);
    Mat2 v = to_mat2(kSwap) * to_mat2(r).inverse();
    SmithFactorization f{u, m.d, v};
    return f;
}

}  // namespace sturmkit
