#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sturmkit {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// floor(a/b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// n = core * square^2 with core squarefree; returns {core, square}. n > 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

inline bool is_squarefree(const Int& n) {
    return n > 0 && squarefree_decompose(n).second == 1;
}

// gcd of numerators / lcm of denominators; content(v) > 0 unless all zero.
Rat rat_content(const std::vector<Rat>& values);

inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace sturmkit
