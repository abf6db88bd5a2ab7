#pragma once

#include <set>
#include <string>
#include <vector>

#include "sturmkit/modules.hpp"
#include "sturmkit/real.hpp"

namespace sturmkit {

// Finite word over {0, ..., alphabet-1} with a starting index in Z.
struct Word {
    int alphabet = 2;
    long offset = 0;
    std::vector<int> symbols;

    size_t size() const { return symbols.size(); }
    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const {
        if (symbols != o.symbols) return symbols < o.symbols;
        if (alphabet != o.alphabet) return alphabet < o.alphabet;
        return offset < o.offset;
    }
    std::string str() const;  // "0110@0"
};

Word word_from_string(const std::string& symbols, int alphabet = 2, long offset = 0);

// Rotation parameter: alpha in (0,1), irrational (guaranteed by basis kind).
struct SturmianParams {
    RealValue alpha;

    explicit SturmianParams(RealValue a);
};

// Coding window x_n for n in [i, j): x_n = 0 iff {n*alpha} lies in [0, 1-alpha).
Word sturmian_window(const SturmianParams& p, long i, long j);

// The exact set of length-n factors, computed from the circle partition by
// the points {-k*alpha mod 1 : 0 <= k <= n}. Cardinality is n+1.
std::set<Word> factors(const SturmianParams& p, size_t n);

enum class SubstName { J, R, L };

// J: 0<->1.  R: 0->01, 1->1.  L: 0->0, 1->10 (transpose companion of R).
Word substitution_apply(SubstName name, const Word& w);

// Length-len factor generated S-adically from the continued fraction digits
// of alpha (standard-word recursion); in fact the coding window at 0.
Word sadic_prefix(const SturmianParams& p, size_t len);

// Z-module generated by {1, alpha} (the state image of the coinvariants).
ZModule state_image(const SturmianParams& p);

}  // namespace sturmkit
