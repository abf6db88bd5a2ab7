#include "sturmkit/sturmian.hpp"

#include <algorithm>
#include <sstream>

#include "sturmkit/cfrac.hpp"

namespace sturmkit {

std::string Word::str() const {
    std::ostringstream out;
    for (int s : symbols) {
        if (s < 10)
            out << s;
        else
            out << "[" << s << "]";
    }
    out << "@" << offset;
    return out.str();
}

Word word_from_string(const std::string& symbols, int alphabet, long offset) {
    Word w;
    w.alphabet = alphabet;
    w.offset = offset;
    for (char c : symbols) {
        if (c < '0' || c > '9' || c - '0' >= alphabet) throw ParseError("word symbol out of range");
        w.symbols.push_back(c - '0');
    }
    return w;
}

SturmianParams::SturmianParams(RealValue a) : alpha(std::move(a)) {
    if (alpha.is_rational()) throw Error("SturmianParams: alpha must come from an irrational basis slot");
    if (sign(alpha) <= 0 || ge(alpha, RealValue::one(alpha.basis())))
        throw OutOfDomain("SturmianParams: alpha must lie in (0,1)");
}

Word sturmian_window(const SturmianParams& p, long i, long j) {
    if (i >= j) throw Error("sturmian_window: need i < j");
    Word w;
    w.alphabet = 2;
    w.offset = i;
    const RealValue one_minus = RealValue::one(p.alpha.basis()) - p.alpha;
    for (long n = i; n < j; ++n) {
        RealValue pos = frac(p.alpha * Rat(n));
        w.symbols.push_back(lt(pos, one_minus) ? 0 : 1);
    }
    return w;
}

std::set<Word> factors(const SturmianParams& p, size_t n) {
    if (n < 1) throw Error("factors: n >= 1 required");
    const auto& basis = p.alpha.basis();
    // cut points -k*alpha mod 1, k = 0..n; 0 is always among them
    std::vector<RealValue> cuts;
    for (size_t k = 0; k <= n; ++k) cuts.push_back(frac(-(p.alpha * Rat(static_cast<long>(k)))));
    std::sort(cuts.begin(), cuts.end(), [](const RealValue& a, const RealValue& b) { return lt(a, b); });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const RealValue one = RealValue::one(basis);
    const RealValue one_minus = one - p.alpha;
    std::set<Word> out;
    for (size_t i = 0; i < cuts.size(); ++i) {
        const RealValue& lo = cuts[i];
        const RealValue hi = (i + 1 < cuts.size()) ? cuts[i + 1] : one;
        RealValue mid = (lo + hi) * make_rat(1, 2);
        Word w;
        w.alphabet = 2;
        for (size_t k = 0; k < n; ++k) {
            RealValue pos = frac(mid + p.alpha * Rat(static_cast<long>(k)));
            w.symbols.push_back(lt(pos, one_minus) ? 0 : 1);
        }
        out.insert(std::move(w));
    }
    return out;
}

Word substitution_apply(SubstName name, const Word& w) {
    if (w.alphabet != 2) throw Error("substitution_apply: binary words only");
    Word out;
    out.alphabet = 2;
    out.offset = w.offset;
    for (int s : w.symbols) {
        switch (name) {
            case SubstName::J:
                out.symbols.push_back(1 - s);
                break;
            case SubstName::R:
                if (s == 0) {
                    out.symbols.push_back(0);
                    out.symbols.push_back(1);
                } else {
                    out.symbols.push_back(1);
                }
                break;
            case SubstName::L:
                if (s == 0) {
                    out.symbols.push_back(0);
                } else {
                    out.symbols.push_back(1);
                    out.symbols.push_back(0);
                }
                break;
        }
    }
    return out;
}

Word sadic_prefix(const SturmianParams& p, size_t len) {
    if (len < 1) throw Error("sadic_prefix: len >= 1 required");
    // Standard-word recursion driven by the CF digits of alpha:
    //   s_{-1} = 1, s_0 = 0, s_1 = 0^(a1 - 1) 1, s_k = s_{k-1}^(a_k) s_{k-2}.
    // The limit prefixed with "0" is exactly the coding window at 0 (the
    // letter-exchange convention is pinned by the window cross-check tests).
    Word out;
    out.alphabet = 2;
    out.offset = 0;
    out.symbols.push_back(0);
    if (len == 1) return out;

    std::vector<Int> digits = expand_prefix(p.alpha, 64);
    // digits[0] = 0 since alpha lies in (0,1)
    std::vector<int> prev{1};  // s_{-1}
    std::vector<int> cur{0};   // s_0
    size_t digit_index = 1;
    // s_0 is not a prefix of the limit; iterate at least once
    while (digit_index == 1 || cur.size() + 1 < len) {
        if (digit_index >= digits.size()) digits = expand_prefix(p.alpha, 2 * digits.size());
        long a = digits[digit_index].get_si();
        long reps = digit_index == 1 ? a - 1 : a;
        std::vector<int> next;
        next.reserve(cur.size() * static_cast<size_t>(reps > 0 ? reps : 0) + prev.size());
        for (long r = 0; r < reps; ++r) next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
        ++digit_index;
    }
    for (size_t i = 0; i + 1 < len; ++i) out.symbols.push_back(cur[i]);
    return out;
}

ZModule state_image(const SturmianParams& p) {
    return zmodule_of(p.alpha.basis(), {RealValue::one(p.alpha.basis()), p.alpha});
}

}  // namespace sturmkit
