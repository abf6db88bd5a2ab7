#pragma once

#include <optional>
#include <string>

#include "sturmkit/mat2.hpp"

namespace sturmkit {

enum class Verdict { YES, NO, UNKNOWN };

// Outcome of a semi-decidable question. YES carries a certificate a verifier
// can re-check exactly; NO carries a machine-readable obstruction code;
// UNKNOWN carries the exhausted bound.
struct Decision {
    Verdict verdict = Verdict::UNKNOWN;

    std::optional<Mat2> witness;       // matrix certificate
    std::optional<int> sign;           // +-1 certificate component
    std::optional<Int> shift;          // integer-translation certificate component
    std::optional<Int> failing_n;      // first counterexample index (NO)
    std::string obstruction;           // reason code for NO
    std::string note;                  // e.g. conjecture annotation on UNKNOWN
    std::optional<long> bound;         // exhausted search bound (UNKNOWN)
    std::string certificate_text;      // free-form extra certificate data

    static Decision yes() {
        Decision d;
        d.verdict = Verdict::YES;
        return d;
    }
    static Decision yes_matrix(Mat2 m) {
        Decision d;
        d.verdict = Verdict::YES;
        d.witness = std::move(m);
        return d;
    }
    static Decision no(std::string obstruction_code) {
        Decision d;
        d.verdict = Verdict::NO;
        d.obstruction = std::move(obstruction_code);
        return d;
    }
    static Decision unknown(long bound_reached, std::string note = {}) {
        Decision d;
        d.verdict = Verdict::UNKNOWN;
        d.bound = bound_reached;
        d.note = std::move(note);
        return d;
    }

    bool is_yes() const { return verdict == Verdict::YES; }
    bool is_no() const { return verdict == Verdict::NO; }
    bool is_unknown() const { return verdict == Verdict::UNKNOWN; }

    // CLI exit-code convention: YES 0, NO 1, UNKNOWN 2
    int exit_code() const { return verdict == Verdict::YES ? 0 : (verdict == Verdict::NO ? 1 : 2); }
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::YES: return "YES";
        case Verdict::NO: return "NO";
        case Verdict::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

}  // namespace sturmkit
