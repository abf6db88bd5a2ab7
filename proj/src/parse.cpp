#include "sturmkit/parse.hpp"

#include <cctype>
#include <sstream>

namespace sturmkit {

namespace {
int g_default_formal_precision = 10000;
}  // namespace

void set_default_formal_precision(int digits) { g_default_formal_precision = digits; }
int default_formal_precision() { return g_default_formal_precision; }

namespace {

// --- number-expression grammar ----------------------------------------

struct Lexer {
    std::string src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (src.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + src + "\"");
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Int(src.substr(start, pos - start));
    }
};

ParsedReal pr_rat(Rat q) { return ParsedReal{std::move(q), Rat(0), 0}; }

ParsedReal pr_add(const ParsedReal& x, const ParsedReal& y) {
    if (x.core != 0 && y.core != 0 && x.core != y.core && x.b != 0 && y.b != 0)
        throw ParseError("cannot mix sqrt(" + x.core.get_str() + ") and sqrt(" + y.core.get_str() + ")");
    ParsedReal out;
    out.core = x.b != 0 ? x.core : y.core;
    out.a = x.a + y.a;
    out.b = (x.b != 0 && y.b != 0) ? x.b + y.b : (x.b != 0 ? x.b : y.b);
    if (out.b == 0) out.core = 0;
    return out;
}

ParsedReal pr_neg(const ParsedReal& x) { return ParsedReal{-x.a, -x.b, x.core}; }

ParsedReal pr_mul(const ParsedReal& x, const ParsedReal& y) {
    if (x.is_rational()) return ParsedReal{x.a * y.a, x.a * y.b, x.a == 0 ? Int(0) : y.core};
    if (y.is_rational()) return pr_mul(y, x);
    if (x.core != y.core) throw ParseError("cannot multiply different surds");
    // (a1 + b1 r)(a2 + b2 r), r^2 = core
    Rat a = x.a * y.a + x.b * y.b * Rat(x.core);
    Rat b = x.a * y.b + x.b * y.a;
    return ParsedReal{a, b, b == 0 ? Int(0) : x.core};
}

ParsedReal pr_div(const ParsedReal& x, const ParsedReal& y) {
    if (y.a == 0 && y.b == 0) throw ParseError("division by zero");
    if (y.is_rational()) return ParsedReal{x.a / y.a, x.b / y.a, x.core};
    // invert the surd: 1/(a + b r) = (a - b r) / (a^2 - b^2 core)
    Rat norm = y.a * y.a - y.b * y.b * Rat(y.core);
    ParsedReal inv{y.a / norm, -y.b / norm, y.core};
    return pr_mul(x, inv);
}

ParsedReal pr_sqrt(const Int& n) {
    if (n == 0) return pr_rat(Rat(0));
    auto [core, square] = squarefree_decompose(n);
    if (core == 1) return pr_rat(Rat(square));
    return ParsedReal{Rat(0), Rat(square), core};
}

ParsedReal parse_expr(Lexer& lx);

ParsedReal parse_factor(Lexer& lx) {
    if (lx.eat('-')) return pr_neg(parse_factor(lx));
    if (lx.eat('+')) return parse_factor(lx);
    if (lx.eat('(')) {
        ParsedReal inner = parse_expr(lx);
        if (!lx.eat(')')) lx.fail("expected ')'");
        return inner;
    }
    if (lx.eat_word("sqrt")) {
        if (!lx.eat('(')) lx.fail("expected '(' after sqrt");
        Int n = lx.integer();
        if (!lx.eat(')')) lx.fail("expected ')' after sqrt argument");
        return pr_sqrt(n);
    }
    return pr_rat(Rat(lx.integer()));
}

ParsedReal parse_term(Lexer& lx) {
    ParsedReal acc = parse_factor(lx);
    for (;;) {
        char c = lx.peek();
        if (c == '*') {
            lx.eat('*');
            acc = pr_mul(acc, parse_factor(lx));
        } else if (c == '/') {
            lx.eat('/');
            acc = pr_div(acc, parse_factor(lx));
        } else if (c == 's' || c == '(') {
            // implicit multiplication: "2sqrt(5)", "3(1+sqrt(2))"
            acc = pr_mul(acc, parse_factor(lx));
        } else {
            return acc;
        }
    }
}

ParsedReal parse_expr(Lexer& lx) {
    ParsedReal acc = parse_term(lx);
    for (;;) {
        char c = lx.peek();
        if (c == '+') {
            lx.eat('+');
            acc = pr_add(acc, parse_term(lx));
        } else if (c == '-') {
            lx.eat('-');
            acc = pr_add(acc, pr_neg(parse_term(lx)));
        } else {
            return acc;
        }
    }
}

Rat rat_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("rational pair must have two entries");
        return make_rat(Int(j[0].get<std::string>()), Int(j[1].get<std::string>()));
    }
    if (j.is_string()) {
        Rat q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw ParseError("expected a rational (string, [num, den], or integer)");
}

Json rat_to_json(const Rat& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

BasisPtr basis_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Basis::rational();
    if (kind == "quadratic") return Basis::quadratic(Int(j.at("d").is_number() ? std::to_string(j.at("d").get<long>()) : j.at("d").get<std::string>()));
    if (kind == "formal") {
        std::vector<FormalElement> elems;
        for (const Json& e : j.at("elements")) {
            std::string ek = e.at("kind").get<std::string>();
            if (ek == "one")
                elems.push_back(FormalElement::one());
            else if (ek == "surd")
                elems.push_back(FormalElement::surd(rat_from_json(e.at("r")), rat_from_json(e.at("s")),
                                                    Int(e.at("n").get<long>())));
            else if (ek == "decimal")
                elems.push_back(FormalElement::decimal(rat_from_json(e.at("lo")),
                                                       rat_from_json(e.at("hi")),
                                                       e.at("digits").get<int>()));
            else
                throw ParseError("unknown formal element kind: " + ek);
        }
        int precision = j.value("precision", default_formal_precision());
        return Basis::formal(std::move(elems), precision);
    }
    throw ParseError("unknown basis kind: " + kind);
}

Json basis_to_json(const BasisPtr& b) {
    Json j;
    switch (b->kind()) {
        case BasisKind::rational:
            j["kind"] = "rational";
            break;
        case BasisKind::quadratic:
            j["kind"] = "quadratic";
            j["d"] = b->d().get_si();
            break;
        case BasisKind::formal: {
            j["kind"] = "formal";
            j["precision"] = b->precision_cap();
            Json elems = Json::array();
            for (const FormalElement& e : b->elements()) {
                Json je;
                switch (e.kind()) {
                    case FormalElement::Kind::one:
                        je["kind"] = "one";
                        break;
                    case FormalElement::Kind::surd:
                        je["kind"] = "surd";
                        je["r"] = rat_to_json(e.r_);
                        je["s"] = rat_to_json(e.s_);
                        je["n"] = e.n_.get_si();
                        break;
                    case FormalElement::Kind::decimal:
                        je["kind"] = "decimal";
                        je["lo"] = rat_to_json(e.lo_);
                        je["hi"] = rat_to_json(e.hi_);
                        je["digits"] = e.digits_;
                        break;
                }
                elems.push_back(je);
            }
            j["elements"] = elems;
            break;
        }
    }
    return j;
}

}  // namespace

ParsedReal parse_number(const std::string& text) {
    Lexer lx{text};
    ParsedReal r = parse_expr(lx);
    lx.skip_ws();
    if (lx.pos != lx.src.size()) lx.fail("trailing input");
    return r;
}

std::vector<RealValue> to_shared_basis(const std::vector<ParsedReal>& values) {
    Int core = 0;
    for (const ParsedReal& v : values) {
        if (v.is_rational()) continue;
        if (core == 0)
            core = v.core;
        else if (core != v.core)
            throw BasisMismatch("numbers lie in different quadratic fields (sqrt(" +
                                core.get_str() + ") vs sqrt(" + v.core.get_str() + "))");
    }
    BasisPtr basis = core == 0 ? Basis::rational() : Basis::quadratic(core);
    std::vector<RealValue> out;
    out.reserve(values.size());
    for (const ParsedReal& v : values) {
        if (core == 0)
            out.push_back(RealValue::make(basis, {v.a}));
        else
            out.push_back(RealValue::make(basis, {v.a, v.is_rational() ? Rat(0) : v.b}));
    }
    return out;
}

RealValue to_real(const ParsedReal& value) {
    return to_shared_basis({value}).front();
}

std::string format_real(const RealValue& v) {
    std::ostringstream out;
    switch (v.basis()->kind()) {
        case BasisKind::rational:
            out << rat_str(v.coord(0));
            break;
        case BasisKind::quadratic: {
            bool have = false;
            if (v.coord(0) != 0 || v.coord(1) == 0) {
                out << rat_str(v.coord(0));
                have = true;
            }
            if (v.coord(1) != 0) {
                if (have && v.coord(1) > 0) out << "+";
                if (v.coord(1) == -1)
                    out << "-";
                else if (v.coord(1) != 1)
                    out << rat_str(v.coord(1)) << "*";
                out << "sqrt(" << v.basis()->d().get_str() << ")";
            }
            break;
        }
        case BasisKind::formal: {
            out << "formal" << v.str();
            break;
        }
    }
    return out.str();
}

ContinuedFraction parse_cf(const std::string& text) {
    Lexer lx{text};
    if (!lx.eat('[')) lx.fail("expected '['");
    ContinuedFraction cf;
    bool in_period = false;
    bool done = false;
    while (!done) {
        if (lx.eat('(')) {
            if (in_period) lx.fail("nested period");
            in_period = true;
            continue;
        }
        bool neg = lx.eat('-');
        Int v = lx.integer();
        if (neg) v = -v;
        (in_period ? cf.period : cf.preperiod).push_back(v);
        if (lx.eat(')')) {
            if (!in_period) lx.fail("unmatched ')'");
            in_period = false;
        }
        if (lx.eat(']')) {
            done = true;
        } else if (!lx.eat(';') && !lx.eat(',')) {
            lx.fail("expected separator");
        }
    }
    for (size_t i = 0; i < cf.preperiod.size(); ++i)
        if (i > 0 && cf.preperiod[i] < 1) throw ParseError("continued fraction entries after the first must be >= 1");
    for (const Int& p : cf.period)
        if (p < 1) throw ParseError("period entries must be >= 1");
    return cf;
}

Json real_to_json(const RealValue& v) {
    Json coords = Json::array();
    for (const Rat& c : v.coords()) coords.push_back(rat_to_json(c));
    return Json{{"basis", basis_to_json(v.basis())}, {"coords", coords}, {"text", format_real(v)}};
}

RealValue real_from_json(const Json& j) {
    if (j.is_string()) return to_real(parse_number(j.get<std::string>()));
    BasisPtr b = basis_from_json(j.at("basis"));
    std::vector<Rat> coords;
    for (const Json& c : j.at("coords")) coords.push_back(rat_from_json(c));
    return RealValue::make(b, std::move(coords));
}

Json cf_to_json(const ContinuedFraction& cf) {
    Json pre = Json::array(), per = Json::array();
    for (const Int& x : cf.preperiod) pre.push_back(x.get_str());
    for (const Int& x : cf.period) per.push_back(x.get_str());
    return Json{{"preperiod", pre}, {"period", per}, {"text", cf.str()}};
}

ContinuedFraction cf_from_json(const Json& j) {
    ContinuedFraction cf;
    for (const Json& x : j.at("preperiod"))
        cf.preperiod.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
    for (const Json& x : j.at("period"))
        cf.period.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
    return cf;
}

Json mat_to_json(const Mat2& m) {
    return Json{{"m", Json::array({Json::array({rat_str(m.m11), rat_str(m.m12)}),
                                   Json::array({rat_str(m.m21), rat_str(m.m22)})})}};
}

Mat2 mat_from_json(const Json& j) {
    const Json& rows = j.at("m");
    auto entry = [&](int r, int c) { return rat_from_json(rows.at(r).at(c)); };
    return Mat2(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
}

Mat2 parse_matrix(const std::string& text) {
    if (!text.empty() && text.front() == '{') return mat_from_json(Json::parse(text));
    // comma-separated entries a,b,c,d with rational/expression syntax
    std::vector<Rat> entries;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        ParsedReal p = parse_number(cur);
        if (!p.is_rational()) throw ParseError("matrix entries must be rational");
        entries.push_back(p.a);
    }
    if (entries.size() != 4) throw ParseError("matrix needs four entries a,b,c,d");
    return Mat2(entries[0], entries[1], entries[2], entries[3]);
}

Json word_to_json(const Word& w) {
    std::string symbols;
    for (int s : w.symbols) symbols += static_cast<char>('0' + s);
    return Json{{"alphabet", w.alphabet}, {"offset", w.offset}, {"symbols", symbols}};
}

Word word_from_json(const Json& j) {
    if (j.is_string()) return word_from_string(j.get<std::string>(), 10, 0);
    return word_from_string(j.at("symbols").get<std::string>(), j.value("alphabet", 2),
                            j.value("offset", 0L));
}

Json iet_to_json(const IetSpec& t) {
    Json lengths = Json::array();
    for (const RealValue& l : t.lengths) lengths.push_back(real_to_json(l));
    return Json{{"perm", t.perm},
                {"lengths", lengths},
                {"scale", real_to_json(t.scale)},
                {"irreducible", t.irreducible}};
}

IetSpec iet_from_json(const Json& j) {
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    std::vector<RealValue> lengths;
    if (j.at("lengths").front().is_string()) {
        std::vector<ParsedReal> parsed;
        for (const Json& l : j.at("lengths")) parsed.push_back(parse_number(l.get<std::string>()));
        lengths = to_shared_basis(parsed);
    } else {
        for (const Json& l : j.at("lengths")) lengths.push_back(real_from_json(l));
    }
    return new_iet(perm, lengths);
}

Json denjoy_to_json(const DenjoyParams& p) {
    Json reps = Json::array();
    for (const RealValue& r : p.reps) reps.push_back(real_to_json(r));
    return Json{{"rho", real_to_json(p.rho)}, {"reps", reps}};
}

DenjoyParams denjoy_from_json(const Json& j) {
    std::vector<Json> rep_json;
    if (j.contains("reps"))
        for (const Json& r : j.at("reps")) rep_json.push_back(r);
    bool all_text = j.at("rho").is_string();
    for (const Json& r : rep_json) all_text = all_text && r.is_string();
    if (all_text) {
        std::vector<ParsedReal> parsed{parse_number(j.at("rho").get<std::string>())};
        for (const Json& r : rep_json) parsed.push_back(parse_number(r.get<std::string>()));
        auto values = to_shared_basis(parsed);
        RealValue rho = values.front();
        values.erase(values.begin());
        return normalize(rho, values).params;
    }
    RealValue rho = real_from_json(j.at("rho"));
    std::vector<RealValue> reps;
    for (const Json& r : rep_json) reps.push_back(real_from_json(r));
    return normalize(rho, reps).params;
}

Json decision_to_json(const Decision& d) {
    Json j{{"verdict", verdict_name(d.verdict)}};
    if (d.witness) j["certificate"]["matrix"] = mat_to_json(*d.witness);
    if (d.sign) j["certificate"]["sign"] = *d.sign;
    if (d.shift) j["certificate"]["shift"] = d.shift->get_str();
    if (!d.certificate_text.empty()) j["certificate"]["text"] = d.certificate_text;
    if (d.failing_n) j["obstruction_n"] = d.failing_n->get_str();
    if (!d.obstruction.empty()) j["obstruction"] = d.obstruction;
    if (d.bound) j["bound"] = *d.bound;
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

Json rauzy_path_to_json(const RauzyPath& p) {
    Json j{{"steps", p.type_string()}};
    if (p.period) {
        j["preperiod"] = p.period->first;
        j["period"] = p.period->second;
    }
    if (p.keane_violation) j["keane_violation"] = true;
    return j;
}

Json zmodule_to_json(const ZModule& m) {
    Json rows = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const Int& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return Json{{"denominator", m.denominator().get_str()}, {"hnf", rows}, {"rank", m.rank()}};
}

Json qspan_to_json(const QSpan& s) {
    Json rows = Json::array();
    for (const auto& row : s.rows()) {
        Json r = Json::array();
        for (const Rat& x : row) r.push_back(rat_str(x));
        rows.push_back(r);
    }
    return Json{{"rref", rows}, {"dim", s.dim()}};
}

Json wedge_to_json(const WedgeValue& w) {
    Json entries = Json::array();
    for (size_t i = 0; i < w.matrix().size(); ++i)
        for (size_t j = i + 1; j < w.matrix().size(); ++j)
            entries.push_back(Json::array({i, j, rat_str(w.entry(i, j))}));
    return Json{{"upper", entries}, {"zero", w.is_zero()}};
}

}  // namespace sturmkit
