#include "sturmkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sturmkit/decide.hpp"
#include "sturmkit/parse.hpp"
#include "sturmkit/pell.hpp"
#include "sturmkit/sturmian.hpp"

namespace sturmkit::cli {

namespace {

constexpr int kExitError = 3;
constexpr int kExitUsage = 64;
constexpr const char* kSchema = "sturmkit/1";

struct Invocation {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool json = false;

    bool has(const std::string& f) const { return flags.count(f) > 0; }
    std::string flag(const std::string& f, const std::string& fallback = {}) const {
        auto it = flags.find(f);
        return it == flags.end() ? fallback : it->second;
    }
    long flag_long(const std::string& f, long fallback) const {
        auto it = flags.find(f);
        return it == flags.end() ? fallback : std::stol(it->second);
    }
};

const char* kUsage = R"USAGE(usage: sturmkit <command> [args] [--json]

commands:
  cf expand NUM [--periodic | --prefix N]   continued fraction digits
  cf from CF                                value of "[c0; c1, (p1, ...)]"
  mat apply MAT NUM                         Moebius action
  mat smith MAT                             U * diag(m,1) * V factorization
  mat stabilizer NUM                        primitive SL2(Z) stabilizer
  mat pell DELTA M                          Pell-Fermat class representatives
  sturmian window ALPHA I J                 coding window x_i..x_{j-1}
  sturmian factors ALPHA N                  all length-N factors
  sturmian state ALPHA                      state-image lattice Z + alpha Z
  denjoy normalize P                        canonical parameters
  denjoy power P M                          parameters of the M-th power
  denjoy 2ai P1 P2                          2-AI equivalence decision
  denjoy flow P1 P2 [--bound K]             flow equivalence decision
  denjoy verify P1 P2 MAT                   isogeny certificate check
  iet eval IETFLAGS X                       apply the exchange map
  iet orbit IETFLAGS X N                    coding word of the orbit
  iet keane IETFLAGS [--depth N]            Keane condition decision
  iet rauzy IETFLAGS [--depth N]            Rauzy induction path
  iet induce IETFLAGS WORD [--cap N]        first return on a cylinder
  iet minmodel IETFLAGS                     merge removable discontinuities
  iet saf IETFLAGS                          SAF invariant
  iet invariants IETFLAGS                   projectivized rational invariants
  iet conjugate IETFLAGS IETFLAGS2 [--depth N]
  iet flow IETFLAGS IETFLAGS2 [--depth N]
  decide conjugate A B                      alpha = +-beta mod Z
  decide flow A B                           PGL2(Z) equivalence
  decide eventual-flow A B [--n-max N]      eventual flow equivalence
  decide isogeny A B                        PGL2(Q) equivalence
  decide selfmult A M                       alpha ~ m*alpha
  batch [FILE]                              newline-delimited JSON invocations

P arguments are JSON: {"rho": "sqrt(2)-1", "reps": ["0", "1/2"]}.
IETFLAGS are --perm 2,1 --lengths "sqrt(2)-1","2-sqrt(2)" (and --perm2/--lengths2).
Exit codes: 0 YES/ok, 1 NO, 2 UNKNOWN, 3 error, 64 usage.
)USAGE";

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

RealValue arg_number(const std::string& text) { return to_real(parse_number(text)); }

std::pair<RealValue, RealValue> arg_pair(const std::string& a, const std::string& b) {
    auto vs = to_shared_basis({parse_number(a), parse_number(b)});
    return {vs[0], vs[1]};
}

IetSpec iet_from_flags(const Invocation& inv, const std::string& suffix) {
    std::string perm_s = inv.flag("perm" + suffix);
    std::string len_s = inv.flag("lengths" + suffix);
    if (perm_s.empty() || len_s.empty())
        throw ParseError("missing --perm" + suffix + " / --lengths" + suffix);
    std::vector<int> perm;
    for (const std::string& p : split_commas(perm_s)) perm.push_back(std::stoi(p));
    std::vector<ParsedReal> parsed;
    for (const std::string& l : split_commas(len_s)) parsed.push_back(parse_number(l));
    return new_iet(perm, to_shared_basis(parsed));
}

void emit(const Invocation& inv, std::ostream& out, const Json& payload,
          const std::string& text) {
    if (inv.json) {
        Json j = payload;
        j["schema"] = kSchema;
        out << j.dump() << "\n";
    } else {
        out << text << "\n";
    }
}

int emit_decision(const Invocation& inv, std::ostream& out, const Decision& d) {
    Json j = decision_to_json(d);
    std::string text = verdict_name(d.verdict);
    if (d.witness) text += " witness " + d.witness->str();
    if (d.sign) text += std::string(" sign ") + (*d.sign > 0 ? "+" : "-");
    if (d.failing_n) text += " failing_n " + d.failing_n->get_str();
    if (!d.obstruction.empty()) text += " (" + d.obstruction + ")";
    if (d.bound) text += " bound " + std::to_string(*d.bound);
    emit(inv, out, j, text);
    return d.exit_code();
}

int run_command(const Invocation& inv, std::ostream& out, std::ostream& err);

int run_batch(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!inv.positional.empty() && inv.positional[0] != "-") {
        file.open(inv.positional[0]);
        if (!file) {
            err << "batch: cannot open " << inv.positional[0] << "\n";
            return kExitError;
        }
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        Json result{{"schema", kSchema}};
        try {
            Json req = Json::parse(line);
            std::vector<std::string> argv = req.at("argv").get<std::vector<std::string>>();
            std::ostringstream sub_out, sub_err;
            int code = run(argv, sub_out, sub_err);
            result["exit"] = code;
            std::string text = sub_out.str();
            if (!text.empty() && text.front() == '{')
                result["output"] = Json::parse(text);
            else
                result["output"] = text;
            if (!sub_err.str().empty()) result["error"] = sub_err.str();
        } catch (const std::exception& e) {
            result["exit"] = kExitError;
            result["error"] = e.what();
        }
        out << result.dump() << "\n";
    }
    return 0;
}

int run_command(const Invocation& inv, std::ostream& out, std::ostream& err) {
    const auto& pos = inv.positional;
    auto need = [&](size_t n) {
        if (pos.size() != n) throw ParseError("wrong number of arguments (see sturmkit --help)");
    };
    const std::string& group = pos[0];
    const std::string verb = pos.size() > 1 ? pos[1] : "";

    if (group == "cf" && verb == "expand") {
        need(3);
        RealValue x = arg_number(pos[2]);
        if (inv.has("prefix")) {
            auto digits = expand_prefix(x, static_cast<size_t>(inv.flag_long("prefix", 10)));
            Json arr = Json::array();
            std::string text = "[";
            for (size_t i = 0; i < digits.size(); ++i) {
                arr.push_back(digits[i].get_str());
                text += (i ? ", " : "") + digits[i].get_str();
            }
            emit(inv, out, Json{{"digits", arr}}, text + "]");
            return 0;
        }
        ContinuedFraction cf = expand_periodic(x);
        emit(inv, out, cf_to_json(cf), cf.str());
        return 0;
    }
    if (group == "cf" && verb == "from") {
        need(3);
        RealValue v = from_cf(parse_cf(pos[2]));
        emit(inv, out, real_to_json(v), format_real(v));
        return 0;
    }
    if (group == "mat" && verb == "apply") {
        need(4);
        Mat2 m = parse_matrix(pos[2]);
        RealValue x = arg_number(pos[3]);
        RealValue y = apply(m, x);
        emit(inv, out, real_to_json(y), format_real(y));
        return 0;
    }
    if (group == "mat" && verb == "smith") {
        need(3);
        auto f = smith_factor(parse_matrix(pos[2]));
        emit(inv, out,
             Json{{"u", mat_to_json(f.u)}, {"m", f.m.get_str()}, {"v", mat_to_json(f.v)}},
             "U = " + f.u.str() + ", m = " + f.m.get_str() + ", V = " + f.v.str());
        return 0;
    }
    if (group == "mat" && verb == "stabilizer") {
        need(3);
        Mat2 f = stabilizer_matrix(arg_number(pos[2]));
        emit(inv, out, mat_to_json(f), f.str());
        return 0;
    }
    if (group == "mat" && verb == "pell") {
        need(4);
        auto sols = pell_fundamental(Int(pos[2]), Int(pos[3]));
        Json arr = Json::array();
        std::string text;
        for (const auto& s : sols) {
            arr.push_back(Json{{"x", s.x.get_str()}, {"s", s.s.get_str()}, {"sign", s.sign}});
            text += "(x=" + s.x.get_str() + ", s=" + s.s.get_str() + ", sign " +
                    (s.sign > 0 ? "+" : "-") + ") ";
        }
        emit(inv, out, Json{{"classes", arr}}, sols.empty() ? "none" : text);
        return 0;
    }
    if (group == "sturmian") {
        if (verb == "window") {
            need(5);
            SturmianParams p(arg_number(pos[2]));
            Word w = sturmian_window(p, std::stol(pos[3]), std::stol(pos[4]));
            emit(inv, out, word_to_json(w), w.str());
            return 0;
        }
        if (verb == "factors") {
            need(4);
            SturmianParams p(arg_number(pos[2]));
            auto fs = factors(p, static_cast<size_t>(std::stol(pos[3])));
            Json arr = Json::array();
            std::string text;
            for (const Word& w : fs) {
                arr.push_back(word_to_json(w));
                for (int s : w.symbols) text += static_cast<char>('0' + s);
                text += " ";
            }
            emit(inv, out, Json{{"count", fs.size()}, {"factors", arr}}, text);
            return 0;
        }
        if (verb == "state") {
            need(3);
            SturmianParams p(arg_number(pos[2]));
            auto m = state_image(p);
            emit(inv, out, zmodule_to_json(m), m.str());
            return 0;
        }
    }
    if (group == "denjoy") {
        if (verb == "normalize") {
            need(3);
            DenjoyParams p = denjoy_from_json(Json::parse(pos[2]));
            emit(inv, out, denjoy_to_json(p), "rho = " + format_real(p.rho) + ", " +
                                                  std::to_string(p.reps.size()) + " orbit(s)");
            return 0;
        }
        if (verb == "power") {
            need(4);
            DenjoyParams p = power_params(denjoy_from_json(Json::parse(pos[2])), std::stol(pos[3]));
            emit(inv, out, denjoy_to_json(p), "rho = " + format_real(p.rho) + ", " +
                                                  std::to_string(p.reps.size()) + " orbit(s)");
            return 0;
        }
        if (verb == "2ai") {
            need(4);
            auto d = two_ai_equivalent(denjoy_from_json(Json::parse(pos[2])),
                                       denjoy_from_json(Json::parse(pos[3])));
            return emit_decision(inv, out, d);
        }
        if (verb == "flow") {
            need(4);
            auto d = denjoy_flow_equivalent(denjoy_from_json(Json::parse(pos[2])),
                                            denjoy_from_json(Json::parse(pos[3])),
                                            inv.flag_long("bound", 3));
            return emit_decision(inv, out, d);
        }
        if (verb == "verify") {
            need(5);
            bool ok = verify_isogeny_certificate(denjoy_from_json(Json::parse(pos[2])),
                                                 denjoy_from_json(Json::parse(pos[3])),
                                                 parse_matrix(pos[4]));
            emit(inv, out, Json{{"valid", ok}}, ok ? "valid" : "invalid");
            return ok ? 0 : 1;
        }
    }
    if (group == "iet") {
        IetSpec t = iet_from_flags(inv, "");
        if (verb == "eval") {
            need(3);
            auto vs = to_shared_basis({parse_number(pos[2])});
            RealValue x = same_basis(vs[0].basis(), t.basis())
                              ? vs[0]
                              : RealValue::from_rat(t.basis(), vs[0].as_rational());
            RealValue y = evaluate(t, x);
            emit(inv, out, real_to_json(y), format_real(y));
            return 0;
        }
        if (verb == "orbit") {
            need(4);
            auto vs = to_shared_basis({parse_number(pos[2])});
            RealValue x = same_basis(vs[0].basis(), t.basis())
                              ? vs[0]
                              : RealValue::from_rat(t.basis(), vs[0].as_rational());
            Word w = orbit_word(t, x, static_cast<size_t>(std::stol(pos[3])));
            emit(inv, out, word_to_json(w), w.str());
            return 0;
        }
        if (verb == "keane") {
            need(2);
            return emit_decision(inv, out, keane_check(t, inv.flag_long("depth", 50)));
        }
        if (verb == "rauzy") {
            need(2);
            auto path = rauzy_path(t, static_cast<size_t>(inv.flag_long("depth", 30)));
            std::string text = path.type_string();
            if (path.period)
                text += " (preperiod " + std::to_string(path.period->first) + ", period " +
                        std::to_string(path.period->second) + ")";
            if (path.keane_violation) text += " [keane violation]";
            emit(inv, out, rauzy_path_to_json(path), text);
            return 0;
        }
        if (verb == "induce") {
            need(3);
            Word w = word_from_string(pos[2], t.d);
            IetSpec ind = induced_on_cylinder(t, w, inv.flag_long("cap", 100000));
            emit(inv, out, iet_to_json(ind), "d = " + std::to_string(ind.d));
            return 0;
        }
        if (verb == "minmodel") {
            need(2);
            IetSpec m = minimal_model(t);
            emit(inv, out, iet_to_json(m), "d = " + std::to_string(m.d));
            return 0;
        }
        if (verb == "saf") {
            need(2);
            WedgeValue w = saf(t);
            emit(inv, out, wedge_to_json(w), w.str());
            return 0;
        }
        if (verb == "invariants") {
            need(2);
            auto ri = rational_invariants(t);
            emit(inv, out, Json{{"span", qspan_to_json(ri.span)}, {"saf", wedge_to_json(ri.saf)}},
                 ri.span.str() + " ; " + ri.saf.str());
            return 0;
        }
        if (verb == "conjugate" || verb == "flow") {
            need(2);
            IetSpec t2 = iet_from_flags(inv, "2");
            size_t depth = static_cast<size_t>(inv.flag_long("depth", verb == "flow" ? 4 : 20));
            Decision d = verb == "conjugate" ? ies_conjugate(t, t2, depth)
                                             : ies_flow_equivalent(t, t2, depth);
            return emit_decision(inv, out, d);
        }
    }
    if (group == "decide") {
        if (verb == "selfmult") {
            need(4);
            return emit_decision(inv, out, self_mult_equivalent(arg_number(pos[2]), std::stol(pos[3])));
        }
        need(4);
        auto [a, b] = arg_pair(pos[2], pos[3]);
        if (verb == "conjugate") return emit_decision(inv, out, sturmian_conjugate(a, b));
        if (verb == "flow") return emit_decision(inv, out, sturmian_flow_equivalent(a, b));
        if (verb == "eventual-flow")
            return emit_decision(inv, out,
                                 sturmian_eventually_flow_equivalent(a, b, inv.flag_long("n-max", 20)));
        if (verb == "isogeny") return emit_decision(inv, out, sturmian_isogenous(a, b));
    }
    err << "unknown command: " << group << (verb.empty() ? "" : " " + verb) << "\n" << kUsage;
    return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    if (const char* env = std::getenv("STURMKIT_PRECISION")) {
        try {
            set_default_formal_precision(std::stoi(env));
        } catch (...) {
        }
    }
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            inv.json = true;
        } else if (a == "--help" || a == "-h") {
            out << kUsage;
            return 0;
        } else if (a == "--periodic") {
            inv.flags["periodic"] = "1";
        } else if (a.rfind("--", 0) == 0) {
            std::string key = a.substr(2);
            auto eq = key.find('=');
            if (eq != std::string::npos) {
                inv.flags[key.substr(0, eq)] = key.substr(eq + 1);
            } else if (i + 1 < args.size()) {
                inv.flags[key] = args[++i];
            } else {
                err << "flag " << a << " needs a value\n";
                return kExitUsage;
            }
        } else {
            inv.positional.push_back(a);
        }
    }
    if (inv.has("precision")) set_default_formal_precision(static_cast<int>(inv.flag_long("precision", 10000)));
    if (inv.positional.empty()) {
        err << kUsage;
        return kExitUsage;
    }
    if (inv.positional[0] == "batch") {
        Invocation b = inv;
        b.positional.erase(b.positional.begin());
        return run_batch(b, out, err);
    }
    try {
        return run_command(inv, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace sturmkit::cli
