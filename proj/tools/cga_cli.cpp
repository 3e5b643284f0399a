// Command-line harness: seeded verification suites, witness extraction for the
// intersection lemmas, and a line-oriented expression evaluator.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cga/groups.hpp"
#include "cga/interp.hpp"
#include "cga/operators.hpp"
#include "cga/verify.hpp"

namespace {

using namespace cga;

struct CommonFlags {
    std::int64_t p = 3;
    int precision = 4;
    int maxdeg = 6;
    std::uint64_t seed = 0;
    int trials = 100;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--p", f.p, "odd prime modulus base");
    cmd->add_option("--precision", f.precision, "coefficient precision N (work mod p^N)");
    cmd->add_option("--maxdeg", f.maxdeg, "total-degree truncation bound D");
    cmd->add_option("--seed", f.seed, "seed for the deterministic trial streams");
    cmd->add_option("--trials", f.trials, "trials per suite");
}

int run_verify(const std::string& suite, const CommonFlags& f) {
    Params par;
    try {
        par = Params::make(f.p, f.precision, f.maxdeg);
        if (f.trials < 1) throw precondition_error("trials must be >= 1");
        if (suite != "all" && !has_suite(suite)) throw precondition_error("unknown suite '" + suite + "'");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    for (const std::string& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        Report rep = run_suite(name, par, f.seed, f.trials);
        auto t1 = std::chrono::steady_clock::now();
        std::cout << report_json(rep) << "\n";
        std::cerr << "# " << name << ": "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open input file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw parse_error("expected 'name = series' line", 0);
        std::string key = line.substr(0, eq);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        std::size_t ks = 0;
        while (ks < key.size() && std::isspace(static_cast<unsigned char>(key[ks]))) ++ks;
        kv[key.substr(ks)] = line.substr(eq + 1);
    }
    return kv;
}

int run_witness(const std::string& kind, const std::string& input, const std::string& output,
                const CommonFlags& f) {
    Params par;
    try {
        par = Params::make(f.p, f.precision, f.maxdeg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    Algebra A(par);
    try {
        auto kv = read_kv_file(input);
        auto need = [&](const std::string& key) -> Series {
            auto it = kv.find(key);
            if (it == kv.end()) throw precondition_error("missing '" + key + " = ...' line");
            return A.to_chart(parse_series(it->second, par), Chart::SB);
        };
        std::ofstream out(output);
        if (!out) throw precondition_error("cannot open output file '" + output + "'");
        Series zeta = Series::variable(Chart::SB, par, kZeta);
        Series tau = Series::variable(Chart::SB, par, kTau);
        if (kind == "szeta") {
            Series a = need("a");
            Series w = solve_s_zeta(A, a);
            out << "witness = " << format_series(w) << "\n";
            Series resid = w * zeta - A.antisym(a);
            resid.truncate_to(a.validity - 1);
            std::cout << "residual " << format_series(resid) << " (validity " << resid.validity
                      << ")\n";
            return resid.is_zero() ? 0 : 1;
        }
        if (kind == "sdelta") {
            Series r = need("r");
            auto [cz, ct] = solve_s_delta(A, r);
            out << "czeta = " << format_series(cz) << "\n";
            out << "ctau = " << format_series(ct) << "\n";
            Series resid = A.antisym(cz * zeta + ct * tau) - A.antisym(r);
            resid.truncate_to(r.validity - 2);
            std::cout << "residual " << format_series(resid) << " (validity " << resid.validity
                      << ")\n";
            return resid.is_zero() ? 0 : 1;
        }
        if (kind == "cross") {
            Series a = need("a"), b = need("b");
            Series c = cross_witness(A, a, b);
            out << "witness = " << format_series(c) << "\n";
            Series resid = (c * tau - a) + (c * zeta - b);
            resid.truncate_to(std::min(a.validity, b.validity) - 2);
            std::cout << "residual " << format_series(resid) << " (validity " << resid.validity
                      << ")\n";
            return resid.is_zero() ? 0 : 1;
        }
        std::cerr << "error: unknown witness kind '" << kind << "'\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// split a line into the operation name and top-level arguments: ';' separates
// arguments outside brackets; with no top-level ';', whitespace separates
std::vector<std::string> split_args(const std::string& rest) {
    std::vector<std::string> out;
    auto depth_step = [](char ch, int& depth) {
        if (ch == '[' || ch == '{') ++depth;
        if (ch == ']' || ch == '}') --depth;
    };
    int depth = 0;
    bool top_semi = false;
    for (char ch : rest) {
        depth_step(ch, depth);
        if (ch == ';' && depth == 0) top_semi = true;
    }
    std::string cur;
    auto flush = [&] {
        std::size_t b = cur.find_first_not_of(" \t");
        if (b == std::string::npos) {
            cur.clear();
            return;
        }
        std::size_t e = cur.find_last_not_of(" \t");
        out.push_back(cur.substr(b, e - b + 1));
        cur.clear();
    };
    depth = 0;
    for (char ch : rest) {
        depth_step(ch, depth);
        bool sep = top_semi ? (ch == ';' && depth == 0)
                            : ((ch == ' ' || ch == '\t') && depth == 0);
        if (sep)
            flush();
        else
            cur += ch;
    }
    flush();
    return out;
}

struct Evaluator {
    const Algebra& A;

    Series series_arg(const std::string& text) const { return parse_series(text, A.params()); }

    CbmElem cbm_arg(const std::string& text) const {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw parse_error("expected a [a; b; r; w] tuple", 0);
        std::vector<std::string> parts = split_args(text.substr(1, text.size() - 2));
        if (parts.size() != 3 && parts.size() != 4)
            throw precondition_error("group tuples have 3 or 4 fields");
        const Params& par = A.params();
        Series r = parse_series(parts[2], Chart::R, par);
        Series w = parts.size() == 4 ? parse_series(parts[3], Chart::R, par)
                                     : Series::zero(Chart::R, par);
        return cbm_make(A, std::stoll(parts[0]), std::stoll(parts[1]), r, w);
    }

    // "{a,b; a,b; ...}": a quantifier-witness sample of group exponent pairs
    std::vector<GroupElt> sample_arg(const std::string& text) const {
        if (text.size() < 2 || text.front() != '{' || text.back() != '}')
            throw parse_error("expected a {a,b; a,b; ...} sample", 0);
        std::vector<GroupElt> out;
        std::istringstream is(text.substr(1, text.size() - 2));
        std::string part;
        while (std::getline(is, part, ';')) {
            std::size_t comma = part.find(',');
            if (comma == std::string::npos) throw parse_error("expected 'a,b' exponent pair", 0);
            out.push_back(GroupElt::make(A.params(), std::stoll(part.substr(0, comma)),
                                         std::stoll(part.substr(comma + 1))));
        }
        if (out.empty()) throw precondition_error("sample must be nonempty");
        return out;
    }

    std::string cbm_str(const CbmElem& g, bool with_w) const {
        std::ostringstream os;
        std::int64_t a = static_cast<std::int64_t>(g.a.v), b = static_cast<std::int64_t>(g.b.v);
        std::uint64_t half_mod = A.params().mod_exp / 2;
        if (g.a.v > half_mod) a -= static_cast<std::int64_t>(A.params().mod_exp);
        if (g.b.v > half_mod) b -= static_cast<std::int64_t>(A.params().mod_exp);
        os << "[" << a << "; " << b << "; " << format_series(g.r);
        if (with_w) os << "; " << format_series(g.w);
        os << "]";
        return os.str();
    }

    std::string eval_line(const std::string& line) const {
        std::size_t sp = line.find_first_of(" \t");
        std::string op = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        std::vector<std::string> args = split_args(rest);
        auto want = [&](std::size_t n) {
            if (args.size() != n)
                throw precondition_error("operation '" + op + "' takes " + std::to_string(n) +
                                         " arguments");
        };
        if (op == "star") {
            want(1);
            return format_series(A.star(series_arg(args[0])));
        }
        if (op == "pi") {
            want(1);
            Series s = series_arg(args[0]);
            if (s.chart == Chart::R) throw precondition_error("pi expects an S-chart series");
            return format_series(A.pi(s));
        }
        if (op == "gamma") {
            want(1);
            return format_series(A.gamma(series_arg(args[0])));
        }
        if (op == "psi" || op == "psi1" || op == "psi2") {
            want(1);
            PsiKind k = op == "psi" ? PsiKind::Avg : (op == "psi1" ? PsiKind::One : PsiKind::Two);
            return format_series(psi(A, series_arg(args[0]), k));
        }
        if (op == "embed1" || op == "embed2" || op == "embedhat") {
            want(1);
            EmbedKind k = op == "embed1" ? EmbedKind::One
                                         : (op == "embed2" ? EmbedKind::Two : EmbedKind::Hat);
            return format_series(A.embed(k, parse_series(args[0], Chart::R, A.params())));
        }
        if (op == "pairing") {
            want(2);
            return format_series(A.pairing(parse_series(args[0], Chart::R, A.params()),
                                           parse_series(args[1], Chart::R, A.params())));
        }
        if (op == "pairing_pi") {
            want(2);
            return format_series(A.pairing_pi(parse_series(args[0], Chart::R, A.params()),
                                              parse_series(args[1], Chart::R, A.params())));
        }
        if (op == "split") {
            want(1);
            auto [plus, minus] = A.split_pm(parse_series(args[0], Chart::R, A.params()));
            return format_series(plus) + "\n" + format_series(minus);
        }
        if (op == "member") {
            want(2);
            IdealKind k;
            if (args[0] == "szeta")
                k = IdealKind::SZeta;
            else if (args[0] == "stau")
                k = IdealKind::STau;
            else if (args[0] == "szetatau")
                k = IdealKind::SZetaTau;
            else if (args[0] == "delta")
                k = IdealKind::Delta;
            else
                throw precondition_error("unknown ideal '" + args[0] + "'");
            return A.ideal_member(series_arg(args[1]), k) ? "true" : "false";
        }
        if (op == "metab_mul") {
            want(2);
            CbmElem g = cbm_arg(args[0]), h = cbm_arg(args[1]);
            MetabElem gm{g.a, g.b, g.r}, hm{h.a, h.b, h.r};
            MetabElem r = metab_mul(A, gm, hm);
            return cbm_str(CbmElem{r.a, r.b, r.r, Series::zero(Chart::R, A.params())}, false);
        }
        if (op == "metab_inv") {
            want(1);
            CbmElem g = cbm_arg(args[0]);
            MetabElem r = metab_inv(A, MetabElem{g.a, g.b, g.r});
            return cbm_str(CbmElem{r.a, r.b, r.r, Series::zero(Chart::R, A.params())}, false);
        }
        if (op == "metab_comm") {
            want(2);
            CbmElem g = cbm_arg(args[0]), h = cbm_arg(args[1]);
            MetabElem r = metab_comm(A, MetabElem{g.a, g.b, g.r}, MetabElem{h.a, h.b, h.r});
            return cbm_str(CbmElem{r.a, r.b, r.r, Series::zero(Chart::R, A.params())}, false);
        }
        if (op == "cbm_mul") {
            want(2);
            return cbm_str(cbm_mul(A, cbm_arg(args[0]), cbm_arg(args[1])), true);
        }
        if (op == "cbm_inv") {
            want(1);
            return cbm_str(cbm_inv(A, cbm_arg(args[0])), true);
        }
        if (op == "cbm_comm") {
            want(2);
            return cbm_str(cbm_comm(A, cbm_arg(args[0]), cbm_arg(args[1])), true);
        }
        if (op == "cbm_conj") {
            want(3);
            GroupElt t{PadicInt::exponent(A.params(), std::stoll(args[1])),
                       PadicInt::exponent(A.params(), std::stoll(args[2]))};
            return cbm_str(cbm_conj(A, cbm_arg(args[0]), t), true);
        }
        if (op == "membership") {
            want(1);
            switch (membership_CN(A, cbm_arg(args[0]))) {
                case CNClass::C: return "C";
                case CNClass::N: return "N";
                case CNClass::Both: return "both";
                default: return "neither";
            }
        }
        if (op == "rel_add") {
            want(3);
            return rel_add_check(A, cbm_arg(args[0]), cbm_arg(args[1]), cbm_arg(args[2]))
                       ? "true"
                       : "false";
        }
        if (op == "rel_star") {
            want(2);
            StarCheck c = rel_star_check(A, cbm_arg(args[0]), cbm_arg(args[1]));
            return c.agree ? (c.coord_side ? "true" : "false") : "disagree";
        }
        if (op == "rel_product") {
            want(4);
            ProductCheck c = rel_product_check(A, cbm_arg(args[0]), cbm_arg(args[1]),
                                               cbm_arg(args[2]), sample_arg(args[3]));
            return c.group_side_all ? "true" : "false";
        }
        if (op == "pairing_kernel") {
            want(2);
            int d = static_cast<int>(std::stoll(args[0]));
            return std::to_string(pairing_kernel(A, sample_arg(args[1]), d));
        }
        throw precondition_error("unknown operation '" + op + "'");
    }
};

int run_eval(const std::string& path, const CommonFlags& f) {
    Params par;
    try {
        par = Params::make(f.p, f.precision, f.maxdeg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open expression file '" << path << "'\n";
        return 2;
    }
    Algebra A(par);
    Evaluator ev{A};
    std::string line;
    bool any_error = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            std::cout << ev.eval_line(line) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "error: line " << lineno << ": " << e.what() << "\n";
            any_error = true;
        }
    }
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated completed-group-algebra toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run verification suites, JSON report per line");
    verify->add_option("suite", suite, "suite id or 'all'");
    add_common(verify, f);

    std::string kind, input, output = "witness.out";
    CLI::App* witness = app.add_subcommand("witness", "solve an intersection instance from a file");
    witness->add_option("kind", kind, "szeta | sdelta | cross")->required();
    witness->add_option("input", input, "input file with 'name = series' lines")->required();
    witness->add_option("output", output, "output witness file");
    add_common(witness, f);

    std::string exprfile;
    CLI::App* eval = app.add_subcommand("eval", "evaluate operations listed in a file");
    eval->add_option("file", exprfile, "expression file, one operation per line")->required();
    add_common(eval, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) return run_verify(suite, f);
    if (witness->parsed()) return run_witness(kind, input, output, f);
    return run_eval(exprfile, f);
}
