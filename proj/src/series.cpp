#include "cga/series.hpp"

#include <algorithm>
#include <memory>
#include <cctype>
#include <map>
#include <mutex>
#include <unordered_map>

namespace cga {

namespace {

const char* kVarsR[] = {"xi", "eta"};
const char* kVarsSA[] = {"xi1", "eta1", "xi2", "eta2"};
const char* kVarsSB[] = {"xi1", "eta1", "zeta", "tau"};

std::uint32_t pack(const std::array<std::uint8_t, 4>& e) {
    return static_cast<std::uint32_t>(e[0]) | static_cast<std::uint32_t>(e[1]) << 8 |
           static_cast<std::uint32_t>(e[2]) << 16 | static_cast<std::uint32_t>(e[3]) << 24;
}

struct TableKey {
    int arity;
    int maxdeg;
    bool operator<(const TableKey& o) const {
        return arity != o.arity ? arity < o.arity : maxdeg < o.maxdeg;
    }
};

struct TableStore {
    std::mutex mu;
    std::map<TableKey, std::unique_ptr<MonoTable>> tables;
    std::map<TableKey, std::unordered_map<std::uint32_t, std::uint32_t>> lookup;
};

TableStore& store() {
    static TableStore s;
    return s;
}

void gen_monos(int arity, int slot, int remaining, std::array<std::uint8_t, 4>& cur,
               std::vector<std::array<std::uint8_t, 4>>& out) {
    if (slot == arity - 1) {
        cur[slot] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        cur[slot] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[slot] = static_cast<std::uint8_t>(e);
        gen_monos(arity, slot + 1, remaining - e, cur, out);
    }
    cur[slot] = 0;
}

} // namespace

const char* chart_name(Chart c) {
    switch (c) {
        case Chart::R: return "R";
        case Chart::SA: return "SA";
        default: return "SB";
    }
}

const char* var_name(Chart c, int v) {
    switch (c) {
        case Chart::R: return kVarsR[v];
        case Chart::SA: return kVarsSA[v];
        default: return kVarsSB[v];
    }
}

int var_index(Chart c, const std::string& name) {
    for (int i = 0; i < chart_arity(c); ++i)
        if (name == var_name(c, i)) return i;
    return -1;
}

const MonoTable& MonoTable::get(int arity, int maxdeg) {
    TableStore& s = store();
    std::lock_guard<std::mutex> lk(s.mu);
    TableKey key{arity, maxdeg};
    auto it = s.tables.find(key);
    if (it != s.tables.end()) return *it->second;

    auto owned = std::make_unique<MonoTable>();
    MonoTable* t = owned.get();
    t->arity = arity;
    t->maxdeg = maxdeg;
    t->deg_start.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
    std::array<std::uint8_t, 4> cur{};
    for (int d = 0; d < maxdeg; ++d) {
        t->deg_start[d] = t->expo.size();
        std::vector<std::array<std::uint8_t, 4>> level;
        gen_monos(arity, 0, d, cur, level);
        for (auto& e : level) {
            t->expo.push_back(e);
            t->degree.push_back(d);
        }
    }
    t->deg_start[maxdeg] = t->expo.size();
    t->count = t->expo.size();

    auto& lut = s.lookup[key];
    for (std::size_t i = 0; i < t->count; ++i) lut.emplace(pack(t->expo[i]), static_cast<std::uint32_t>(i));

    t->prod.assign(t->count * t->count, kNoRank);
    for (std::size_t i = 0; i < t->count; ++i) {
        for (std::size_t j = 0; j < t->count; ++j) {
            if (t->degree[i] + t->degree[j] >= maxdeg) continue;
            std::array<std::uint8_t, 4> e{};
            for (int v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(t->expo[i][v] + t->expo[j][v]);
            t->prod[i * t->count + j] = lut.at(pack(e));
        }
    }
    s.tables.emplace(key, std::move(owned));
    return *t;
}

std::uint32_t MonoTable::rank_of(const std::array<std::uint8_t, 4>& e) const {
    TableStore& s = store();
    std::lock_guard<std::mutex> lk(s.mu);
    auto& lut = s.lookup.at(TableKey{arity, maxdeg});
    auto it = lut.find(pack(e));
    return it == lut.end() ? kNoRank : it->second;
}

Series Series::zero(Chart chart, const Params& par, int validity) {
    Series s;
    s.chart = chart;
    s.par = par;
    s.validity = validity < 0 ? par.maxdeg : validity;
    if (s.validity > par.maxdeg) throw precondition_error("validity above maxdeg");
    s.c.assign(s.table().count, 0);
    return s;
}

Series Series::constant(Chart chart, const Params& par, std::int64_t value, int validity) {
    Series s = zero(chart, par, validity);
    if (s.validity > 0) s.c[0] = reduce_int(value, par.mod_coeff);
    return s;
}

Series Series::variable(Chart chart, const Params& par, int var, int validity) {
    Series s = zero(chart, par, validity);
    std::array<std::uint8_t, 4> e{};
    e[var] = 1;
    if (s.validity > 1) s.c[s.table().rank_of(e)] = 1;
    return s;
}

std::uint64_t Series::coeff(const std::array<std::uint8_t, 4>& e) const {
    std::uint32_t r = table().rank_of(e);
    return r == MonoTable::kNoRank ? 0 : c[r];
}

void Series::set_coeff(const std::array<std::uint8_t, 4>& e, std::uint64_t value) {
    std::uint32_t r = table().rank_of(e);
    if (r == MonoTable::kNoRank || table().degree[r] >= validity)
        throw precondition_error("set_coeff outside validity");
    c[r] = value % par.mod_coeff;
}

bool Series::is_zero() const {
    for (std::uint64_t x : c)
        if (x) return false;
    return true;
}

int Series::low_degree() const {
    const MonoTable& t = table();
    for (std::size_t i = 0; i < t.count_below(validity); ++i)
        if (c[i]) return t.degree[i];
    return -1;
}

void Series::truncate_to(int v) {
    if (v < 0) v = 0;
    if (v < validity) {
        const MonoTable& t = table();
        for (std::size_t i = t.count_below(v); i < t.count; ++i) c[i] = 0;
    }
    validity = std::min(v, par.maxdeg);
}

namespace {

void check_compat(const Series& a, const Series& b) {
    if (a.chart != b.chart) throw precondition_error("series chart mismatch");
    if (!(a.par == b.par)) throw precondition_error("series params mismatch");
}

} // namespace

Series operator+(const Series& a, const Series& b) {
    check_compat(a, b);
    Series r = Series::zero(a.chart, a.par, std::min(a.validity, b.validity));
    std::size_t n = r.table().count_below(r.validity);
    for (std::size_t i = 0; i < n; ++i) r.c[i] = addmod(a.c[i], b.c[i], a.par.mod_coeff);
    return r;
}

Series operator-(const Series& a, const Series& b) {
    check_compat(a, b);
    Series r = Series::zero(a.chart, a.par, std::min(a.validity, b.validity));
    std::size_t n = r.table().count_below(r.validity);
    for (std::size_t i = 0; i < n; ++i) r.c[i] = submod(a.c[i], b.c[i], a.par.mod_coeff);
    return r;
}

Series operator-(const Series& a) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i)
        if (r.c[i]) r.c[i] = a.par.mod_coeff - r.c[i];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    check_compat(a, b);
    const MonoTable& t = a.table();
    Series r = Series::zero(a.chart, a.par, std::min(a.validity, b.validity));
    std::size_t na = t.count_below(a.validity);
    std::size_t nb = t.count_below(b.validity);
    for (std::size_t i = 0; i < na; ++i) {
        if (!a.c[i]) continue;
        if (t.degree[i] >= r.validity) break;
        const std::uint32_t* row = &t.prod[i * t.count];
        for (std::size_t j = 0; j < nb; ++j) {
            if (!b.c[j]) continue;
            if (t.degree[i] + t.degree[j] >= r.validity) continue;
            std::uint32_t k = row[j];
            r.c[k] = addmod(r.c[k], mulmod(a.c[i], b.c[j], a.par.mod_coeff), a.par.mod_coeff);
        }
    }
    return r;
}

Series scale(const Series& a, const PadicInt& k) {
    if (k.mod != a.par.mod_coeff) throw precondition_error("scale: coefficient precision mismatch");
    Series r = a;
    for (auto& x : r.c) x = mulmod(x, k.v, a.par.mod_coeff);
    return r;
}

Series scale(const Series& a, std::int64_t k) { return scale(a, PadicInt::coeff(a.par, k)); }

bool eq_below(const Series& a, const Series& b, int v) {
    check_compat(a, b);
    int bound = std::min({v, a.validity, b.validity});
    std::size_t n = a.table().count_below(std::max(bound, 0));
    for (std::size_t i = 0; i < n; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

bool is_zero_below(const Series& a, int v) {
    int bound = std::min(v, a.validity);
    std::size_t n = a.table().count_below(std::max(bound, 0));
    for (std::size_t i = 0; i < n; ++i)
        if (a.c[i]) return false;
    return true;
}

Series subst(const Series& s, const std::vector<Series>& images) {
    int arity = chart_arity(s.chart);
    if (static_cast<int>(images.size()) != arity)
        throw precondition_error("subst: one image per source variable required");
    Chart target = images[0].chart;
    int v = s.validity;
    for (const Series& im : images) {
        if (im.chart != target || !(im.par == s.par))
            throw precondition_error("subst: images must share a chart and params");
        if (im.c[0] != 0)
            throw precondition_error("subst: image has a nonzero constant term");
        v = std::min(v, im.validity);
    }
    const MonoTable& t = s.table();
    Series out = Series::zero(target, s.par, v);
    // memoized powers of each image, truncated at the common validity
    std::vector<std::vector<Series>> pw(static_cast<std::size_t>(arity));
    Series one = Series::constant(target, s.par, 1, v);
    for (int var = 0; var < arity; ++var) pw[static_cast<std::size_t>(var)].push_back(one);
    auto power = [&](int var, int e) -> const Series& {
        auto& col = pw[static_cast<std::size_t>(var)];
        while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * images[static_cast<std::size_t>(var)]);
        return col[static_cast<std::size_t>(e)];
    };
    std::size_t n = t.count_below(v);
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.c[i]) continue;
        Series term = one;
        for (int var = 0; var < arity; ++var) {
            int e = t.expo[i][var];
            if (e) term = term * power(var, e);
        }
        out = out + scale(term, PadicInt::coeff(s.par, static_cast<std::int64_t>(s.c[i])));
    }
    return out;
}

Series divide_var(const Series& s, int var) {
    const MonoTable& t = s.table();
    Series r = Series::zero(s.chart, s.par, std::max(s.validity - 1, 0));
    std::size_t n = t.count_below(s.validity);
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.c[i]) continue;
        if (t.expo[i][var] == 0)
            throw precondition_error(std::string("divide_var: a stored monomial lacks ") +
                                     var_name(s.chart, var));
        std::array<std::uint8_t, 4> e = t.expo[i];
        --e[var];
        r.c[t.rank_of(e)] = s.c[i];
    }
    return r;
}

Series kill_var(const Series& s, int var) {
    const MonoTable& t = s.table();
    Series r = s;
    for (std::size_t i = 0; i < t.count; ++i)
        if (t.expo[i][var]) r.c[i] = 0;
    return r;
}

Series var_part(const Series& s, int var) {
    const MonoTable& t = s.table();
    Series r = s;
    for (std::size_t i = 0; i < t.count; ++i)
        if (!t.expo[i][var]) r.c[i] = 0;
    return r;
}

Series remap(const Series& s, Chart target, const std::array<int, 4>& slot_map) {
    const MonoTable& ts = s.table();
    Series r = Series::zero(target, s.par, s.validity);
    const MonoTable& tt = r.table();
    std::size_t n = ts.count_below(s.validity);
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.c[i]) continue;
        std::array<std::uint8_t, 4> e{};
        for (int v = 0; v < chart_arity(s.chart); ++v) {
            if (!ts.expo[i][v]) continue;
            if (slot_map[v] < 0) throw precondition_error("remap: nonzero exponent on a dropped variable");
            e[slot_map[v]] = ts.expo[i][v];
        }
        r.c[tt.rank_of(e)] = s.c[i];
    }
    return r;
}

Series group_series(const Params& par, const PadicInt& a, const PadicInt& b) {
    if (a.mod != par.mod_exp || b.mod != par.mod_exp)
        throw precondition_error("group_series: exponents must carry guard precision");
    Series r = Series::zero(Chart::R, par);
    const MonoTable& t = r.table();
    std::vector<std::uint64_t> ca(static_cast<std::size_t>(par.maxdeg)), cb(static_cast<std::size_t>(par.maxdeg));
    for (int k = 0; k < par.maxdeg; ++k) {
        ca[static_cast<std::size_t>(k)] = binomial(par, a, k).v;
        cb[static_cast<std::size_t>(k)] = binomial(par, b, k).v;
    }
    for (std::size_t i = 0; i < t.count; ++i) {
        int j = t.expo[i][0], k = t.expo[i][1];
        r.c[i] = mulmod(ca[static_cast<std::size_t>(j)], cb[static_cast<std::size_t>(k)], par.mod_coeff);
    }
    return r;
}

Series inv_one_plus_var(Chart chart, const Params& par, int var) {
    // (1+v)^{-1} - 1 = -v + v^2 - v^3 + ...
    Series r = Series::zero(chart, par);
    const MonoTable& t = r.table();
    std::array<std::uint8_t, 4> e{};
    for (int k = 1; k < par.maxdeg; ++k) {
        e[var] = static_cast<std::uint8_t>(k);
        r.c[t.rank_of(e)] = reduce_int(k % 2 ? -1 : 1, par.mod_coeff);
    }
    return r;
}

std::string format_series(const Series& s) {
    const MonoTable& t = s.table();
    std::string out;
    std::size_t n = t.count_below(s.validity);
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.c[i]) continue;
        std::int64_t b = static_cast<std::int64_t>(s.c[i]);
        if (s.c[i] > s.par.mod_coeff / 2) b -= static_cast<std::int64_t>(s.par.mod_coeff);
        bool neg = b < 0;
        std::uint64_t mag = neg ? static_cast<std::uint64_t>(-b) : static_cast<std::uint64_t>(b);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body = std::to_string(mag);
        for (int v = 0; v < chart_arity(s.chart); ++v) {
            int e = t.expo[i][v];
            if (!e) continue;
            body += "*";
            body += var_name(s.chart, v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct RawTerm {
    std::int64_t sign = 1;
    std::uint64_t coeff = 1;
    bool has_coeff = false;
    std::vector<std::pair<std::string, int>> vars; // (name, power); positions for errors
    std::vector<std::size_t> var_pos;
};

struct Tokenizer {
    const std::string& text;
    std::size_t pos = 0;
    explicit Tokenizer(const std::string& t) : text(t) {}
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
};

std::uint64_t parse_number(Tokenizer& tk) {
    tk.skip_ws();
    std::size_t start = tk.pos;
    unsigned __int128 acc = 0;
    while (tk.pos < tk.text.size() && std::isdigit(static_cast<unsigned char>(tk.text[tk.pos]))) {
        acc = acc * 10 + static_cast<unsigned>(tk.text[tk.pos] - '0');
        if (acc > (static_cast<unsigned __int128>(1) << 100)) throw parse_error("number too large", start);
        ++tk.pos;
    }
    if (tk.pos == start) throw parse_error("expected a number", start);
    return static_cast<std::uint64_t>(acc & 0xffffffffffffffffull);
}

std::string parse_ident(Tokenizer& tk) {
    tk.skip_ws();
    std::size_t start = tk.pos;
    while (tk.pos < tk.text.size() &&
           (std::isalnum(static_cast<unsigned char>(tk.text[tk.pos])) || tk.text[tk.pos] == '_'))
        ++tk.pos;
    if (tk.pos == start) throw parse_error("expected a variable name", start);
    return tk.text.substr(start, tk.pos - start);
}

std::vector<RawTerm> parse_terms(const std::string& text) {
    Tokenizer tk(text);
    std::vector<RawTerm> terms;
    bool first = true;
    while (!tk.done()) {
        RawTerm term;
        char sc = tk.peek();
        if (sc == '+' || sc == '-') {
            term.sign = sc == '-' ? -1 : 1;
            ++tk.pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", tk.pos);
        }
        first = false;
        char c = tk.peek();
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            term.coeff = parse_number(tk);
            term.has_coeff = true;
            any = true;
        }
        for (;;) {
            char n = tk.peek();
            if (any) {
                if (n != '*') break;
                ++tk.pos; // consume '*'
                n = tk.peek();
            }
            if (!std::isalpha(static_cast<unsigned char>(n))) {
                if (!any) throw parse_error("expected a coefficient or variable", tk.pos);
                throw parse_error("expected a variable after '*'", tk.pos);
            }
            std::size_t at = tk.pos;
            std::string name = parse_ident(tk);
            int power = 1;
            if (tk.peek() == '^') {
                ++tk.pos;
                std::uint64_t e = parse_number(tk);
                if (e > 64) throw parse_error("exponent too large", at);
                power = static_cast<int>(e);
            }
            term.vars.emplace_back(name, power);
            term.var_pos.push_back(at);
            any = true;
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

} // namespace

Series parse_series(const std::string& text, Chart chart, const Params& par) {
    std::vector<RawTerm> terms = parse_terms(text);
    Series s = Series::zero(chart, par);
    const MonoTable& t = s.table();
    for (const RawTerm& term : terms) {
        std::array<int, 4> we{};
        int deg = 0;
        for (std::size_t i = 0; i < term.vars.size(); ++i) {
            int vi = var_index(chart, term.vars[i].first);
            if (vi < 0)
                throw parse_error("unknown variable '" + term.vars[i].first + "' in chart " +
                                      chart_name(chart),
                                  term.var_pos[i]);
            we[vi] += term.vars[i].second;
            deg += term.vars[i].second;
        }
        if (deg >= par.maxdeg) continue; // beyond truncation: discarded as unknown
        std::array<std::uint8_t, 4> e{};
        for (int v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(we[v]);
        std::uint32_t r = t.rank_of(e);
        std::uint64_t add = term.coeff % par.mod_coeff;
        if (term.sign < 0) add = add ? par.mod_coeff - add : 0;
        s.c[r] = addmod(s.c[r], add, par.mod_coeff);
    }
    return s;
}

Series parse_series(const std::string& text, const Params& par) {
    std::vector<RawTerm> terms = parse_terms(text);
    bool ok[3] = {true, true, true};
    bool known_somewhere = true;
    std::size_t bad_pos = 0;
    std::string bad_name;
    for (const RawTerm& term : terms)
        for (std::size_t i = 0; i < term.vars.size(); ++i) {
            const std::string& name = term.vars[i].first;
            bool anywhere = false;
            for (int ch = 0; ch < 3; ++ch) {
                bool in = var_index(static_cast<Chart>(ch), name) >= 0;
                anywhere = anywhere || in;
                if (!in) ok[ch] = false;
            }
            if (!anywhere && known_somewhere) {
                known_somewhere = false;
                bad_pos = term.var_pos[i];
                bad_name = name;
            }
        }
    if (!known_somewhere) throw parse_error("unknown variable '" + bad_name + "'", bad_pos);
    for (int ch = 0; ch < 3; ++ch)
        if (ok[ch]) return parse_series(text, static_cast<Chart>(ch), par);
    throw parse_error("variables mix charts", 0);
}

} // namespace cga
