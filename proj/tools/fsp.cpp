// Command-line frontend: tabulate Schubert-type classes for a chosen formal
// group law, run the verification suites, enumerate reduced words, and emit
// the Kazhdan-Lusztig / special elliptic tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 internal invariant violation.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fsp/basis.hpp"
#include "fsp/coinvariant.hpp"
#include "fsp/fgl.hpp"
#include "fsp/hecke.hpp"
#include "fsp/linop.hpp"
#include "fsp/perm.hpp"
#include "fsp/rational.hpp"

using json = nlohmann::ordered_json;
using namespace fsp;

namespace {

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

struct Config {
    int rank = 2;
    std::string fgl = "additive";
    std::string basis = "averaged";
    std::string format = "json";
    int prec = 0;  // 0 = default for the command
    bool rank_override = false;
    std::string out;
};

constexpr int kRankCap = 4;

void check_rank(const Config& cfg) {
    if (cfg.rank < 1) throw usage_error("rank must be >= 1");
    if (cfg.rank > kRankCap && !cfg.rank_override)
        throw usage_error("rank " + std::to_string(cfg.rank) +
                          " exceeds the built-in cap " + std::to_string(kRankCap) +
                          "; pass --max-rank-override to proceed");
}

int default_prec(int n) { return n * (n + 1) / 2 + 4; }

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw usage_error("cannot open output file: " + cfg.out);
    f << text;
}

// ---------------------------------------------------------------------------
// FGL descriptor parsing

struct FglDesc {
    std::string kind;                 // additive | mult | elliptic | universal4 | ulog
    std::vector<std::string> params;  // raw parameter tokens
};

bool is_rational_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

bool is_param_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

FglDesc parse_fgl(const std::string& text) {
    FglDesc d;
    size_t colon = text.find(':');
    d.kind = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) d.params.push_back(tok);
        if (rest.empty() || rest.back() == ',') d.params.push_back("");
    }
    auto need = [&](size_t k) {
        if (d.params.size() != k)
            throw usage_error("fgl descriptor '" + text + "': expected " +
                              std::to_string(k) + " parameter(s)");
        for (const auto& p : d.params)
            if (!is_rational_literal(p) && !is_param_name(p))
                throw usage_error("fgl parameter '" + p +
                                  "' is neither a rational nor a parameter name");
    };
    if (d.kind == "additive" || d.kind == "universal4") need(0);
    else if (d.kind == "mult") need(1);
    else if (d.kind == "elliptic") need(2);
    else if (d.kind == "ulog") {
        need(1);
        if (!is_rational_literal(d.params[0]))
            throw usage_error("ulog:d needs an integer degree d >= 2");
        int deg = std::stoi(d.params[0]);
        if (deg < 2) throw usage_error("ulog:d needs d >= 2");
    } else
        throw usage_error("unknown fgl descriptor '" + text + "'");
    return d;
}

bool needs_symbolic(const FglDesc& d) {
    if (d.kind == "universal4" || d.kind == "ulog") return true;
    for (const auto& p : d.params)
        if (!is_rational_literal(p)) return true;
    return false;
}

template <class R>
R ring_param(const std::string& tok);

template <>
Rat ring_param<Rat>(const std::string& tok) {
    return Rat(mpq_class(tok));
}

template <>
ParamPoly ring_param<ParamPoly>(const std::string& tok) {
    if (is_rational_literal(tok)) return ParamPoly(mpq_class(tok));
    return ParamPoly::param(tok);
}

template <class R>
FGL<R> build_fgl(const FglDesc& d, int prec) {
    if (d.kind == "additive") return fgl_additive<R>(prec);
    if (d.kind == "mult") return fgl_multiplicative<R>(prec, ring_param<R>(d.params[0]));
    if (d.kind == "elliptic")
        return fgl_special_elliptic<R>(prec, ring_param<R>(d.params[0]),
                                       ring_param<R>(d.params[1]));
    throw usage_error("fgl '" + d.kind + "' requires symbolic coefficients");
}

template <>
FGL<ParamPoly> build_fgl<ParamPoly>(const FglDesc& d, int prec) {
    if (d.kind == "universal4") return fgl_universal4_extended(prec);
    if (d.kind == "ulog") {
        int deg = std::stoi(d.params[0]);
        std::vector<ParamPoly> ms;
        for (int k = 1; k < deg; ++k)
            ms.push_back(ParamPoly::param("m" + std::to_string(k)));
        while (static_cast<int>(ms.size()) < prec - 2) ms.push_back(ParamPoly::zero());
        return fgl_universal_log<ParamPoly>(prec, ms, "ulog");
    }
    if (d.kind == "additive") return fgl_additive<ParamPoly>(prec);
    if (d.kind == "mult")
        return fgl_multiplicative<ParamPoly>(prec, ring_param<ParamPoly>(d.params[0]));
    if (d.kind == "elliptic")
        return fgl_special_elliptic<ParamPoly>(prec, ring_param<ParamPoly>(d.params[0]),
                                               ring_param<ParamPoly>(d.params[1]));
    throw usage_error("unknown fgl descriptor '" + d.kind + "'");
}

// ---------------------------------------------------------------------------
// Serialization

// terms sorted by descending total degree, then descending lex on exponents
// (same order Coinv::str uses)
template <class R>
std::vector<std::pair<typename Coinv<R>::Exp, R>> sorted_terms(const Coinv<R>& x) {
    std::vector<std::pair<typename Coinv<R>::Exp, R>> ts(x.terms().begin(),
                                                         x.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = Series<R>::total_degree(a.first);
        int db = Series<R>::total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return ts;
}

template <class R>
json coinv_json(const Coinv<R>& x) {
    json out = json::array();
    for (const auto& [e, c] : sorted_terms(x))
        out.push_back(json{{"exp", e}, {"coeff", c.str()}});
    return out;
}

std::string word_list_str(const std::set<Word>& words) {
    std::string s;
    for (const Word& I : words) {
        if (!s.empty()) s += "; ";
        s += word_str(I);
    }
    return s;
}

// ---------------------------------------------------------------------------
// table command

template <class R>
json table_json(const Config& cfg, const DividedDiffContext<R>& ctx) {
    SchubertBasis<R> basis(ctx);
    json entries = json::array();
    for (const Perm& w : all_perms_length_order(cfg.rank)) {
        json e;
        e["w"] = perm_str(w);
        e["length"] = perm_length(w);
        json words = json::array();
        for (const Word& I : all_reduced_words(w)) words.push_back(word_str(I));
        e["words"] = words;
        if (cfg.basis == "averaged") {
            e["poly"] = coinv_json(basis.averaged(w));
        } else {
            json pw = json::array();
            for (const Word& I : all_reduced_words(w))
                pw.push_back(json{{"word", word_str(I)},
                                  {"poly", coinv_json(basis.class_for_word(I))}});
            e["per_word"] = pw;
        }
        entries.push_back(std::move(e));
    }
    json out;
    out["type"] = "A";
    out["rank"] = cfg.rank;
    out["fgl"] = cfg.fgl;
    out["basis"] = cfg.basis;
    out["entries"] = std::move(entries);
    return out;
}

template <class R>
std::string table_markdown(const Config& cfg, const DividedDiffContext<R>& ctx) {
    SchubertBasis<R> basis(ctx);
    std::string s = "# A" + std::to_string(cfg.rank) + " classes (fgl " + cfg.fgl +
                    ", basis " + cfg.basis + ")\n\n";
    for (const Perm& w : all_perms_length_order(cfg.rank)) {
        std::set<Word> words = all_reduced_words(w);
        s += "- w = " + perm_str(w) + " (len " + std::to_string(perm_length(w)) +
             ", words " + word_list_str(words) + ")";
        if (cfg.basis == "averaged") {
            s += ": pi = " + basis.averaged(w).str() + "\n";
        } else {
            s += "\n";
            for (const Word& I : words)
                s += "    C[" + word_str(I) + "] = " + basis.class_for_word(I).str() + "\n";
        }
    }
    return s;
}

std::string kl_table(const Config& cfg) {
    int prec = cfg.prec ? cfg.prec : default_prec(cfg.rank);
    FGL<Tate> law = tate_special_elliptic_fgl(prec);
    DividedDiffContext<Tate> ctx(cfg.rank, law);
    EllipticHeckeOps ops(ctx);
    KLBasis kl(cfg.rank);
    json entries = json::array();
    std::string md = "# A" + std::to_string(cfg.rank) +
                     " special elliptic Kazhdan-Lusztig table\n\n";
    for (const Perm& w : all_perms_length_order(cfg.rank)) {
        auto r = ops.special_elliptic_poly(w, kl);
        json e;
        e["w"] = perm_str(w);
        e["length"] = perm_length(w);
        json exp = json::array();
        std::string md_exp;
        for (const auto& [v, c] : kl.element(w).coeffs()) {
            exp.push_back(json{{"v", perm_str(v)}, {"coeff", c.str()}});
            if (!md_exp.empty()) md_exp += " + ";
            md_exp += "(" + c.str() + ")*T[" + perm_str(v) + "]";
        }
        e["kl_expansion"] = std::move(exp);
        e["pi_se"] = coinv_json(r.poly);
        e["integral"] = r.integral;
        entries.push_back(std::move(e));
        md += "- w = " + perm_str(w) + " (len " + std::to_string(perm_length(w)) +
              "): pi_se = " + r.poly.str() +
              (r.integral ? "  [integral]" : "  [non-integral]") + "\n";
        md += "    C' = " + md_exp + "\n";
    }
    if (cfg.format == "markdown") return md;
    json out;
    out["type"] = "A";
    out["rank"] = cfg.rank;
    out["fgl"] = "elliptic:1,-1/(t+t^-1)^2";
    out["basis"] = "kl";
    out["entries"] = std::move(entries);
    return out.dump(2) + "\n";
}

template <class R>
std::string table_for_ring(const Config& cfg, const FGL<R>& law) {
    DividedDiffContext<R> ctx(cfg.rank, law);
    if (cfg.format == "markdown") return table_markdown(cfg, ctx);
    return table_json(cfg, ctx).dump(2) + "\n";
}

int run_table(const Config& cfg) {
    check_rank(cfg);
    if (cfg.basis == "kl") {
        emit(cfg, kl_table(cfg));
        return 0;
    }
    if (cfg.basis != "averaged" && cfg.basis != "per-word")
        throw usage_error("unknown basis mode '" + cfg.basis + "'");
    FglDesc desc = parse_fgl(cfg.fgl);
    int prec = cfg.prec ? cfg.prec : default_prec(cfg.rank);
    if (needs_symbolic(desc))
        emit(cfg, table_for_ring(cfg, build_fgl<ParamPoly>(desc, prec)));
    else
        emit(cfg, table_for_ring(cfg, build_fgl<Rat>(desc, prec)));
    return 0;
}

// ---------------------------------------------------------------------------
// verify command

struct Report {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;

    void add(const std::string& name, bool pass) { checks.push_back({name, pass}); }
    void note(const std::string& text) { notes.push_back(text); }
    bool all_pass() const {
        for (const auto& [n, p] : checks)
            if (!p) return false;
        return true;
    }

    std::string render(const Config& cfg, const std::string& suite) const {
        if (cfg.format == "markdown") {
            std::string s = "# verify " + suite + " (rank " + std::to_string(cfg.rank) +
                            ", fgl " + cfg.fgl + ")\n\n";
            for (const auto& [n, p] : checks)
                s += std::string("- ") + (p ? "pass" : "FAIL") + ": " + n + "\n";
            for (const auto& t : notes) s += "- note: " + t + "\n";
            s += all_pass() ? "\nall checks passed\n" : "\nsome checks FAILED\n";
            return s;
        }
        json out;
        out["suite"] = suite;
        out["rank"] = cfg.rank;
        out["fgl"] = cfg.fgl;
        json cs = json::array();
        for (const auto& [n, p] : checks) cs.push_back(json{{"name", n}, {"pass", p}});
        out["checks"] = std::move(cs);
        out["notes"] = notes;
        out["pass"] = all_pass();
        return out.dump(2) + "\n";
    }
};

template <class R>
void verify_fgl_axioms(const FglDesc& desc, int prec, Report& rep) {
    FGL<R> law = build_fgl<R>(desc, prec);  // constructor runs the axiom checks
    rep.add("fgl-axioms: unit/commutativity/associativity at prec " +
                std::to_string(prec),
            true);
    std::vector<std::string> zv{"z"};
    Series<R> z = Series<R>::variable(zv, prec, 0);
    rep.add("fgl-axioms: F(z, iota(z)) = 0",
            law.F.substituted({z, law.iota}).is_zero());
    std::vector<std::string> xy{"x", "y"};
    Series<R> x = Series<R>::variable(xy, prec, 0);
    Series<R> y = Series<R>::variable(xy, prec, 1);
    Series<R> viag = x + y - x * y * law.g;
    rep.add("fgl-axioms: F = x + y - xy*g(x,y)",
            law.F.truncated(viag.prec()) == viag);
    Series<R> viar = y + x * law.r;
    rep.add("fgl-axioms: F = y + x*r(x,y)", law.F.truncated(viar.prec()) == viar);
}

template <class R>
void verify_operator_relations(const Config& cfg, const FGL<R>& law, Report& rep) {
    int n = cfg.rank;
    DividedDiffContext<R> ctx(n, law);
    std::vector<LinOp<R>> C;
    for (int i = 1; i <= n; ++i) C.push_back(divided_diff_op(ctx, i));
    R a12 = law.F.coeff({1, 2});
    for (int i = 1; i <= n; ++i) {
        LinOp<R> mk = multiplication_op(n, ctx.kappa_class(i));
        rep.add("(a) C_" + std::to_string(i) + "^2 = kappa_" + std::to_string(i) +
                    " C_" + std::to_string(i),
                C[i - 1].compose(C[i - 1]) == mk.compose(C[i - 1]));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            rep.add("(b) C_" + std::to_string(i) + " C_" + std::to_string(j) +
                        " = C_" + std::to_string(j) + " C_" + std::to_string(i),
                    C[i - 1].compose(C[j - 1]) == C[j - 1].compose(C[i - 1]));
    for (int i = 1; i < n; ++i) {
        int j = i + 1;
        LinOp<R> lhs = C[i - 1].compose(C[j - 1]).compose(C[i - 1]) -
                       C[j - 1].compose(C[i - 1]).compose(C[j - 1]);
        LinOp<R> rhs = (C[j - 1] - C[i - 1]).scaled(-a12);  // mu2 = -a12
        rep.add("(c) C_" + std::to_string(i) + std::to_string(j) + std::to_string(i) +
                    " - C_" + std::to_string(j) + std::to_string(i) + std::to_string(j) +
                    " = mu2 (C_" + std::to_string(j) + " - C_" + std::to_string(i) + ")",
                lhs == rhs);
    }
    // (d) in the form that follows from the Leibniz rule:
    // C_i (u f) = s_i(u) C_i(f) + (C_i(u) - kappa_i s_i(u)) f
    for (int i = 1; i <= n; ++i)
        for (int v = 1; v <= n + 1; ++v) {
            Coinv<R> u = Coinv<R>::t_var(n, v);
            Coinv<R> su = u.swapped(i);
            Coinv<R> corr = ctx.divided_diff(i, u) -
                            multiply_class(ctx.kappa_class(i), su);
            LinOp<R> lhs = C[i - 1].compose(multiplication_op(n, u));
            LinOp<R> rhs = multiplication_op(n, su).compose(C[i - 1]) +
                           multiplication_op(n, corr);
            rep.add("(d) C_" + std::to_string(i) + " m_{t" + std::to_string(v) +
                        "} = m_{s_i t" + std::to_string(v) + "} C_" + std::to_string(i) +
                        " + m_{C_i(t" + std::to_string(v) + ") - kappa_i s_i(t" +
                        std::to_string(v) + ")}",
                    lhs == rhs);
        }
}

template <class R>
void verify_braid(const Config& cfg, const FGL<R>& law, Report& rep) {
    int n = cfg.rank;
    DividedDiffContext<R> ctx(n, law);
    R a12 = law.F.coeff({1, 2});
    Coinv<R> pt = Coinv<R>::point(n);
    for (int i = 1; i < n; ++i) {
        int j = i + 1;
        Coinv<R> lhs = ctx.apply_word({i, j, i}, pt) - ctx.divided_diff(i, pt).scaled(a12);
        Coinv<R> rhs = ctx.apply_word({j, i, j}, pt) - ctx.divided_diff(j, pt).scaled(a12);
        rep.add("twisted braid on [pt]: (C_" + std::to_string(i) + std::to_string(j) +
                    std::to_string(i) + " - a12 C_" + std::to_string(i) + ")([pt]) = (C_" +
                    std::to_string(j) + std::to_string(i) + std::to_string(j) +
                    " - a12 C_" + std::to_string(j) + ")([pt])",
                lhs == rhs);
    }
}

template <class R>
void verify_theorem1(const Config& cfg, const FGL<R>& law, Report& rep) {
    DividedDiffContext<R> ctx(cfg.rank, law);
    SchubertBasis<R> basis(ctx);
    FixedWordExpander<R> exp(basis);
    bool ok = false;
    try {
        ok = exp.is_unitriangular(exp.transition_matrix());
    } catch (const basis_failure_error&) {
        ok = false;
    }
    rep.add("transition matrix averaged -> fixed-word is unitriangular", ok);
}

void verify_kl(const Config& cfg, Report& rep) {
    int n = cfg.rank;
    int prec = cfg.prec ? cfg.prec : default_prec(n);
    DividedDiffContext<Tate> ctx(n, tate_special_elliptic_fgl(prec));
    EllipticHeckeOps ops(ctx);
    KLBasis kl(n);
    HeckeElem one = HeckeElem::unit(n);
    Tate q = Tate::t_power(-1) - Tate::t_power(1);

    bool built = true;
    try {
        for (const Perm& w : all_perms_length_order(n)) kl.element(w);
    } catch (const invariant_violation&) {
        built = false;
    }
    rep.add("KL basis: bar-invariance, triangularity and degree bounds for all of S_" +
                std::to_string(n + 1),
            built);

    bool cbar = true;
    for (int i = 1; i <= n; ++i) {
        HeckeElem ci = HeckeElem::T_word(n, {i}) + one.scaled(Tate::t_power(1));
        ci = ci.scaled(Tate::tate_unit_inv(1));
        if (ci.bar() != ci) cbar = false;
    }
    rep.add("(t+t^-1)^-1 (T_i + t) is bar-invariant", cbar);

    LinOp<Tate> id = LinOp<Tate>::identity(n);
    bool quad = true, braid = true, comm = true;
    for (int i = 1; i <= n; ++i)
        if (ops.X(i).compose(ops.X(i)) != ops.X(i).scaled(q) + id) quad = false;
    for (int i = 1; i < n; ++i) {
        int j = i + 1;
        if (ops.X(i).compose(ops.X(j)).compose(ops.X(i)) !=
            ops.X(j).compose(ops.X(i)).compose(ops.X(j)))
            braid = false;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (ops.X(i).compose(ops.X(j)) != ops.X(j).compose(ops.X(i))) comm = false;
    rep.add("(A) image operators: X_i^2 = (t^-1 - t) X_i + 1", quad);
    rep.add("(C) image operators: X_iji = X_jij", braid);
    if (n >= 3) rep.add("(B) image operators: X_ij = X_ji for |i-j| > 1", comm);

    if (built) {
        auto w0 = ops.special_elliptic_poly(longest_element(n), kl);
        rep.note("pi_se of the longest element: " + w0.poly.str() +
                 (w0.integral ? " [integral]" : " [non-integral]"));
        if (n == 2)
            rep.add("pi_se of the longest element equals 1 at rank 2",
                    w0.poly == Coinv<Tate>::constant(2, Tate::one()));
    }
}

int run_verify(const Config& cfg, const std::string& suite) {
    check_rank(cfg);
    FglDesc desc = parse_fgl(cfg.fgl);
    bool symbolic = needs_symbolic(desc);
    Report rep;
    int op_prec = cfg.prec ? cfg.prec : default_prec(cfg.rank);
    int ax_prec = cfg.prec ? cfg.prec : 12;

    auto with_law = [&](auto&& f) {
        if (symbolic) f(build_fgl<ParamPoly>(desc, op_prec));
        else f(build_fgl<Rat>(desc, op_prec));
    };

    if (suite == "fgl-axioms" || suite == "all") {
        if (symbolic) verify_fgl_axioms<ParamPoly>(desc, ax_prec, rep);
        else verify_fgl_axioms<Rat>(desc, ax_prec, rep);
    }
    if (suite == "operator-relations" || suite == "all")
        with_law([&](const auto& law) { verify_operator_relations(cfg, law, rep); });
    if (suite == "braid" || suite == "all")
        with_law([&](const auto& law) { verify_braid(cfg, law, rep); });
    if (suite == "theorem1" || suite == "all")
        with_law([&](const auto& law) { verify_theorem1(cfg, law, rep); });
    if (suite == "kl" || suite == "all") verify_kl(cfg, rep);

    if (rep.checks.empty()) throw usage_error("unknown verify suite '" + suite + "'");
    emit(cfg, rep.render(cfg, suite));
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// words command

int run_words(const Config& cfg, const std::string& perm_text) {
    Perm w;
    try {
        w = perm_parse(perm_text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("bad permutation: ") + e.what());
    }
    std::set<Word> words = all_reduced_words(w);
    if (cfg.format == "markdown") {
        std::string s = "w = " + perm_str(w) + ", length " +
                        std::to_string(perm_length(w)) + ", " +
                        std::to_string(words.size()) + " reduced word(s)\n";
        for (const Word& I : words) s += "- " + word_str(I) + "\n";
        emit(cfg, s);
        return 0;
    }
    json out;
    out["w"] = perm_str(w);
    out["length"] = perm_length(w);
    out["count"] = words.size();
    json ws = json::array();
    for (const Word& I : words) ws.push_back(word_str(I));
    out["words"] = std::move(ws);
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal-group-law Schubert calculus tables and verification"};
    app.require_subcommand(1);

    Config cfg;
    std::string suite = "all";
    std::string perm_text;

    auto add_common = [&](CLI::App* c, bool with_fgl) {
        c->add_option("--rank", cfg.rank, "Coxeter rank n (type A_n, group S_{n+1})");
        if (with_fgl)
            c->add_option("--fgl", cfg.fgl,
                          "formal group law: additive | mult:beta | elliptic:mu1,mu2 | "
                          "universal4 | ulog:d");
        c->add_option("--format", cfg.format, "output format: json | markdown")
            ->check(CLI::IsMember({"json", "markdown"}));
        c->add_option("--prec", cfg.prec, "series precision override");
        c->add_flag("--max-rank-override", cfg.rank_override,
                    "allow ranks above the built-in cap");
        c->add_option("--out", cfg.out, "write output to this file instead of stdout");
    };

    CLI::App* t = app.add_subcommand("table", "tabulate the polynomial basis");
    add_common(t, true);
    t->add_option("--basis", cfg.basis, "basis mode: averaged | per-word | kl")
        ->check(CLI::IsMember({"averaged", "per-word", "kl"}));

    CLI::App* v = app.add_subcommand("verify", "run a verification suite");
    add_common(v, true);
    v->add_option("--suite", suite,
                  "fgl-axioms | operator-relations | braid | theorem1 | kl | all")
        ->check(CLI::IsMember({"fgl-axioms", "operator-relations", "braid", "theorem1",
                               "kl", "all"}));

    CLI::App* wcmd = app.add_subcommand("words", "list all reduced words of a permutation");
    wcmd->add_option("perm", perm_text, "one-line notation, e.g. \"3 1 2\"")->required();
    wcmd->add_option("--format", cfg.format, "output format: json | markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    wcmd->add_option("--out", cfg.out, "write output to this file instead of stdout");

    CLI::App* k = app.add_subcommand("kl", "special elliptic Kazhdan-Lusztig table");
    add_common(k, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (t->parsed()) return run_table(cfg);
        if (v->parsed()) return run_verify(cfg, suite);
        if (wcmd->parsed()) return run_words(cfg, perm_text);
        if (k->parsed()) {
            cfg.basis = "kl";
            check_rank(cfg);
            emit(cfg, kl_table(cfg));
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const basis_failure_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
