#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fsp/errors.hpp"
#include "fsp/fgl.hpp"
#include "fsp/perm.hpp"
#include "fsp/series.hpp"

namespace fsp {

/// Element of R[t_1..t_{n+1}]/I in staircase normal form: only exponent
/// vectors (a_1..a_{n+1}) with a_j <= n+1-j appear.
template <class R>
class Coinv {
public:
    using Exp = std::vector<int>;

    Coinv() = default;
    explicit Coinv(int n) : n_(n) {}

    int rank() const { return n_; }
    const std::map<Exp, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static bool is_staircase(int n, const Exp& e) {
        for (int j = 1; j <= n + 1; ++j)
            if (e[j - 1] > n + 1 - j) return false;
        return true;
    }

    static Coinv monomial(int n, const Exp& e, const R& c = R::one()) {
        Coinv r(n);
        if (!is_staircase(n, e))
            throw invariant_violation("not a staircase monomial");
        if (!c.is_zero()) r.terms_[e] = c;
        return r;
    }

    static Coinv constant(int n, const R& c) {
        return monomial(n, Exp(n + 1, 0), c);
    }

    /// t_1^n t_2^{n-1} ... t_n, the class of a point.
    static Coinv point(int n) {
        Exp e(n + 1, 0);
        for (int j = 1; j <= n; ++j) e[j - 1] = n + 1 - j;
        return monomial(n, e);
    }

    /// The class of t_i (1-based).
    static Coinv t_var(int n, int i) {
        Exp e(n + 1, 0);
        e[i - 1] = 1;
        Coinv raw(n);
        raw.add_raw(e, R::one());
        return reduce_raw(n, std::move(raw.terms_));
    }

    R coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R::zero() : it->second;
    }

    Coinv operator-() const {
        Coinv r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend Coinv operator+(Coinv a, const Coinv& b) {
        a.check_rank(b);
        for (const auto& [e, c] : b.terms_) a.add_raw(e, c);
        return a;
    }
    friend Coinv operator-(Coinv a, const Coinv& b) { return a + (-b); }
    Coinv& operator+=(const Coinv& o) { *this = *this + o; return *this; }
    Coinv& operator-=(const Coinv& o) { *this = *this - o; return *this; }

    Coinv scaled(const R& c) const {
        Coinv r(n_);
        for (const auto& [e, cc] : terms_) r.add_raw(e, cc * c);
        return r;
    }

    friend bool operator==(const Coinv& a, const Coinv& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coinv& a, const Coinv& b) { return !(a == b); }
    friend bool operator<(const Coinv& a, const Coinv& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        auto cmp = [](const std::pair<Exp, R>& x, const std::pair<Exp, R>& y) {
            if (x.first != y.first) return x.first < y.first ? -1 : 1;
            if (!(x.second == y.second)) return x.second.str() < y.second.str() ? -1 : 1;
            return 0;
        };
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            int c = cmp(*ia, *ib);
            if (c != 0) return c < 0;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

    /// Staircase normal form of an arbitrary polynomial given as a raw
    /// coefficient table, by division against the Groebner basis
    /// {h_{n+2-j}(t_1..t_j) : j = 1..n+1} of I; the leading monomial of the
    /// j-th element is t_j^{n+2-j} (lex order with t_{n+1} > ... > t_1), so
    /// the normal forms are exactly the staircase monomials.
    static Coinv reduce_raw(int n, std::map<Exp, R> raw) {
        for (;;) {
            // find a reducible term (take the lex-largest for determinism)
            auto hit = raw.end();
            int pivot = 0, power = 0;
            for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
                for (int j = 1; j <= n + 1; ++j) {
                    if (it->first[j - 1] >= n + 2 - j) {
                        hit = std::prev(it.base());
                        pivot = j;
                        power = n + 2 - j;
                        break;
                    }
                }
                if (hit != raw.end()) break;
            }
            if (hit == raw.end()) break;
            Exp e = hit->first;
            R c = hit->second;
            raw.erase(hit);
            e[pivot - 1] -= power;
            // t_pivot^power == t_pivot^power - h_power(t_1..t_pivot) mod I
            for (const Exp& m : homogeneous_exponents(n, pivot, power)) {
                if (m[pivot - 1] == power) continue;  // the leading monomial itself
                Exp f = e;
                for (int j = 0; j <= n; ++j) f[j] += m[j];
                auto it = raw.find(f);
                if (it == raw.end()) {
                    R v = -c;
                    if (!v.is_zero()) raw.emplace(std::move(f), std::move(v));
                } else {
                    it->second -= c;
                    if (it->second.is_zero()) raw.erase(it);
                }
            }
        }
        Coinv out(n);
        for (auto& [e, c] : raw)
            if (!c.is_zero()) out.terms_.emplace(e, c);
        return out;
    }

    /// Normal form of a truncated series in t_1..t_{n+1}; the precision must
    /// exceed d0 = n(n+1)/2 so that no tracked staircase degree is unknown.
    static Coinv reduce(const Series<R>& f) {
        int n = static_cast<int>(f.vars().size()) - 1;
        int d0 = n * (n + 1) / 2;
        if (f.prec() <= d0)
            throw precision_error("reduce: series precision must exceed n(n+1)/2");
        std::map<Exp, R> raw(f.terms().begin(), f.terms().end());
        return reduce_raw(n, std::move(raw));
    }

    /// Lift to a series in t_1..t_{n+1} at the given precision.
    Series<R> to_series(const std::vector<std::string>& vars, int prec) const {
        Series<R> s(vars, prec);
        for (const auto& [e, c] : terms_) s.add_term(e, c);
        return s;
    }

    /// reduce(f*g): the ring structure of the quotient.
    friend Coinv multiply_class(const Coinv& a, const Coinv& b) {
        a.check_rank(b);
        std::map<Exp, R> raw;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                auto it = raw.find(e);
                if (it == raw.end()) raw.emplace(std::move(e), ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) raw.erase(it);
                }
            }
        return reduce_raw(a.n_, std::move(raw));
    }

    /// The action of sigma_i (swap t_i, t_{i+1}), renormalized.
    Coinv swapped(int i) const {
        std::map<Exp, R> raw;
        for (const auto& [e, c] : terms_) {
            Exp f(e);
            std::swap(f[i - 1], f[i]);
            raw.emplace(std::move(f), c);
        }
        return reduce_raw(n_, std::move(raw));
    }

    std::string str(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        // descending total degree, then lex
        std::vector<std::pair<Exp, R>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int da = Series<R>::total_degree(a.first);
            int db = Series<R>::total_degree(b.first);
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::string out;
        for (const auto& [e, c] : ts) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i + 1);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += "(" + c.str() + ")";
            else out += "(" + c.str() + ")*" + mono;
        }
        return out;
    }

    /// All staircase exponent vectors for rank n ((n+1)! of them).
    static std::vector<Exp> staircase_basis(int n) {
        std::vector<Exp> out;
        Exp e(n + 1, 0);
        walk_staircase(n, 1, e, out);
        return out;
    }

private:
    void check_rank(const Coinv& o) const {
        if (n_ != o.n_) throw ring_mismatch_error("coinvariant rank mismatch");
    }

    void add_raw(const Exp& e, const R& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // monomial exponents of h_deg(t_1 .. t_j) as full-length vectors
    static std::vector<Exp> homogeneous_exponents(int n, int j, int deg) {
        std::vector<Exp> out;
        Exp e(n + 1, 0);
        hwalk(j, 1, deg, e, out);
        return out;
    }
    static void hwalk(int last, int j, int rem, Exp& e, std::vector<Exp>& out) {
        if (j == last) {
            e[j - 1] = rem;
            out.push_back(e);
            e[j - 1] = 0;
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            e[j - 1] = k;
            hwalk(last, j + 1, rem - k, e, out);
        }
        e[j - 1] = 0;
    }
    static void walk_staircase(int n, int j, Exp& e, std::vector<Exp>& out) {
        if (j == n + 2) { out.push_back(e); return; }
        for (int k = 0; k <= n + 1 - j; ++k) {
            e[j - 1] = k;
            walk_staircase(n, j + 1, e, out);
        }
        e[j - 1] = 0;
    }

    int n_ = 0;
    std::map<Exp, R> terms_;
};

/// Shared per-rank operator context: the formal group law plus the series
/// entering C_i(f) = (1+sigma_i)(f/rho_i), precomputed once per i.
template <class R>
class DividedDiffContext {
public:
    DividedDiffContext(int n, const FGL<R>& fgl) : n_(n), fgl_(&fgl) {
        int d0 = n * (n + 1) / 2;
        if (fgl.prec < d0 + 4)
            throw precision_error(
                "divided differences at rank " + std::to_string(n) +
                " need FGL precision >= " + std::to_string(d0 + 4));
        prec_ = fgl.prec;
        for (int i = 1; i <= n + 1; ++i) vars_.push_back("t" + std::to_string(i));
        for (int i = 1; i <= n; ++i) {
            Series<R> ti = Series<R>::variable(vars_, prec_, i - 1);
            Series<R> tj = Series<R>::variable(vars_, prec_, i);
            Series<R> rho = fgl.subtract(ti, tj);
            Series<R> srho = rho.swapped_vars(i - 1, i);
            rho_.push_back(rho);
            sigma_rho_.push_back(srho);
            denom_.push_back(rho * srho);
            kappa_.push_back(Coinv<R>::reduce(fgl.kappa.substituted({rho})));
        }
    }

    int rank() const { return n_; }
    int prec() const { return prec_; }
    const FGL<R>& fgl() const { return *fgl_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const Series<R>& rho(int i) const { return rho_[i - 1]; }

    /// kappa_i = C_i(1) as a class.
    const Coinv<R>& kappa_class(int i) const { return kappa_[i - 1]; }

    /// C_i(f) = (f*sigma(rho) + sigma(f)*rho) / (rho*sigma(rho)), reduced.
    Coinv<R> divided_diff(int i, const Coinv<R>& f) const {
        if (i < 1 || i > n_)
            throw std::invalid_argument("divided_diff: index out of range");
        Series<R> fs = f.to_series(vars_, prec_);
        Series<R> sfs = fs.swapped_vars(i - 1, i);
        Series<R> numer = fs * sigma_rho_[i - 1] + sfs * rho_[i - 1];
        Series<R> q = exact_div(numer, denom_[i - 1], 2);
        return Coinv<R>::reduce(q);
    }

    /// C_{i1} o C_{i2} o ... o C_{ir} applied to f (rightmost acts first).
    Coinv<R> apply_word(const Word& I, const Coinv<R>& f) const {
        Coinv<R> g = f;
        for (auto it = I.rbegin(); it != I.rend(); ++it)
            g = divided_diff(*it, g);
        return g;
    }

private:
    int n_;
    int prec_;
    const FGL<R>* fgl_;
    std::vector<std::string> vars_;
    std::vector<Series<R>> rho_, sigma_rho_, denom_;
    std::vector<Coinv<R>> kappa_;
};

} // namespace fsp
