#pragma once
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fsp/errors.hpp"

namespace fsp {

/// Truncated multivariate power series over an exact coefficient ring R.
/// Sparse: exponent vector -> nonzero coefficient, all stored terms of
/// total degree < prec. Arithmetic between two series works at
/// min(prec_a, prec_b).
template <class R>
class Series {
public:
    using Exp = std::vector<int>;

    Series() = default;
    Series(std::vector<std::string> vars, int prec)
        : vars_(std::move(vars)), prec_(prec) {}

    static Series constant(std::vector<std::string> vars, int prec, const R& c) {
        Series s(std::move(vars), prec);
        s.set_coeff(Exp(s.nvars(), 0), c);
        return s;
    }
    static Series variable(std::vector<std::string> vars, int prec, int idx,
                           const R& c = R::one()) {
        Series s(std::move(vars), prec);
        Exp e(s.nvars(), 0);
        e[idx] = 1;
        s.set_coeff(e, c);
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int prec() const { return prec_; }
    const std::map<Exp, R>& terms() const { return terms_; }

    static int total_degree(const Exp& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    bool is_zero() const { return terms_.empty(); }

    R coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R::zero() : it->second;
    }

    void set_coeff(const Exp& e, const R& c) {
        if (total_degree(e) >= prec_) return;
        if (c.is_zero()) terms_.erase(e);
        else terms_[e] = c;
    }

    void add_term(const Exp& e, const R& c) {
        if (total_degree(e) >= prec_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Series truncated(int new_prec) const {
        Series r(vars_, std::min(prec_, new_prec));
        for (const auto& [e, c] : terms_)
            r.add_term(e, c);
        return r;
    }

    /// Homogeneous component of total degree d (kept at the same prec).
    Series homogeneous_part(int d) const {
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_[e] = c;
        return r;
    }

    int min_degree() const {  // prec_ when zero
        int m = prec_;
        for (const auto& [e, c] : terms_) m = std::min(m, total_degree(e));
        return m;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_vars(b);
        Series r(a.vars_, std::min(a.prec_, b.prec_));
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        a.check_vars(b);
        Series r(a.vars_, std::min(a.prec_, b.prec_));
        for (const auto& [ea, ca] : a.terms_) {
            int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) >= r.prec_) continue;
                Exp e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    Series& operator+=(const Series& o) { *this = *this + o; return *this; }
    Series& operator-=(const Series& o) { *this = *this - o; return *this; }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series scaled(const R& c) const {
        Series r(vars_, prec_);
        for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.vars_ == b.vars_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Swap the roles of variables i and j (an algebra automorphism).
    Series swapped_vars(int i, int j) const {
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_) {
            Exp f(e);
            std::swap(f[i], f[j]);
            r.terms_[f] = c;
        }
        return r;
    }

    /// Multiplicative inverse; requires a unit constant term.
    Series inverted() const {
        R c0 = coeff(Exp(nvars(), 0));
        R c0i = c0.inv();  // throws not_invertible_error on non-unit
        // term recursion on homogeneous components:
        // q_0 = 1/c0, q_m = -1/c0 * sum_{j=1..m} f_j q_{m-j}
        std::vector<Series> fh, qh;
        for (int d = 0; d < prec_; ++d) fh.push_back(homogeneous_part(d));
        qh.push_back(constant(vars_, prec_, c0i));
        for (int m = 1; m < prec_; ++m) {
            Series acc(vars_, prec_);
            for (int j = 1; j <= m; ++j)
                acc += fh[j] * qh[m - j];
            qh.push_back((-acc).scaled(c0i).homogeneous_part(m));
        }
        Series r(vars_, prec_);
        for (const auto& q : qh) r += q;
        return r;
    }

    /// Substitute args[i] for variable i. Every arg must have zero constant
    /// term and all args share one variable list; result lives in the args'
    /// variable space at precision min(arg precs, own prec).
    Series substituted(const std::vector<Series>& args) const {
        if (static_cast<int>(args.size()) != nvars())
            throw precision_error("substitute: wrong number of arguments");
        int p = prec_;
        for (const auto& a : args) {
            p = std::min(p, a.prec());
            if (a.vars() != args[0].vars())
                throw ring_mismatch_error("substitute: argument variable lists differ");
            if (!a.coeff(Exp(a.nvars(), 0)).is_zero())
                throw precision_error("substitute: argument has nonzero constant term");
        }
        Series r(args[0].vars(), p);
        // powers computed incrementally per variable
        std::vector<std::vector<Series>> pw(args.size());
        auto power = [&](int i, int k) -> const Series& {
            auto& v = pw[i];
            if (v.empty()) v.push_back(constant(args[0].vars(), p, R::one()));
            while (static_cast<int>(v.size()) <= k)
                v.push_back(v.back() * args[i].truncated(p));
            return v[k];
        };
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) >= p) continue;  // args have valuation >= 1
            Series m = constant(args[0].vars(), p, c);
            for (int i = 0; i < nvars(); ++i)
                if (e[i] > 0) m *= power(i, e[i]);
            r += m;
        }
        return r;
    }

    /// Exact division f/d where d = (homogeneous of degree `loss`) * unit.
    /// The quotient has precision prec - loss; a nonzero remainder at any
    /// tracked degree raises not_divisible_error.
    friend Series exact_div(const Series& f, const Series& d, int loss) {
        f.check_vars(d);
        int p = std::min(f.prec_, d.prec_);
        int qprec = p - loss;
        if (qprec <= 0) throw precision_error("exact_div: precision exhausted");
        if (d.min_degree() != loss)
            throw not_divisible_error("exact_div: divisor valuation != loss");
        Series dl = d.homogeneous_part(loss);
        // degreewise: q_m * d_L = f_{L+m} - sum_{j<m} q_j * d_{L+m-j}
        for (const auto& [e, c] : f.terms_)
            if (total_degree(e) < loss)
                throw not_divisible_error("exact_div: dividend has low-degree terms");
        std::vector<Series> qh;
        Series q(f.vars_, qprec);
        for (int m = 0; m < qprec; ++m) {
            Series r = f.homogeneous_part(loss + m);
            for (int j = 0; j < m; ++j)
                r -= (qh[j] * d.homogeneous_part(loss + m - j)).homogeneous_part(loss + m);
            qh.push_back(homogeneous_div(r, dl, m));
            for (const auto& [e, c] : qh.back().terms_) q.add_term(e, c);
        }
        return q;
    }

    /// Pretty printer: by total degree then lex, with "+ O(prec)".
    std::string str() const {
        std::vector<std::pair<Exp, R>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int da = total_degree(a.first), db = total_degree(b.first);
            if (da != db) return da < db;
            return a.first < b.first;
        });
        std::string out;
        for (const auto& [e, c] : ts) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < nvars(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            if (mono.empty()) out += "(" + cs + ")";
            else out += "(" + cs + ")*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += "O(" + std::to_string(prec_) + ")";
        return out;
    }

private:
    void check_vars(const Series& o) const {
        if (vars_ != o.vars_)
            throw ring_mismatch_error("series variable lists differ");
    }

    // exact division of homogeneous a (degree loss+m) by homogeneous b
    // (degree loss) under lex order; quotient homogeneous of degree m
    static Series homogeneous_div(Series a, const Series& b, int m) {
        Series q(a.vars_, a.prec_);
        if (b.terms_.empty())
            throw not_divisible_error("exact_div: zero homogeneous divisor");
        // lex-leading term of b (map is lex-ordered ascending; take rbegin)
        const Exp& lb = b.terms_.rbegin()->first;
        const R& cb = b.terms_.rbegin()->second;
        R cbi = cb.inv();
        while (!a.terms_.empty()) {
            const Exp& la = a.terms_.rbegin()->first;
            Exp e(la);
            bool ok = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] -= lb[i];
                if (e[i] < 0) { ok = false; break; }
            }
            if (!ok)
                throw not_divisible_error("exact_div: remainder is nonzero");
            R c = a.terms_.rbegin()->second * cbi;
            q.add_term(e, c);
            Series piece(a.vars_, a.prec_);
            piece.set_coeff(e, c);
            a -= piece * b;
        }
        (void)m;
        return q;
    }

    std::vector<std::string> vars_;
    int prec_ = 0;
    std::map<Exp, R> terms_;
};

} // namespace fsp
