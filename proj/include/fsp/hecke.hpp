#pragma once
#include <map>
#include <string>
#include <vector>

#include "fsp/basis.hpp"
#include "fsp/coinvariant.hpp"
#include "fsp/errors.hpp"
#include "fsp/linop.hpp"
#include "fsp/perm.hpp"
#include "fsp/tate.hpp"

namespace fsp {

/// Element of the Iwahori-Hecke algebra of S_{n+1} over Z[t,t^-1] localized
/// at (t+t^-1), in the T-basis: sum c_w T_w with
/// T_i^2 = (t^-1 - t) T_i + 1 and the braid relations.
class HeckeElem {
public:
    explicit HeckeElem(int n) : n_(n) {}

    static HeckeElem unit(int n) {
        HeckeElem h(n);
        h.c_[perm_identity(n)] = Tate::one();
        return h;
    }
    static HeckeElem T(int n, const Perm& w) {
        HeckeElem h(n);
        h.c_[w] = Tate::one();
        return h;
    }
    static HeckeElem T_word(int n, const Word& I) {
        HeckeElem h = unit(n);
        for (int i : I) h = h.mul_gen(i);
        return h;
    }

    int rank() const { return n_; }
    const std::map<Perm, Tate>& coeffs() const { return c_; }
    Tate coeff(const Perm& w) const {
        auto it = c_.find(w);
        return it == c_.end() ? Tate::zero() : it->second;
    }
    bool is_zero() const { return c_.empty(); }

    void add(const Perm& w, const Tate& c) {
        auto it = c_.find(w);
        if (it == c_.end()) {
            if (!c.is_zero()) c_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    HeckeElem scaled(const Tate& c) const {
        HeckeElem r(n_);
        for (const auto& [w, v] : c_) {
            Tate p = v * c;
            if (!p.is_zero()) r.c_[w] = p;
        }
        return r;
    }

    HeckeElem operator-() const { return scaled(-Tate::one()); }
    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) {
        a.check(b);
        for (const auto& [w, c] : b.c_) a.add(w, c);
        return a;
    }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a + (-b); }
    HeckeElem& operator+=(const HeckeElem& o) { *this = *this + o; return *this; }
    HeckeElem& operator-=(const HeckeElem& o) { *this = *this - o; return *this; }

    /// Right multiplication by T_i:
    /// T_w T_i = T_{w s_i} if the length goes up, else
    /// T_{w s_i} + (t^-1 - t) T_w.
    HeckeElem mul_gen(int i) const {
        HeckeElem r(n_);
        Tate q = Tate::t_power(-1) - Tate::t_power(1);
        for (const auto& [w, c] : c_) {
            Perm ws = apply_simple(w, i);
            if (perm_length(ws) > perm_length(w)) {
                r.add(ws, c);
            } else {
                r.add(ws, c);
                r.add(w, c * q);
            }
        }
        return r;
    }

    friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
        a.check(b);
        HeckeElem r(a.n_);
        for (const auto& [v, c] : b.c_) {
            HeckeElem av = a;
            for (int i : lex_min_reduced_word(v)) av = av.mul_gen(i);
            r += av.scaled(c);
        }
        return r;
    }
    HeckeElem& operator*=(const HeckeElem& o) { *this = *this * o; return *this; }

    friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const HeckeElem& a, const HeckeElem& b) {
        return !(a == b);
    }

    /// Bar involution: t -> t^-1 on coefficients and T_w -> (T_{w^-1})^-1,
    /// using T_i^-1 = T_i + t - t^-1.
    HeckeElem bar() const {
        HeckeElem r(n_);
        for (const auto& [w, c] : c_) {
            HeckeElem inv = unit(n_);
            Tate d = Tate::t_power(1) - Tate::t_power(-1);
            for (int i : lex_min_reduced_word(w)) {
                HeckeElem factor = T_word(n_, {i});
                factor.add(perm_identity(n_), d);
                inv = inv * factor;  // T_{i1}^-1 ... T_{ir}^-1
            }
            r += inv.scaled(c.bar());
        }
        return r;
    }

private:
    void check(const HeckeElem& o) const {
        if (n_ != o.n_) throw ring_mismatch_error("Hecke rank mismatch");
    }

    int n_;
    std::map<Perm, Tate> c_;
};

/// The Kazhdan-Lusztig basis in the normalization
/// C'_w = T_w + sum_{v<w} t pi_{v,w}(t) T_v, deg pi_{v,w} <= l(w)-l(v)-1.
/// Built inductively from C'_s C'_v with a triangular bar-invariant
/// correction; bar-invariance and the degree bound are asserted.
class KLBasis {
public:
    explicit KLBasis(int n) : n_(n) {}

    const HeckeElem& element(const Perm& w) {
        auto it = store_.find(w);
        if (it != store_.end()) return it->second;
        HeckeElem e = build(w);
        return store_.emplace(w, std::move(e)).first->second;
    }

    /// pi_{v,w}(t): the T_v coefficient of C'_w divided by t.
    Tate pi(const Perm& v, const Perm& w) {
        if (v == w) throw std::invalid_argument("pi_{v,w} requires v < w");
        Tate c = element(w).coeff(v);
        return c * Tate::t_power(-1);
    }

private:
    HeckeElem build(const Perm& w) {
        int l = perm_length(w);
        if (l == 0) return HeckeElem::unit(n_);
        // a left descent s: w = s v with l(v) = l - 1
        int s = 0;
        for (int i = 1; i <= n_; ++i) {
            Perm si = perm_from_word(n_, {i});
            if (perm_length(perm_multiply(si, w)) < l) { s = i; break; }
        }
        Perm v = perm_multiply(perm_from_word(n_, {s}), w);
        HeckeElem cs = HeckeElem::T_word(n_, {s});
        cs.add(perm_identity(n_), Tate::t_power(1));  // C'_s = T_s + t
        HeckeElem p = cs * element(v);
        // triangular correction, highest lengths first
        for (int len = l - 1; len >= 0; --len) {
            std::vector<std::pair<Perm, Tate>> level;
            for (const auto& [u, c] : p.coeffs())
                if (perm_length(u) == len && !(u == w)) level.push_back({u, c});
            for (const auto& [u, c] : level) {
                Tate a = symmetric_part(c);
                if (!a.is_zero()) p -= element(u).scaled(a);
            }
        }
        verify(w, p);
        return p;
    }

    // the unique bar-invariant a with c - a in t*Z[t] (c itself a Laurent
    // polynomial): keep the t^0 term and mirror the negative powers
    static Tate symmetric_part(const Tate& c) {
        if (c.denom_power() != 0)
            throw invariant_violation("KL correction coefficient has a denominator");
        Tate::Laurent n;
        for (const auto& [e, q] : c.numerator()) {
            if (e == 0) n[0] += q;
            else if (e < 0) {
                n[e] += q;
                n[-e] += q;
            }
        }
        return Tate(std::move(n), 0);
    }

    void verify(const Perm& w, const HeckeElem& p) const {
        if (p.bar() != p)
            throw invariant_violation("KL element is not bar-invariant");
        int l = perm_length(w);
        if (!p.coeff(w).is_one())
            throw invariant_violation("KL element leading coefficient != 1");
        for (const auto& [v, c] : p.coeffs()) {
            if (v == w) continue;
            if (!bruhat_leq(v, w))
                throw invariant_violation("KL support outside the Bruhat interval");
            if (c.denom_power() != 0)
                throw invariant_violation("KL coefficient has a denominator");
            int lo = c.numerator().begin()->first;
            int hi = c.numerator().rbegin()->first;
            if (lo < 1 || hi > l - perm_length(v))
                throw invariant_violation("KL degree bound violated");
        }
    }

    int n_;
    std::map<Perm, HeckeElem> store_;
};

/// The divided-difference realization of the Hecke algebra for the special
/// elliptic formal group law with mu1 = 1, mu2 = -1/(t+t^-1)^2:
/// T_i -> (t+t^-1) C_i - t.
class EllipticHeckeOps {
public:
    explicit EllipticHeckeOps(const DividedDiffContext<Tate>& ctx)
        : ctx_(&ctx), n_(ctx.rank()) {
        Tate u = Tate::t_plus_tinv();
        Tate t1 = Tate::t_power(1);
        for (int i = 1; i <= n_; ++i) {
            C_.push_back(divided_diff_op(ctx, i));
            X_.push_back(C_.back().scaled(u) - LinOp<Tate>::identity(n_).scaled(t1));
        }
        word_op_.emplace(perm_identity(n_), LinOp<Tate>::identity(n_));
    }

    const LinOp<Tate>& C(int i) const { return C_[i - 1]; }
    const LinOp<Tate>& X(int i) const { return X_[i - 1]; }

    /// Image operator of T_v along the given reduced word.
    LinOp<Tate> op_for_word(const Word& I) const {
        LinOp<Tate> op = LinOp<Tate>::identity(n_);
        for (int i : I) op = op.compose(X_[i - 1]);
        return op;
    }

    /// Image operator of T_v (lex-min word, cached); word-independence of
    /// this choice is a verified property, not an assumption.
    const LinOp<Tate>& op_for_perm(const Perm& v) const {
        auto it = word_op_.find(v);
        if (it != word_op_.end()) return it->second;
        Word I = lex_min_reduced_word(v);
        Word prefix(I.begin(), I.end() - 1);
        LinOp<Tate> op = op_for_perm(perm_from_word(n_, prefix)).compose(X_[I.back() - 1]);
        return word_op_.emplace(v, std::move(op)).first->second;
    }

    Coinv<Tate> apply(const HeckeElem& h, const Coinv<Tate>& f) const {
        Coinv<Tate> out(n_);
        for (const auto& [v, c] : h.coeffs())
            out += op_for_perm(v).apply(f).scaled(c);
        return out;
    }

    struct SpecialEllipticPoly {
        Coinv<Tate> poly;
        bool integral;
    };

    /// pi_w^se: the class of (t+t^-1)^{-l(w)} C_{w^-1}([pt]) (C_w variant
    /// selectable), with an empirical integrality report.
    SpecialEllipticPoly special_elliptic_poly(const Perm& w, KLBasis& kl,
                                              bool use_inverse = true) const {
        const HeckeElem& c = kl.element(use_inverse ? perm_inverse(w) : w);
        Coinv<Tate> g = apply(c, Coinv<Tate>::point(n_));
        g = g.scaled(Tate::tate_unit_inv(perm_length(w)));
        bool integral = true;
        for (const auto& [e, q] : g.terms())
            if (!q.is_integral()) integral = false;
        return {std::move(g), integral};
    }

private:
    const DividedDiffContext<Tate>* ctx_;
    int n_;
    std::vector<LinOp<Tate>> C_, X_;
    mutable std::map<Perm, LinOp<Tate>> word_op_;
};

/// The rank-n special elliptic context over the Tate ring.
inline FGL<Tate> tate_special_elliptic_fgl(int prec) {
    return fgl_special_elliptic<Tate>(prec, Tate::one(), -Tate::tate_unit_inv(2));
}

} // namespace fsp
