#pragma once
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fsp/coinvariant.hpp"
#include "fsp/errors.hpp"
#include "fsp/perm.hpp"

namespace fsp {

/// Per-word Bott-Samelson classes C_{I^rev}([pt]) and their reduced-word
/// averages P_w. Classes are memoized by word prefix: the class of
/// I = (i1..ir) is C_{ir}(class of (i1..i_{r-1})).
template <class R>
class SchubertBasis {
public:
    explicit SchubertBasis(const DividedDiffContext<R>& ctx) : ctx_(&ctx) {
        cache_[Word{}] = Coinv<R>::point(ctx.rank());
    }

    const DividedDiffContext<R>& ctx() const { return *ctx_; }
    int rank() const { return ctx_->rank(); }

    /// C_{I^rev}([pt]); I must be reduced.
    const Coinv<R>& class_for_word(const Word& I) const {
        Perm w = perm_from_word(rank(), I);
        if (static_cast<int>(I.size()) != perm_length(w))
            throw std::invalid_argument("class_for_word: word is not reduced");
        return cached(I);
    }

    /// P_w = (1/|red(w)|) sum over red(w) of the per-word classes.
    Coinv<R> averaged(const Perm& w) const {
        std::set<Word> words = all_reduced_words(w);
        Coinv<R> sum(rank());
        for (const Word& I : words) sum += cached(I);
        mpq_class inv_count(1, static_cast<unsigned long>(words.size()));
        return sum.scaled(R::from_rational(inv_count));
    }

    /// Distinct per-word values with one witness word each.
    std::map<Coinv<R>, Word> word_dependence(const Perm& w) const {
        std::map<Coinv<R>, Word> out;
        for (const Word& I : all_reduced_words(w))
            out.emplace(cached(I), I);
        return out;
    }

private:
    const Coinv<R>& cached(const Word& I) const {
        auto it = cache_.find(I);
        if (it != cache_.end()) return it->second;
        Word prefix(I.begin(), I.end() - 1);
        Coinv<R> c = ctx_->divided_diff(I.back(), cached(prefix));
        return cache_.emplace(I, std::move(c)).first->second;
    }

    const DividedDiffContext<R>* ctx_;
    mutable std::map<Word, Coinv<R>> cache_;
};

/// Expansion of coinvariant classes in the fixed-word basis
/// {C_{I_v^rev}([pt])} with I_v the lex-smallest reduced word of v.
/// Works degree by degree: the degree-(d0 - l) components of the length-l
/// classes have plain rational coordinates and span that graded piece, so
/// each step is a rational linear solve.
template <class R>
class FixedWordExpander {
public:
    explicit FixedWordExpander(const SchubertBasis<R>& basis)
        : basis_(&basis), n_(basis.rank()), d0_(n_ * (n_ + 1) / 2) {
        perms_ = all_perms_length_order(n_);
        for (const Perm& w : perms_) {
            Word I = lex_min_reduced_word(w);
            fixed_words_[w] = I;
            fixed_class_.emplace(w, basis.class_for_word(I));
        }
    }

    const std::vector<Perm>& perms() const { return perms_; }
    const Word& fixed_word(const Perm& w) const { return fixed_words_.at(w); }
    const Coinv<R>& fixed_class(const Perm& w) const { return fixed_class_.at(w); }

    /// x = sum_v out[v] * fixed_class(v); absent keys mean zero.
    std::map<Perm, R> expand(const Coinv<R>& x) const {
        std::map<Perm, R> out;
        Coinv<R> res = x;
        while (!res.is_zero()) {
            int d = min_degree(res);
            int l = d0_ - d;
            std::vector<Perm> vs;
            for (const Perm& w : perms_)
                if (perm_length(w) == l) vs.push_back(w);
            std::vector<typename Coinv<R>::Exp> mus = degree_monomials(d);
            if (vs.size() != mus.size())
                throw basis_failure_error("graded piece dimension mismatch");
            size_t m = vs.size();
            // S[row][col] rational; rhs[row] in R
            std::vector<std::vector<mpq_class>> S(m, std::vector<mpq_class>(m));
            std::vector<R> rhs(m);
            for (size_t r = 0; r < m; ++r) {
                rhs[r] = res.coeff(mus[r]);
                for (size_t c = 0; c < m; ++c) {
                    mpq_class q;
                    if (!as_rational(fixed_class_.at(vs[c]).coeff(mus[r]), q))
                        throw basis_failure_error(
                            "leading coordinate is not rational for v = " +
                            perm_str(vs[c]));
                    S[r][c] = q;
                }
            }
            std::vector<R> lam = solve_rational_system(S, rhs);
            for (size_t c = 0; c < m; ++c) {
                if (lam[c].is_zero()) continue;
                auto [it, fresh] = out.emplace(vs[c], lam[c]);
                if (!fresh) it->second += lam[c];
                res -= fixed_class_.at(vs[c]).scaled(lam[c]);
            }
            if (!res.is_zero() && min_degree(res) <= d)
                throw basis_failure_error("expansion did not raise the degree");
        }
        return out;
    }

    /// M with averaged(w) = sum_v M[w][v] * fixed_class(v), rows and columns
    /// ordered by length then lex one-line notation.
    std::vector<std::vector<R>> transition_matrix() const {
        std::vector<std::vector<R>> M;
        for (const Perm& w : perms_) {
            std::map<Perm, R> row = expand(basis_->averaged(w));
            std::vector<R> r;
            for (const Perm& v : perms_) {
                auto it = row.find(v);
                r.push_back(it == row.end() ? R::zero() : it->second);
            }
            M.push_back(std::move(r));
        }
        return M;
    }

    /// Unitriangularity with respect to any length-refining order:
    /// diagonal 1, zero whenever l(v) >= l(w) and v != w.
    bool is_unitriangular(const std::vector<std::vector<R>>& M) const {
        for (size_t i = 0; i < perms_.size(); ++i)
            for (size_t j = 0; j < perms_.size(); ++j) {
                if (i == j) {
                    if (!M[i][j].is_one()) return false;
                } else if (perm_length(perms_[j]) >= perm_length(perms_[i])) {
                    if (!M[i][j].is_zero()) return false;
                }
            }
        return true;
    }

private:
    static int min_degree(const Coinv<R>& x) {
        int m = -1;
        for (const auto& [e, c] : x.terms()) {
            int d = Series<R>::total_degree(e);
            if (m < 0 || d < m) m = d;
        }
        return m;
    }

    std::vector<typename Coinv<R>::Exp> degree_monomials(int d) const {
        std::vector<typename Coinv<R>::Exp> out;
        for (const auto& e : Coinv<R>::staircase_basis(n_))
            if (Series<R>::total_degree(e) == d) out.push_back(e);
        return out;
    }

    /// Gaussian elimination with rational pivots; the right-hand side lives
    /// in the coefficient ring.
    static std::vector<R> solve_rational_system(std::vector<std::vector<mpq_class>> S,
                                                std::vector<R> b) {
        size_t m = S.size();
        std::vector<size_t> piv(m);
        for (size_t col = 0, row = 0; col < m && row < m; ++col, ++row) {
            size_t p = row;
            while (p < m && S[p][col] == 0) ++p;
            if (p == m)
                throw basis_failure_error("singular triangular system");
            std::swap(S[p], S[row]);
            std::swap(b[p], b[row]);
            for (size_t r = 0; r < m; ++r) {
                if (r == row || S[r][col] == 0) continue;
                mpq_class f = S[r][col] / S[row][col];
                for (size_t c = col; c < m; ++c) S[r][c] -= f * S[row][c];
                b[r] -= b[row] * R::from_rational(f);
            }
        }
        std::vector<R> x(m);
        for (size_t r = 0; r < m; ++r) {
            size_t col = 0;
            while (col < m && S[r][col] == 0) ++col;
            if (col == m) {
                if (!b[r].is_zero())
                    throw basis_failure_error("inconsistent triangular system");
                continue;
            }
            x[col] = b[r] * R::from_rational(1 / S[r][col]);
        }
        return x;
    }

    const SchubertBasis<R>* basis_;
    int n_;
    int d0_;
    std::vector<Perm> perms_;
    std::map<Perm, Word> fixed_words_;
    std::map<Perm, Coinv<R>> fixed_class_;
};

} // namespace fsp
