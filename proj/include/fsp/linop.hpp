#pragma once
#include <map>
#include <vector>

#include "fsp/coinvariant.hpp"

namespace fsp {

/// A linear operator on the rank-n coinvariant algebra in staircase
/// coordinates ((n+1)! x (n+1)! matrix). Used to check operator identities
/// on the whole module at once and to cache word operators.
template <class R>
class LinOp {
public:
    using Exp = typename Coinv<R>::Exp;

    explicit LinOp(int n)
        : n_(n), basis_(Coinv<R>::staircase_basis(n)) {
        for (size_t j = 0; j < basis_.size(); ++j) index_[basis_[j]] = j;
        col_.assign(basis_.size(), std::vector<R>(basis_.size(), R::zero()));
    }

    static LinOp identity(int n) {
        LinOp op(n);
        for (size_t j = 0; j < op.basis_.size(); ++j)
            op.col_[j][j] = R::one();
        return op;
    }

    template <class F>
    static LinOp from_function(int n, F&& f) {
        LinOp op(n);
        for (size_t j = 0; j < op.basis_.size(); ++j) {
            Coinv<R> img = f(Coinv<R>::monomial(n, op.basis_[j]));
            for (const auto& [e, c] : img.terms())
                op.col_[j][op.index_.at(e)] = c;
        }
        return op;
    }

    int rank() const { return n_; }

    Coinv<R> apply(const Coinv<R>& x) const {
        Coinv<R> out(n_);
        for (const auto& [e, c] : x.terms()) {
            size_t j = index_.at(e);
            for (size_t i = 0; i < basis_.size(); ++i) {
                const R& m = col_[j][i];
                if (m.is_zero()) continue;
                out += Coinv<R>::monomial(n_, basis_[i], m * c);
            }
        }
        return out;
    }

    /// this o other (apply `other` first).
    LinOp compose(const LinOp& other) const {
        LinOp r(n_);
        size_t m = basis_.size();
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const R& c = other.col_[j][k];
                if (c.is_zero()) continue;
                for (size_t i = 0; i < m; ++i) {
                    const R& a = col_[k][i];
                    if (a.is_zero()) continue;
                    r.col_[j][i] += a * c;
                }
            }
        return r;
    }

    LinOp scaled(const R& c) const {
        LinOp r(*this);
        for (auto& col : r.col_)
            for (auto& v : col) v *= c;
        return r;
    }

    LinOp operator-() const { return scaled(-R::one()); }
    friend LinOp operator+(LinOp a, const LinOp& b) {
        for (size_t j = 0; j < a.col_.size(); ++j)
            for (size_t i = 0; i < a.col_.size(); ++i)
                a.col_[j][i] += b.col_[j][i];
        return a;
    }
    friend LinOp operator-(LinOp a, const LinOp& b) { return a + (-b); }
    friend bool operator==(const LinOp& a, const LinOp& b) {
        return a.n_ == b.n_ && a.col_ == b.col_;
    }
    friend bool operator!=(const LinOp& a, const LinOp& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& col : col_)
            for (const auto& v : col)
                if (!v.is_zero()) return false;
        return true;
    }

private:
    int n_;
    std::vector<Exp> basis_;
    std::map<Exp, size_t> index_;
    std::vector<std::vector<R>> col_;
};

/// Matrix of C_i on the staircase basis.
template <class R>
LinOp<R> divided_diff_op(const DividedDiffContext<R>& ctx, int i) {
    return LinOp<R>::from_function(ctx.rank(), [&](const Coinv<R>& f) {
        return ctx.divided_diff(i, f);
    });
}

/// Matrix of multiplication by a class.
template <class R>
LinOp<R> multiplication_op(int n, const Coinv<R>& u) {
    return LinOp<R>::from_function(n, [&](const Coinv<R>& f) {
        return multiply_class(u, f);
    });
}

} // namespace fsp
