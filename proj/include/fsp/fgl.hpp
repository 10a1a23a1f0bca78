#pragma once
#include <string>
#include <vector>

#include "fsp/errors.hpp"
#include "fsp/param_poly.hpp"
#include "fsp/series.hpp"

namespace fsp {

/// A one-dimensional commutative formal group law at a fixed precision,
/// together with the series every downstream computation needs:
/// the formal inverse iota, g with F = x+y-xy*g, r = (F-y)/x and
/// kappa(z) = g(z, iota(z)).
template <class R>
struct FGL {
    std::string descriptor;
    int prec = 0;
    Series<R> F;      // in (x, y)
    Series<R> iota;   // in (z)
    Series<R> g;      // in (x, y), prec - 2
    Series<R> r;      // in (x, y), prec - 1
    Series<R> kappa;  // in (z), prec - 2

    /// x -_F y = F(x, iota(y)) for series arguments with zero constant term.
    Series<R> subtract(const Series<R>& u, const Series<R>& v) const {
        return F.substituted({u, iota.substituted({v})});
    }
};

namespace detail {

template <class R>
Series<R> solve_formal_inverse(const Series<R>& F, int prec) {
    std::vector<std::string> zv{"z"};
    Series<R> z = Series<R>::variable(zv, prec, 0);
    Series<R> io = -z;
    for (int m = 2; m < prec; ++m) {
        Series<R> err = F.substituted({z, io});
        typename Series<R>::Exp e{m};
        io.add_term(e, -err.coeff(e));
    }
    if (!F.substituted({z, io}).is_zero())
        throw invariant_violation("formal inverse does not solve F(z, i(z)) = 0");
    return io;
}

template <class R>
void check_fgl_axioms(const Series<R>& F, const std::string& name) {
    int prec = F.prec();
    std::vector<std::string> xy{"x", "y"};
    Series<R> x = Series<R>::variable(xy, prec, 0);
    Series<R> y = Series<R>::variable(xy, prec, 1);
    Series<R> zero(xy, prec);
    if (F.substituted({x, zero}) != x || F.substituted({zero, y}) != y)
        throw invariant_violation(name + ": F(x,0) = x fails");
    if (F != F.substituted({y, x}))
        throw invariant_violation(name + ": commutativity fails");
    std::vector<std::string> xyz{"x", "y", "z"};
    Series<R> a = Series<R>::variable(xyz, prec, 0);
    Series<R> b = Series<R>::variable(xyz, prec, 1);
    Series<R> c = Series<R>::variable(xyz, prec, 2);
    Series<R> ab = F.substituted({a, b});
    Series<R> bc = F.substituted({b, c});
    if (F.substituted({ab, c}) != F.substituted({a, bc}))
        throw invariant_violation(name + ": associativity fails");
}

template <class R>
FGL<R> finish(std::string descriptor, Series<R> F, int prec) {
    check_fgl_axioms(F, descriptor);
    FGL<R> fgl;
    fgl.descriptor = std::move(descriptor);
    fgl.prec = prec;
    std::vector<std::string> xy{"x", "y"};
    Series<R> x = Series<R>::variable(xy, prec, 0);
    Series<R> y = Series<R>::variable(xy, prec, 1);
    fgl.iota = solve_formal_inverse(F, prec);
    fgl.g = exact_div(x + y - F, x * y, 2);
    fgl.r = exact_div(F - y, x, 1);
    std::vector<std::string> zv{"z"};
    Series<R> z = Series<R>::variable(zv, prec, 0);
    fgl.kappa = fgl.g.substituted({z, fgl.iota});
    fgl.F = std::move(F);
    return fgl;
}

} // namespace detail

template <class R>
FGL<R> fgl_additive(int prec) {
    if (prec < 2) throw precision_error("fgl: prec must be >= 2");
    std::vector<std::string> xy{"x", "y"};
    Series<R> F = Series<R>::variable(xy, prec, 0) + Series<R>::variable(xy, prec, 1);
    return detail::finish<R>("additive", std::move(F), prec);
}

template <class R>
FGL<R> fgl_multiplicative(int prec, const R& beta) {
    if (prec < 2) throw precision_error("fgl: prec must be >= 2");
    std::vector<std::string> xy{"x", "y"};
    Series<R> x = Series<R>::variable(xy, prec, 0);
    Series<R> y = Series<R>::variable(xy, prec, 1);
    Series<R> F = x + y - (x * y).scaled(beta);
    return detail::finish<R>("mult", std::move(F), prec);
}

/// F(x,y) = (x + y - mu1*xy) / (1 + mu2*xy), expanded by unit inversion.
template <class R>
FGL<R> fgl_special_elliptic(int prec, const R& mu1, const R& mu2) {
    if (prec < 2) throw precision_error("fgl: prec must be >= 2");
    std::vector<std::string> xy{"x", "y"};
    Series<R> x = Series<R>::variable(xy, prec, 0);
    Series<R> y = Series<R>::variable(xy, prec, 1);
    Series<R> one = Series<R>::constant(xy, prec, R::one());
    Series<R> num = x + y - (x * y).scaled(mu1);
    Series<R> den = one + (x * y).scaled(mu2);
    Series<R> F = num * den.inverted();
    return detail::finish<R>("elliptic", std::move(F), prec);
}

/// The generic degree-<=4 expansion in Lazard coordinates a11, a12, a13, a22
/// (a13 rewrite-normalized away). Coefficients are only known through total
/// degree 4, so prec is capped at 5.
inline FGL<ParamPoly> fgl_universal4(int prec) {
    if (prec < 2) throw precision_error("fgl: prec must be >= 2");
    if (prec > 5) throw precision_error("universal4: precision > 5 not supported");
    using S = Series<ParamPoly>;
    std::vector<std::string> xy{"x", "y"};
    S x = S::variable(xy, prec, 0);
    S y = S::variable(xy, prec, 1);
    ParamPoly a11 = ParamPoly::param("a11");
    ParamPoly a12 = ParamPoly::param("a12");
    ParamPoly a13 = ParamPoly::param("a13");
    ParamPoly a22 = ParamPoly::param("a22");
    S F = x + y + (x * y).scaled(a11) + (x * y * (x + y)).scaled(a12) +
          (x * y * (x * x + y * y)).scaled(a13) + (x * x * y * y).scaled(a22);
    return detail::finish<ParamPoly>("universal4", std::move(F), prec);
}

/// A genuine formal group law at precision `prec` whose degree <= 4
/// coefficients are the generic a11, a12, a13 = (2/3)(a22 - a11 a12), a22.
/// Realized through the logarithm parametrization: the triangular relations
///   a11 = -2 m1,  a12 = 4 m1^2 - 3 m2,  a22 = -20 m1^3 + 24 m1 m2 - 6 m3
/// are inverted over Q and the higher log coefficients are set to 0, picking
/// one associative law among all extensions of the degree-4 data. Use this
/// whenever the generic degree-4 law must be evaluated beyond precision 5.
inline FGL<ParamPoly> fgl_universal4_extended(int prec);

/// F = exp(log(x) + log(y)) with log(z) = z + ms[0] z^2 + ... + ms[d-2] z^d,
/// exp the compositional reverse of log. With symbolic ms this realizes the
/// universal formal group law over Q.
template <class R>
FGL<R> fgl_universal_log(int prec, const std::vector<R>& ms,
                         const std::string& descriptor = "ulog") {
    if (prec < 2) throw precision_error("fgl: prec must be >= 2");
    if (static_cast<int>(ms.size()) < prec - 2)
        throw precision_error("ulog: need at least prec-2 log coefficients");
    using S = Series<R>;
    std::vector<std::string> zv{"z"};
    S z = S::variable(zv, prec, 0);
    S lg = z;
    for (size_t k = 0; k < ms.size(); ++k) {
        int e = static_cast<int>(k) + 2;
        if (e >= prec) break;
        lg.add_term({e}, ms[k]);
    }
    // reversion: exp with log(exp(z)) = z
    S ex = z;
    for (int m = 2; m < prec; ++m) {
        S err = lg.substituted({ex});
        typename S::Exp e{m};
        ex.add_term(e, -err.coeff(e));
    }
    std::vector<std::string> xy{"x", "y"};
    S x = S::variable(xy, prec, 0);
    S y = S::variable(xy, prec, 1);
    S F = ex.substituted({lg.substituted({x}) + lg.substituted({y})});
    return detail::finish<R>(descriptor, std::move(F), prec);
}

inline FGL<ParamPoly> fgl_universal4_extended(int prec) {
    ParamPoly a11 = ParamPoly::param("a11");
    ParamPoly a12 = ParamPoly::param("a12");
    ParamPoly a22 = ParamPoly::param("a22");
    ParamPoly half(mpq_class(1, 2)), third(mpq_class(1, 3));
    ParamPoly m1 = -half * a11;
    ParamPoly m2 = third * (a11 * a11 - a12);
    ParamPoly m3 = ParamPoly(mpq_class(-1, 4)) * a11 * a11 * a11 +
                   ParamPoly(mpq_class(2, 3)) * a11 * a12 -
                   ParamPoly(mpq_class(1, 6)) * a22;
    std::vector<ParamPoly> ms{m1, m2, m3};
    while (static_cast<int>(ms.size()) < prec - 2) ms.push_back(ParamPoly::zero());
    return fgl_universal_log<ParamPoly>(prec, ms, "universal4");
}

} // namespace fsp
