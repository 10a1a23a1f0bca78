#include <doctest.h>

#include "fsp/basis.hpp"
#include "fsp/linop.hpp"
#include "fsp/rational.hpp"
#include "oracles.hpp"

using namespace fsp;

namespace {

using CR = Coinv<Rat>;
using CP = Coinv<ParamPoly>;

ParamPoly P(const char* name) { return ParamPoly::param(name); }

CP pmono(int n, std::initializer_list<int> e, ParamPoly c = ParamPoly::one()) {
    return CP::monomial(n, std::vector<int>(e), c);
}

CR specialized(const CP& x, const std::map<std::string, mpq_class>& vals) {
    CR out(x.rank());
    for (const auto& [e, c] : x.terms()) {
        mpq_class q;
        ParamPoly s = c.specialize(vals);
        REQUIRE(as_rational(s, q));
        out += CR::monomial(x.rank(), e, Rat(q));
    }
    return out;
}

} // namespace

TEST_CASE("rank-2 per-word classes match the worked example") {
    auto fgl = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> ctx(2, fgl);
    SchubertBasis<ParamPoly> basis(ctx);
    ParamPoly a11 = P("a11"), a12 = P("a12");
    CP one = CP::constant(2, ParamPoly::one());

    CHECK(basis.class_for_word({}) == CP::point(2));
    CHECK(basis.class_for_word({1}) == pmono(2, {1, 1, 0}));
    CHECK(basis.class_for_word({2}) == pmono(2, {2, 0, 0}));
    // word (2,1) denotes s2*s1; its class is the reversed composite C_1 C_2
    CHECK(basis.class_for_word({2, 1}) ==
          pmono(2, {1, 0, 0}) + pmono(2, {0, 1, 0}) + pmono(2, {1, 1, 0}, a11));
    CHECK(basis.class_for_word({1, 2}) == pmono(2, {1, 0, 0}));
    CHECK(basis.class_for_word({1, 2, 1}) == one + pmono(2, {1, 1, 0}, a12));
    CHECK(basis.class_for_word({2, 1, 2}) == one + pmono(2, {2, 0, 0}, a12));
    CHECK_THROWS_AS(basis.class_for_word({1, 1}), std::invalid_argument);
}

TEST_CASE("rank-2 averaged classes") {
    auto fgl = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> ctx(2, fgl);
    SchubertBasis<ParamPoly> basis(ctx);
    ParamPoly a12 = P("a12");
    ParamPoly half(mpq_class(1, 2));

    CHECK(basis.averaged(perm_identity(2)) == CP::point(2));
    CHECK(basis.averaged(perm_from_word(2, {2})) == pmono(2, {2, 0, 0}));
    CP w0_expect = CP::constant(2, ParamPoly::one()) +
                   pmono(2, {2, 0, 0}, half * a12) + pmono(2, {1, 1, 0}, half * a12);
    CHECK(basis.averaged(longest_element(2)) == w0_expect);
}

TEST_CASE("averaging reconstructs from the per-word classes") {
    auto fgl = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> ctx(2, fgl);
    SchubertBasis<ParamPoly> basis(ctx);
    for (const Perm& w : all_perms_length_order(2)) {
        auto words = all_reduced_words(w);
        CP sum(2);
        for (const Word& I : words) sum += basis.class_for_word(I);
        mpq_class inv(1, static_cast<unsigned long>(words.size()));
        CHECK(basis.averaged(w) == sum.scaled(ParamPoly(inv)));
    }
}

TEST_CASE("word dependence reports") {
    auto fgl = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> ctx(2, fgl);
    SchubertBasis<ParamPoly> basis(ctx);
    ParamPoly a12 = P("a12");
    CP one = CP::constant(2, ParamPoly::one());

    auto single = basis.word_dependence(perm_from_word(2, {1}));
    CHECK(single.size() == 1);

    auto w0rep = basis.word_dependence(longest_element(2));
    CHECK(w0rep.size() == 2);
    CHECK(w0rep.count(one + pmono(2, {1, 1, 0}, a12)) == 1);
    CHECK(w0rep.count(one + pmono(2, {2, 0, 0}, a12)) == 1);
    CHECK(w0rep.at(one + pmono(2, {1, 1, 0}, a12)) == Word{1, 2, 1});
    CHECK(w0rep.at(one + pmono(2, {2, 0, 0}, a12)) == Word{2, 1, 2});
}

TEST_CASE("multiplicative classes are word independent in S4") {
    auto fgl = fgl_multiplicative<Rat>(10, Rat(2));
    DividedDiffContext<Rat> ctx(3, fgl);
    SchubertBasis<Rat> basis(ctx);
    for (const Perm& w : all_perms_length_order(3))
        CHECK(basis.word_dependence(w).size() == 1);
}

TEST_CASE("additive transition matrix is the identity, ranks 2 and 3") {
    for (int n = 2; n <= 3; ++n) {
        auto fgl = fgl_additive<Rat>(n * (n + 1) / 2 + 4);
        DividedDiffContext<Rat> ctx(n, fgl);
        SchubertBasis<Rat> basis(ctx);
        FixedWordExpander<Rat> exp(basis);
        auto M = exp.transition_matrix();
        for (size_t i = 0; i < M.size(); ++i)
            for (size_t j = 0; j < M.size(); ++j)
                CHECK(M[i][j] == (i == j ? Rat::one() : Rat::zero()));
    }
}

TEST_CASE("transition matrix is unitriangular") {
    SUBCASE("generic degree-4 law at rank 2") {
        auto fgl = fgl_universal4_extended(7);
        DividedDiffContext<ParamPoly> ctx(2, fgl);
        SchubertBasis<ParamPoly> basis(ctx);
        FixedWordExpander<ParamPoly> exp(basis);
        auto M = exp.transition_matrix();
        CHECK(exp.is_unitriangular(M));
        // the only off-diagonal entries at rank 2 come from the two-valued
        // w0 report: averaged(w0) - fixed class of w0 has degree >= 2
        size_t last = exp.perms().size() - 1;
        int nonzero_offdiag = 0;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != last && !M[last][j].is_zero()) ++nonzero_offdiag;
        CHECK(nonzero_offdiag > 0);
    }
    SUBCASE("multiplicative at rank 3") {
        auto fgl = fgl_multiplicative<Rat>(10, Rat(3));
        DividedDiffContext<Rat> ctx(3, fgl);
        SchubertBasis<Rat> basis(ctx);
        FixedWordExpander<Rat> exp(basis);
        CHECK(exp.is_unitriangular(exp.transition_matrix()));
    }
}

TEST_CASE("braid defect drops length on the point class") {
    // C_121 - C_212 applied to [pt] expands with fixed-word classes of
    // length < 3 only, which is what keeps the transition matrix
    // unitriangular. On lower-degree monomials the defect is a combination
    // u_J * C_J with |J| < 3 but coefficient *functions* u_J, so its images
    // can still have a constant part (e.g. a12 on t_1) and hence touch the
    // length-3 basis class; that is asserted as the expected behavior.
    auto fgl = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> ctx(2, fgl);
    SchubertBasis<ParamPoly> basis(ctx);
    FixedWordExpander<ParamPoly> exp(basis);
    LinOp<ParamPoly> C1 = divided_diff_op(ctx, 1);
    LinOp<ParamPoly> C2 = divided_diff_op(ctx, 2);
    LinOp<ParamPoly> defect =
        C1.compose(C2).compose(C1) - C2.compose(C1).compose(C2);

    CP on_pt = defect.apply(CP::point(2));
    ParamPoly a12 = P("a12");
    CHECK(on_pt == pmono(2, {1, 1, 0}, a12) - pmono(2, {2, 0, 0}, a12));
    for (const auto& [v, coeff] : exp.expand(on_pt)) {
        (void)coeff;
        CHECK(perm_length(v) < 3);
    }

    CP on_t1 = defect.apply(CP::t_var(2, 1));
    bool touches_w0 = false;
    for (const auto& [v, coeff] : exp.expand(on_t1)) {
        (void)coeff;
        if (v == longest_element(2)) touches_w0 = true;
    }
    CHECK(touches_w0);
}

TEST_CASE("specializing the generic law at (-beta, 0, 0) gives the multiplicative classes") {
    mpq_class beta(5);
    std::map<std::string, mpq_class> at{{"a11", -beta}, {"a12", 0}, {"a22", 0}};

    auto gen = fgl_universal4_extended(7);
    DividedDiffContext<ParamPoly> gctx(2, gen);
    SchubertBasis<ParamPoly> gbasis(gctx);

    auto mult = fgl_multiplicative<Rat>(7, Rat(beta));
    DividedDiffContext<Rat> mctx(2, mult);
    SchubertBasis<Rat> mbasis(mctx);

    for (const Perm& w : all_perms_length_order(2)) {
        CHECK(specialized(gbasis.averaged(w), at) == mbasis.averaged(w));
        for (const Word& I : all_reduced_words(w))
            CHECK(specialized(gbasis.class_for_word(I), at) == mbasis.class_for_word(I));
    }
}

TEST_CASE("beta = 0 classes equal classical Schubert polynomials of w0*w") {
    for (int n = 2; n <= 3; ++n) {
        auto fgl = fgl_additive<Rat>(n * (n + 1) / 2 + 4);
        DividedDiffContext<Rat> ctx(n, fgl);
        SchubertBasis<Rat> basis(ctx);
        oracle::Classical orc(n);
        Perm w0 = longest_element(n);
        for (const Perm& w : all_perms_length_order(n)) {
            CR expect = CR::reduce(orc.schubert(perm_multiply(w0, w)));
            CHECK(basis.averaged(w) == expect);
        }
    }
}

TEST_CASE("beta = 1 classes equal classical Grothendieck polynomials of w0*w") {
    for (int n = 2; n <= 3; ++n) {
        auto fgl = fgl_multiplicative<Rat>(n * (n + 1) / 2 + 4, Rat(1));
        DividedDiffContext<Rat> ctx(n, fgl);
        SchubertBasis<Rat> basis(ctx);
        oracle::Classical orc(n);
        Perm w0 = longest_element(n);
        for (const Perm& w : all_perms_length_order(n)) {
            CR expect = CR::reduce(orc.grothendieck(perm_multiply(w0, w)));
            CHECK(basis.averaged(w) == expect);
        }
    }
}
