#include <doctest.h>

#include <random>

#include "fsp/param_poly.hpp"
#include "fsp/rational.hpp"
#include "fsp/tate.hpp"

using namespace fsp;

TEST_CASE("rational arithmetic stays canonical") {
    Rat a(2, 3), b(3, 4);
    CHECK((a * b) == Rat(1, 2));
    CHECK((a + b) == Rat(17, 12));
    CHECK(Rat(5, 3).inv() == Rat(3, 5));
    CHECK(Rat(-4, 8).str() == "-1/2");
    CHECK(Rat(6, 3).str() == "2");
    CHECK_THROWS_AS(Rat(0).inv(), not_invertible_error);
}

TEST_CASE("a13 is rewritten to (2/3)(a22 - a11*a12)") {
    ParamPoly a13 = ParamPoly::param("a13");
    ParamPoly expect =
        ParamPoly(mpq_class(2, 3)) * ParamPoly::param("a22") -
        ParamPoly(mpq_class(2, 3)) * ParamPoly::param("a11") * ParamPoly::param("a12");
    CHECK(a13 == expect);
    CHECK((a13 * ParamPoly::one()) == expect);
    // the raw parameter never survives any arithmetic
    ParamPoly p = a13 * a13 + ParamPoly::param("a13", 3);
    for (const auto& [m, c] : p.terms()) CHECK(m.count("a13") == 0);
}

TEST_CASE("ParamPoly normalization commutes with arithmetic") {
    // (a13 entered twice) vs (2*a13): both normalize to the same table
    ParamPoly two_a13 = ParamPoly::param("a13") + ParamPoly::param("a13");
    ParamPoly also = ParamPoly::param("a13") * ParamPoly(2);
    CHECK(two_a13 == also);
}

TEST_CASE("ParamPoly units") {
    CHECK(ParamPoly(mpq_class(5, 3)).inv() == ParamPoly(mpq_class(3, 5)));
    ParamPoly p = ParamPoly::one() + ParamPoly::param("a11");
    CHECK_THROWS_AS(p.inv(), not_invertible_error);
    CHECK_FALSE(p.is_unit());
}

TEST_CASE("ParamPoly canonical strings") {
    ParamPoly p = ParamPoly::param("a11", 2) * ParamPoly::param("a22");
    CHECK(p.str() == "a11^2*a22");
    ParamPoly q = ParamPoly(1) - ParamPoly::param("mu1") * ParamPoly(mpq_class(1, 2));
    CHECK(q.str() == "-1/2*mu1 + 1");
    CHECK(ParamPoly::zero().str() == "0");
}

TEST_CASE("Tate reduction cancels (t+t^-1) factors") {
    Tate u = Tate::t_plus_tinv();
    Tate k1 = Tate::tate_unit_inv(1);
    CHECK((u * k1) == Tate::one());
    CHECK((u * u).inv() == Tate::tate_unit_inv(2));
    Tate x = Tate::t_power(3) + Tate::t_power(1);  // t(t+t^-1)*t
    CHECK((x * Tate::tate_unit_inv(1)) == Tate::t_power(2));
}

TEST_CASE("Tate units and inverses") {
    Tate u = Tate::t_power(2, 3) + Tate::t_power(0, 3);  // 3t(t+t^-1)t... = 3t^2+3
    CHECK(u.is_unit());
    CHECK((u * u.inv()) == Tate::one());
    Tate nonunit = Tate::t_power(1) + Tate::one();
    CHECK_FALSE(nonunit.is_unit());
    CHECK_THROWS_AS(nonunit.inv(), not_invertible_error);
    CHECK_THROWS_AS(Tate::zero().inv(), not_invertible_error);
}

TEST_CASE("bar involution on the Tate ring") {
    CHECK(Tate::t_power(2).bar() == Tate::t_power(-2));
    CHECK(Tate::t_plus_tinv().bar() == Tate::t_plus_tinv());
    Tate x(Tate::Laurent{{1, 1}}, 1);  // t/(t+t^-1)
    CHECK(x.bar() == Tate(Tate::Laurent{{-1, 1}}, 1));
    CHECK(x.bar().bar() == x);
}

TEST_CASE("Tate canonical strings") {
    Tate x = Tate::t_power(-1) - Tate::t_power(2, 2) + Tate::one();
    CHECK(x.str() == "t^-1 + 1 - 2*t^2");
    CHECK(Tate::tate_unit_inv(2).str() == "(1)/(t+t^-1)^2");
    CHECK(Tate::zero().str() == "0");
}

TEST_CASE("integrality predicate") {
    CHECK(Tate::t_power(-3).is_integral());
    CHECK_FALSE(Tate::t_power(1, mpq_class(1, 2)).is_integral());
    CHECK_FALSE(Tate::tate_unit_inv(1).is_integral());
    // a reducible fraction becomes integral again
    CHECK((Tate::t_plus_tinv() * Tate::tate_unit_inv(1)).is_integral());
}

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rat(num(rng), den(rng));
}

ParamPoly random_param_poly() {
    std::uniform_int_distribution<int> nterms(0, 3), exp(0, 2), pick(0, 3);
    const char* names[] = {"a11", "a12", "a13", "a22"};
    ParamPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ParamPoly term(random_rat().value());
        for (int j = 0; j < 2; ++j) {
            int e = exp(rng);
            if (e) term *= ParamPoly::param(names[pick(rng)], e);
        }
        p += term;
    }
    return p;
}

Tate random_tate() {
    std::uniform_int_distribution<int> nterms(0, 3), exp(-3, 3), kk(0, 2);
    Tate::Laurent n;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) n[exp(rng)] += random_rat().value();
    for (auto it = n.begin(); it != n.end();)
        it = (it->second == 0) ? n.erase(it) : std::next(it);
    return Tate(std::move(n), kk(rng));
}

template <class R, class Gen>
void check_ring_axioms(Gen gen) {
    for (int trial = 0; trial < 200; ++trial) {
        R a = gen(), b = gen(), c = gen();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a + R::zero() == a);
        CHECK(a * R::one() == a);
        CHECK(a - a == R::zero());
    }
}

} // namespace

TEST_CASE("ring axioms on randomized triples") {
    check_ring_axioms<Rat>(random_rat);
    check_ring_axioms<ParamPoly>(random_param_poly);
    check_ring_axioms<Tate>(random_tate);
}

TEST_CASE("bar is an involution on random Tate elements") {
    for (int trial = 0; trial < 200; ++trial) {
        Tate x = random_tate();
        CHECK(x.bar().bar() == x);
    }
}

TEST_CASE("invert_unit round-trips whenever it succeeds") {
    for (int trial = 0; trial < 200; ++trial) {
        Tate x = random_tate();
        try {
            Tate xi = x.inv();
            CHECK(x * xi == Tate::one());
        } catch (const not_invertible_error&) {
        }
        Rat r = random_rat();
        if (!r.is_zero()) CHECK(r * r.inv() == Rat::one());
    }
}
