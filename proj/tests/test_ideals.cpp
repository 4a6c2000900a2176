#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcva/errors.hpp"
#include "arcva/ideals.hpp"

using namespace arcva;
using namespace arcva::diffalg;
using namespace arcva::ideals;
using exactpoly::Scalar;

namespace {

DiffRingPtr cusp_ring() {
    return std::make_shared<DiffRing>(std::vector<std::string>{"l", "w"},
                                      std::vector<int>{2, 3});
}

struct Cusp {
    DiffRingPtr r = cusp_ring();
    DiffPoly l(unsigned i) const { return DiffPoly::var(r, 0, i); }
    DiffPoly w(unsigned i) const { return DiffPoly::var(r, 1, i); }
    DiffPoly f0() const { return l(0).pow(3) - w(0).pow(2); }
    DiffPoly r1() const { return l(1) * w(0) * Scalar(3) - l(0) * w(1) * Scalar(2); }
    DiffPoly r2() const {
        return w(1).pow(2) - l(0) * l(1).pow(2) * Scalar::rational(9, 4);
    }
    JetPresentation arcs() const { return {r, {f0()}, Unbounded}; }
    std::vector<DiffPoly> trunc(unsigned m) const { return arc_truncation(arcs(), m); }
};

}  // namespace

TEST_CASE("groebner basics") {
    Cusp c;
    auto ord = order_for({c.f0()}, exactpoly::MonomialOrder::Kind::grevlex);
    SUBCASE("single generator is its own reduced basis") {
        auto g = groebner_basis({c.f0()}, ord);
        REQUIRE(g.generators().size() == 1);
        // monic under grevlex: leading term l0^3 has coefficient 1
        CHECK(g.generators()[0] == c.f0());
    }
    SUBCASE("unit ideal") {
        auto g = groebner_basis({DiffPoly::constant(c.r, Scalar(1))}, ord);
        REQUIRE(g.generators().size() == 1);
        CHECK(g.generators()[0] == DiffPoly::constant(c.r, Scalar(1)));
    }
    SUBCASE("f0, f1: inputs reduce to zero, S-pairs reduce to zero") {
        std::vector<DiffPoly> gens = {c.f0(), apply_derivation(c.f0())};
        auto ord2 = order_for(gens, exactpoly::MonomialOrder::Kind::grevlex);
        auto g = groebner_basis(gens, ord2);
        CHECK(g.reduced());
        for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
        // Buchberger criterion on the result: pairwise S-polynomials reduce to 0
        for (std::size_t i = 0; i < g.generators().size(); ++i)
            for (std::size_t j = i + 1; j < g.generators().size(); ++j) {
                const auto& a = g.generators()[i];
                const auto& b = g.generators()[j];
                auto [ma, ca] = a.poly().leading_term(g.order());
                auto [mb, cb] = b.poly().leading_term(g.order());
                auto l = exactpoly::Monomial::lcm(ma, mb);
                exactpoly::Monomial qa, qb;
                REQUIRE(l.divide(ma, qa));
                REQUIRE(l.divide(mb, qb));
                DiffPoly s = DiffPoly(a.ring(), exactpoly::Polynomial::term(qa, ca.inverse()) *
                                                    a.poly()) -
                             DiffPoly(b.ring(), exactpoly::Polynomial::term(qb, cb.inverse()) *
                                                    b.poly());
                CHECK(normal_form(s, g).is_zero());
            }
        // representations recombine each basis element from the inputs
        for (std::size_t i = 0; i < g.generators().size(); ++i) {
            DiffPoly sum;
            for (std::size_t k = 0; k < gens.size(); ++k)
                sum = sum + gens[k] * g.representations()[i][k];
            CHECK(sum == g.generators()[i]);
        }
    }
}

TEST_CASE("normal_form examples") {
    Cusp c;
    // lex order with w > l: leading term of w^2 - l^3 is w0^2
    exactpoly::MonomialOrder lex{exactpoly::MonomialOrder::Kind::lex,
                                 {encode({1, 0}), encode({0, 0})}};
    auto g = groebner_basis({c.w(0).pow(2) - c.l(0).pow(3)}, lex);
    CHECK(normal_form(c.w(0).pow(2), g) == c.l(0).pow(3));
    CHECK(normal_form(DiffPoly::constant(c.r, Scalar()), g).is_zero());
    auto g01 = groebner_basis(c.trunc(1),
                              order_for(c.trunc(1), exactpoly::MonomialOrder::Kind::grevlex));
    CHECK(!normal_form(c.r1(), g01).is_zero());
}

TEST_CASE("the paper's explicit cube certificate recombines") {
    // the displayed cofactors of (r1)^3 over f^(0)..f^(3), as a literal identity
    Cusp c;
    auto S = [](long n, long d = 1) { return Scalar::rational(n, d); };
    DiffPoly c0 = c.l(0) * c.l(1) * c.l(2) * c.w(0) * S(-81) +
                  c.l(0).pow(2) * c.l(3) * c.w(0) * S(-27, 2) +
                  c.l(0).pow(2) * c.l(2) * c.w(1) * S(18) + c.w(1).pow(3) * S(-4) +
                  c.w(0) * c.w(1) * c.w(2) * S(15) + c.w(0).pow(2) * c.w(3) * S(9);
    DiffPoly c1 = c.l(0).pow(2) * c.l(2) * c.w(0) * S(9, 2) +
                  c.l(0).pow(2) * c.l(1) * c.w(1) * S(12) +
                  c.w(0) * c.w(1).pow(2) * S(-7) + c.w(0).pow(2) * c.w(2) * S(-3);
    DiffPoly c2 = c.l(0).pow(2) * c.l(1) * c.w(0) * S(-9, 2) +
                  c.l(0).pow(3) * c.w(1) * S(-6) + c.w(0).pow(2) * c.w(1) * S(9);
    DiffPoly c3 = c.l(0).pow(3) * c.w(0) * S(9, 2) - c.w(0).pow(3) * S(9, 2);
    auto fs = c.trunc(3);
    DiffPoly sum = c0 * fs[0] + c1 * fs[1] + c2 * fs[2] + c3 * fs[3];
    CHECK(sum == c.r1().pow(3));
}

TEST_CASE("cusp memberships and certificates") {
    Cusp c;
    SUBCASE("r1 not in <f0,f1>") { CHECK(!ideal_member(c.r1(), c.trunc(1))); }
    SUBCASE("r1, r1^2 not in <f0..f3>; r1^3 is, with recombining certificate") {
        auto fs = c.trunc(3);
        CHECK(!ideal_member(c.r1(), fs));
        CHECK(!ideal_member(c.r1().pow(2), fs));
        auto cert = ideal_member(c.r1().pow(3), fs);
        REQUIRE(cert);
        CHECK(cert->recombine() == c.r1().pow(3));
    }
    SUBCASE("zero is a member with zero cofactors") {
        auto cert = ideal_member(DiffPoly::constant(c.r, Scalar()), c.trunc(1));
        REQUIRE(cert);
        CHECK(cert->cofactors.empty());
    }
    SUBCASE("r2 powers against f0..f6") {
        auto fs = c.trunc(6);
        CHECK(!ideal_member(c.r2(), fs));
        CHECK(!ideal_member(c.r2().pow(2), fs));
        auto cert = ideal_member(c.r2().pow(3), fs);
        REQUIRE(cert);
        CHECK(cert->recombine() == c.r2().pow(3));
    }
}

TEST_CASE("nilpotency orders") {
    Cusp c;
    CHECK(nilpotency_order(c.r1(), c.trunc(3), 5) == 3u);
    CHECK(nilpotency_order(c.r2(), c.trunc(6), 5) == 3u);
    CHECK(!nilpotency_order(c.l(0), c.trunc(3), 6));
}

TEST_CASE("arc_member decides via the height truncation") {
    Cusp c;
    auto arcs = c.arcs();
    SUBCASE("(r1)^3 is a member using only f0..f3") {
        auto cert = arc_member(c.r1().pow(3), arcs);
        REQUIRE(cert);
        CHECK(cert->cofactors.size() == 4);
        CHECK(cert->recombine() == c.r1().pow(3));
    }
    SUBCASE("r1 itself is not") { CHECK(!arc_member(c.r1(), arcs)); }
    SUBCASE("a base relation is") { CHECK(arc_member(c.f0(), arcs)); }
    SUBCASE("inhomogeneous queries are rejected") {
        CHECK_THROWS_AS(arc_member(c.l(0) + c.l(1), arcs), Inhomogeneous);
    }
}

TEST_CASE("truncation stability") {
    Cusp c;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coef(-4, 4), lev(0, 2), gen(0, 1), nf(1, 3);
    auto random_homog = [&](unsigned target_height) {
        // random height-homogeneous element of the cusp jet ring
        for (;;) {
            DiffPoly p;
            for (int t = 0; t < 3; ++t) {
                unsigned h = 0;
                DiffPoly term = DiffPoly::constant(c.r, Scalar(coef(rng)));
                for (int f = nf(rng); f > 0 && h < target_height; --f) {
                    unsigned l = std::min<unsigned>(lev(rng), target_height - h);
                    term = term * DiffPoly::var(c.r, gen(rng), l);
                    h += l;
                }
                while (h < target_height) {
                    term = term * DiffPoly::var(c.r, gen(rng), 1);
                    ++h;
                }
                p = p + term;
            }
            if (!p.is_zero()) return p;
        }
    };
    auto verdict = [&](const DiffPoly& p, unsigned hi) {
        return static_cast<bool>(ideal_member(p, c.trunc(hi)));
    };
    for (const DiffPoly& p : {c.r1(), c.r2(), c.r1().pow(2), c.r2().pow(2)}) {
        unsigned h = height_of(p);
        CHECK(verdict(p, h) == verdict(p, h + 3));
    }
    for (int t = 0; t < 12; ++t) {
        DiffPoly p = random_homog(t % 4);
        unsigned h = height_of(p);
        CHECK(verdict(p, h) == verdict(p, h + 3));
    }
}

TEST_CASE("membership verdicts agree across lex and grevlex") {
    Cusp c;
    GroebnerOptions lex{exactpoly::MonomialOrder::Kind::lex, 10'000'000};
    for (const DiffPoly& p :
         {c.r1(), c.r1().pow(3), c.r2(), c.l(0) * c.f0(), apply_derivation(c.f0())}) {
        bool a = static_cast<bool>(ideal_member(p, c.trunc(3)));
        bool b = static_cast<bool>(ideal_member(p, c.trunc(3), lex));
        CHECK(a == b);
    }
}

TEST_CASE("budget exhaustion raises") {
    Cusp c;
    GroebnerOptions tiny{exactpoly::MonomialOrder::Kind::grevlex, 5};
    CHECK_THROWS_AS(ideal_member(c.r2().pow(3), c.trunc(6), tiny), BudgetExceeded);
}
