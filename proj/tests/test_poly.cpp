#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcva/linalg.hpp"
#include "arcva/poly.hpp"

using namespace arcva;
using namespace arcva::exactpoly;

namespace {

// variable ids mirroring the jet convention: (gen << 16) | level
constexpr VarId L0 = 0 << 16 | 0, L1 = (0 << 16) | 1;
constexpr VarId W0 = 1 << 16 | 0, W1 = (1 << 16) | 1;

Polynomial v(VarId id) { return Polynomial::variable(id); }

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterm(0, 4), coef(-5, 5), expo(0, 2), var(0, 3);
    const VarId ids[4] = {L0, L1, W0, W1};
    Polynomial p;
    for (int t = nterm(rng); t > 0; --t) {
        Monomial m;
        for (int j = 0; j < 3; ++j) m = m * Monomial::var(ids[var(rng)], expo(rng));
        p += Polynomial::term(m, Scalar(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("cancellation and identity") {
    Polynomial w2 = v(W0).pow(2);
    Polynomial l3 = v(L0).pow(3);
    CHECK(w2 - (w2 - l3) == l3);
    Polynomial p = v(L0) * v(W1) + Polynomial(Scalar(2));
    CHECK(p * Polynomial(Scalar(1)) == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("cube of r1 expands to the 4-term degree-6 polynomial") {
    Polynomial r1 = v(L1) * v(W0) * Scalar(3) - v(L0) * v(W1) * Scalar(2);
    Polynomial cube = poly_arith(r1, r1, PolyOp::pow, 3);
    CHECK(cube.term_count() == 4);
    CHECK(cube.total_degree() == 6);
    Polynomial expect = v(L1).pow(3) * v(W0).pow(3) * Scalar(27)
                      - v(L0) * v(L1).pow(2) * v(W0).pow(2) * v(W1) * Scalar(54)
                      + v(L0).pow(2) * v(L1) * v(W0) * v(W1).pow(2) * Scalar(36)
                      - v(L0).pow(3) * v(W1).pow(3) * Scalar(8);
    CHECK(cube == expect);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("monomial orders are total, multiplicative, degree-compatible") {
    MonomialOrder grevlex{MonomialOrder::Kind::grevlex, {W1, W0, L1, L0}};
    MonomialOrder lex{MonomialOrder::Kind::lex, {W1, W0, L1, L0}};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> expo(0, 3), var(0, 3);
    const VarId ids[4] = {L0, L1, W0, W1};
    auto rand_mono = [&] {
        Monomial m;
        for (int j = 0; j < 3; ++j) m = m * Monomial::var(ids[var(rng)], expo(rng));
        return m;
    };
    for (const auto& ord : {grevlex, lex}) {
        for (int t = 0; t < 300; ++t) {
            Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
            // totality
            CHECK(((a == b) || ord.greater(a, b) || ord.greater(b, a)));
            CHECK(!(ord.greater(a, b) && ord.greater(b, a)));
            // multiplicativity
            if (ord.greater(a, b)) CHECK(ord.greater(a * c, b * c));
            // 1 is minimal (well-order on monoid ideals)
            if (!a.is_one()) CHECK(ord.greater(a, Monomial()));
            // transitivity spot-check
            if (ord.greater(a, b) && ord.greater(b, c)) CHECK(ord.greater(a, c));
        }
    }
    // lex with w > l pulls w^2 ahead of l^3; grevlex compares degree first
    Monomial w2 = Monomial::var(W0, 2), l3 = Monomial::var(L0, 3);
    CHECK(lex.greater(w2, l3));
    CHECK(grevlex.greater(l3, w2));
}

TEST_CASE("kernel_basis examples") {
    auto s = [](long n) { return Scalar(n); };
    SUBCASE("identity has trivial kernel") {
        Matrix m = {{s(1), s(0)}, {s(0), s(1)}};
        CHECK(kernel_basis(m).empty());
    }
    SUBCASE("row (1,1) forces (1,-1) up to scale") {
        Matrix m = {{s(1), s(1)}};
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        Scalar ratio = k[0][0] / k[0][1];
        CHECK(ratio == Scalar(-1));
    }
    SUBCASE("rank-1 2x3 matrix has 2-dimensional kernel") {
        Matrix m = {{s(1), s(2), s(3)}, {s(2), s(4), s(6)}};
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 2);
        for (const auto& vec : k) {
            for (const auto& row : m) {
                Scalar dot;
                for (std::size_t j = 0; j < 3; ++j) dot += row[j] * vec[j];
                CHECK(dot.is_zero());
            }
        }
        CHECK(rank(m) + k.size() == 3);
    }
}

TEST_CASE("kernel rank-nullity on random matrices") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dim(1, 6), coef(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t rows = dim(rng), cols = dim(rng);
        Matrix m(rows, std::vector<Scalar>(cols));
        for (auto& row : m)
            for (auto& x : row) x = Scalar(coef(rng));
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& vec : k)
            for (const auto& row : m) {
                Scalar dot;
                for (std::size_t j = 0; j < cols; ++j) dot += row[j] * vec[j];
                CHECK(dot.is_zero());
            }
        // independence of the returned vectors
        CHECK(rank(k) == k.size());
    }
}

TEST_CASE("RowSpace span membership") {
    RowSpace rs(3);
    rs.add({Scalar(1), Scalar(2), Scalar(0)});
    rs.add({Scalar(0), Scalar(1), Scalar(1)});
    CHECK(rs.contains({Scalar(1), Scalar(3), Scalar(1)}));
    CHECK(!rs.contains({Scalar(0), Scalar(0), Scalar(1)}));
    CHECK(rs.rank() == 2);
}
