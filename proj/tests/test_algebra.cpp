#include "doctest.h"

#include "golden.hpp"
#include "ptalg/algebra.hpp"
#include "ptalg/tensor_oracle.hpp"

#include <random>

using namespace ptalg;

namespace {

Permutation cyc(int m, const std::string &text) { return parse_permutation(text, m); }

SymbolicElement golden_cell(const std::string &cell) {
    if (cell.rfind("d ", 0) == 0)
        return SymbolicElement::generator(AlgebraContext::with_symbolic_d(3), cyc(3, cell.substr(2)), Polynomial::d());
    return SymbolicElement::generator(AlgebraContext::with_symbolic_d(3), cyc(3, cell));
}

Element random_element(AlgebraContext ctx, std::mt19937 &rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Element x(ctx);
    for (const auto &p : all_permutations(ctx.n))
        x.add_term(p, coef(rng));
    return x;
}

} // namespace

TEST_CASE("polynomials") {
    Polynomial d = Polynomial::d();
    CHECK(to_string(d * d - 1) == "d^2-1");
    CHECK(to_string(-d + 3) == "-d+3");
    CHECK(to_string(Polynomial(2) * d) == "2d");
    CHECK(to_string(Polynomial()) == "0");
    CHECK(parse_polynomial("d^2-1") == d * d - 1);
    CHECK(parse_polynomial("(2*d+1)") == Polynomial(2) * d + 1);
    CHECK(parse_polynomial("-d") == -d);
    CHECK((d * d - 1).evaluate(3.0) == 8.0);
    CHECK_THROWS(parse_polynomial("x+1"));
}

TEST_CASE("generator products follow the composition law") {
    CHECK(mul_generators(cyc(3, "(132)"), cyc(3, "(123)")) == GeneratorProduct{1, cyc(3, "(23)")});
    CHECK(mul_generators(cyc(3, "(13)"), cyc(3, "(13)")) == GeneratorProduct{1, cyc(3, "(13)")});
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (int j = 1; j < n; ++j) {
                auto tk = Permutation::transposition(n, k, n);
                auto tj = Permutation::transposition(n, j, n);
                if (k == j)
                    CHECK(mul_generators(tk, tk) == GeneratorProduct{1, tk});
                else
                    CHECK(mul_generators(tk, tj) == GeneratorProduct{0, tj * tk});
            }
    CHECK_THROWS(mul_generators(Permutation::identity(3), Permutation::identity(4)));
}

TEST_CASE("symbolic product table for n = 3") {
    const auto ctx = AlgebraContext::with_symbolic_d(3);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            auto x = SymbolicElement::generator(ctx, cyc(3, golden::kTable3Order[r]));
            auto y = SymbolicElement::generator(ctx, cyc(3, golden::kTable3Order[c]));
            CHECK(mul(x, y) == golden_cell(golden::kTable3[r][c]));
        }
    auto g = SymbolicElement::generator(ctx, cyc(3, "(123)"));
    CHECK(mul(g, g) == g);
}

TEST_CASE("element algebra") {
    const auto ctx = AlgebraContext::numeric(3, 2);
    std::mt19937 rng(7);
    auto x = random_element(ctx, rng);
    auto y = random_element(ctx, rng);
    auto z = random_element(ctx, rng);
    auto one = Element::unit(ctx);
    CHECK(mul(x, one) == x);
    CHECK(mul(one, x) == x);
    Oracle oracle(3, 2);
    CHECK(max_abs(oracle.image(mul(mul(x, y), z) - mul(x, mul(y, z)))) < 1e-9);
    CHECK(max_abs(oracle.image(adjoint(mul(x, y)) - mul(adjoint(y), adjoint(x)))) < 1e-9);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(adjoint(Element::generator(ctx, cyc(3, "(123)"))) == Element::generator(ctx, cyc(3, "(132)")));
    CHECK_THROWS(mul(x, Element::unit(AlgebraContext::numeric(3, 3))));
}

TEST_CASE("element text round trip") {
    const auto ctx = AlgebraContext::numeric(4, 3);
    std::mt19937 rng(11);
    auto x = random_element(ctx, rng);
    CHECK(parse_element(to_string(x), ctx) == x);
    auto e = parse_element("2*(12) - (13)(24) + 0.5*id", ctx);
    CHECK(e.coefficient(cyc(4, "(12)")) == 2.0);
    CHECK(e.coefficient(cyc(4, "(13)(24)")) == -1.0);
    CHECK(e.coefficient(Permutation::identity(4)) == 0.5);
    CHECK(parse_element("0", ctx).is_zero());

    const auto sctx = AlgebraContext::with_symbolic_d(3);
    Polynomial d = Polynomial::d();
    SymbolicElement s(sctx);
    s.add_term(cyc(3, "(12)"), d * d - 1);
    s.add_term(cyc(3, "(13)"), -d);
    s.add_term(Permutation::identity(3), 3);
    CHECK(to_string(s) == "3*id + (d^2-1)*(12) - d*(13)");
    CHECK(parse_symbolic_element(to_string(s), 3) == s);
}

TEST_CASE("symbolic and numeric products agree") {
    const auto sctx = AlgebraContext::with_symbolic_d(3);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    SymbolicElement x(sctx), y(sctx);
    for (const auto &p : all_permutations(3)) {
        x.add_term(p, Polynomial(coef(rng)) * Polynomial::d() + coef(rng));
        y.add_term(p, Polynomial(coef(rng)));
    }
    for (int d = 2; d <= 4; ++d)
        CHECK(evaluate(mul(x, y), d) == mul(evaluate(x, d), evaluate(y, d)));
}

TEST_CASE("associativity through the oracle") {
    for (int n : {3, 4}) {
        for (int d : {2, 3, 4}) {
            Oracle oracle(n, d);
            std::mt19937 rng(static_cast<unsigned>(n * 10 + d));
            std::uniform_int_distribution<std::size_t> pick(0, factorial(n) - 1);
            const auto ctx = AlgebraContext::numeric(n, d);
            double worst = 0.0;
            for (int t = 0; t < 200; ++t) {
                auto x = Element::generator(ctx, Permutation::unrank(n, pick(rng)));
                auto y = Element::generator(ctx, Permutation::unrank(n, pick(rng)));
                auto z = Element::generator(ctx, Permutation::unrank(n, pick(rng)));
                worst = std::max(worst, max_abs(oracle.image(mul(mul(x, y), z)) - oracle.image(mul(x, mul(y, z)))));
                worst = std::max(worst, max_abs(oracle.image(mul(mul(x, y), z)) -
                                                oracle.image(x) * oracle.image(y) * oracle.image(z)));
            }
            CHECK(worst < 1e-9);
        }
    }
}

TEST_CASE("S(n-1) subalgebra and the ideal M are closed") {
    for (int n = 3; n <= 4; ++n) {
        const auto perms = all_permutations(n);
        for (const auto &s : perms)
            for (const auto &r : perms) {
                auto prod = mul_generators(s, r);
                if (s.fixes(n) && r.fixes(n))
                    CHECK(classify(prod.result) == ABLabel{n, n});
                if (!s.fixes(n) || !r.fixes(n))
                    CHECK_FALSE(prod.result.fixes(n));
            }
    }
}

TEST_CASE("u-elements") {
    const auto ctx = AlgebraContext::numeric(3, 2);
    auto u = u_element(Partition({1}), 1, 1, 1, 1, ctx);
    REQUIRE(u.terms().size() == 1);
    CHECK(u.coefficient(cyc(3, "(13)")) == doctest::Approx(1.0));
    CHECK(mul(u, u) == 2.0 * u);
    for (int n : {3, 4}) {
        for (int d : {2, 3}) {
            const auto c = AlgebraContext::numeric(n, d);
            for (const auto &alpha : partitions_of(n - 2)) {
                auto fam = u_family(alpha, c);
                for (std::size_t a = 0; a < fam.size(); ++a) {
                    auto x = fam[a][a];
                    Element diff = mul(x, x) - static_cast<double>(d) * x;
                    CHECK(diff.is_zero());
                }
            }
        }
    }
    CHECK_THROWS(u_element(Partition(), 1, 1, 1, 1, AlgebraContext::numeric(2, 2)));
    auto sgn_u = u_element(Partition({1, 1}), 1, 2, 1, 1, AlgebraContext::numeric(4, 2));
    CHECK_FALSE(sgn_u.is_zero());
    auto triv3 = u_element(Partition({1, 1, 1}), 1, 1, 1, 1, AlgebraContext::numeric(5, 2));
    CHECK(max_abs(Oracle(5, 2).image(triv3)) < 1e-12);
}
