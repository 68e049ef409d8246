#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "suzuki/algebra.hpp"

using namespace suzuki;

TEST_CASE("table shape for the smallest algebra") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    CHECK(alg.dim() == 8);
    long nonzero = 0, zero = 0;
    for (long i = 0; i < alg.dim(); ++i)
        for (long j = 0; j < alg.dim(); ++j) (alg.mult(i, j).is_zero() ? zero : nonzero)++;
    CHECK(nonzero + zero == 64);
    // mixed-family products with odd adjacent index sum vanish
    CHECK(alg.mult(BasisIndex{Family::E, 1, 0}, BasisIndex{Family::O, 1, 0}).is_zero());
    // x12 * x12 = x12^2
    Element sq = alg.mult(BasisIndex{Family::O, 1, 0}, BasisIndex{Family::O, 1, 0});
    CHECK(sq == Element::single(BasisIndex{Family::O, 2, 0}, alg.field().one()));
}

TEST_CASE("unit element per parameters") {
    const CycField f(4);
    AlgebraParams plus{1, 2, 1, 1};
    Element u1 = unit_element(plus, f);
    CHECK(u1.coeff(BasisIndex{Family::E, 2, 0}, f).is_one());
    CHECK(u1.coeff(BasisIndex{Family::O, 2, 0}, f).is_one());

    AlgebraParams minus{1, 2, -1, 1};
    Element u2 = unit_element(minus, f);
    CHECK(u2.coeff(BasisIndex{Family::E, 2, 0}, f).is_one());
    CHECK(u2.coeff(BasisIndex{Family::O, 2, 0}, f) == -f.one());
}

TEST_CASE("unit law over all basis elements") {
    for (int mu : {1, -1}) {
        SuzukiAlgebra alg(AlgebraParams{1, 3, mu, -1});
        for (long i = 0; i < alg.dim(); ++i) {
            Element b = Element::single(alg.basis(i), alg.field().one());
            CHECK(alg.multiply(alg.unit(), b) == b);
            CHECK(alg.multiply(b, alg.unit()) == b);
        }
    }
}

TEST_CASE("table product matches the oracle on basis pairs") {
    AlgebraParams p{1, 3, -1, 1};
    SuzukiAlgebra alg(p);
    testsupport::RelationOracle oracle(p, 2 * (2 * p.N + p.n));
    for (long i = 0; i < alg.dim(); ++i) {
        for (long j = 0; j < alg.dim(); ++j) {
            Word w = basis_word(alg.basis(i));
            Word wj = basis_word(alg.basis(j));
            w.insert(w.end(), wj.begin(), wj.end());
            CHECK(oracle.word_matches_element(w, alg.mult(i, j)));
        }
    }
}

TEST_CASE("associativity full sweep on small algebras") {
    for (auto [N, n, mu, lambda] : {std::tuple<long, long, int, int>{1, 2, 1, -1},
                                    std::tuple<long, long, int, int>{1, 4, -1, 1},
                                    std::tuple<long, long, int, int>{2, 2, -1, -1}}) {
        SuzukiAlgebra alg(AlgebraParams{N, n, mu, lambda});
        const long d = alg.dim();
        for (long i = 0; i < d; ++i) {
            Element bi = Element::single(alg.basis(i), alg.field().one());
            for (long j = 0; j < d; ++j) {
                const Element& ij = alg.mult(i, j);
                Element bj = Element::single(alg.basis(j), alg.field().one());
                for (long k = 0; k < d; ++k) {
                    Element bk = Element::single(alg.basis(k), alg.field().one());
                    Element lhs = alg.multiply(ij, bk);
                    Element rhs = alg.multiply(bi, alg.mult(j, k));
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("chi words and elements") {
    AlgebraParams p{2, 3, 1, -1};
    SuzukiAlgebra alg(p);
    const CycField& f = alg.field();

    CHECK(chi_word(1, 1, 3) == Word{Gen::X11, Gen::X22, Gen::X11});
    CHECK(chi_word(2, 1, 2) == Word{Gen::X21, Gen::X12});

    // chi(1,1,1) = x11
    CHECK(alg.chi(1, 1, 1) == Element::single(BasisIndex{Family::E, 1, 0}, f.one()));
    // chi(2,1,n) = lambda * chi(1,2,n)
    CHECK(alg.chi(2, 1, p.n) == alg.chi(1, 2, p.n).scaled(f.from_long(p.lambda)));
    // chi(i,j,0) = 1
    CHECK(alg.chi(2, 2, 0) == alg.unit());
}

TEST_CASE("products of out-of-range indices are rejected") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    // an element built for a larger algebra addresses basis ranks that do
    // not exist here
    Element foreign = Element::single(BasisIndex{Family::O, 4, 1}, alg.field().one());
    CHECK_THROWS_AS(alg.multiply(foreign, alg.unit()), std::invalid_argument);
}

TEST_CASE("fold identities as table facts") {
    for (long N : {1L, 2L}) {
        for (int mu : {1, -1}) {
            AlgebraParams p{N, 4, mu, 1};
            SuzukiAlgebra alg(p);
            const CycField& f = alg.field();
            for (long k = 1; k <= 2 * N; ++k) {
                Element folded = alg.normalize(Word(2 * N + k, Gen::X11));
                CHECK(folded == alg.normalize(Word(k, Gen::X11)));
                Element folded_o = alg.normalize(Word(2 * N + k, Gen::X12));
                CHECK(folded_o == alg.normalize(Word(k, Gen::X12)).scaled(f.from_long(mu)));
            }
        }
    }
}

TEST_CASE("structure tables checksum is stable") {
    SuzukiAlgebra a(AlgebraParams{1, 2, 1, -1});
    SuzukiAlgebra b(AlgebraParams{1, 2, 1, -1});
    CHECK(tables_checksum(a) == tables_checksum(b));
    SuzukiAlgebra c(AlgebraParams{1, 2, -1, -1});
    CHECK(tables_checksum(a) != tables_checksum(c));
}

TEST_CASE("element power") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    Element x = alg.generator(Gen::X11);
    CHECK(alg.power(x, 0) == alg.unit());
    CHECK(alg.power(x, 1) == x);
    CHECK(alg.power(x, 3) == alg.normalize(Word(3, Gen::X11)));
}
