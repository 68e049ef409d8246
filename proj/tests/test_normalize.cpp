#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "suzuki/algebra.hpp"

using namespace suzuki;
using testsupport::RelationOracle;

namespace {

// All words over the four generators of exactly the given length.
void for_each_word(long len, const std::function<void(const Word&)>& fn) {
    Word w(len, Gen::X11);
    std::function<void(long)> rec = [&](long pos) {
        if (pos == len) {
            fn(w);
            return;
        }
        for (Gen g : {Gen::X11, Gen::X12, Gen::X21, Gen::X22}) {
            w[pos] = g;
            rec(pos + 1);
        }
    };
    rec(0);
}

Element single(const CycField& f, Family fam, long s, long t, long coeff = 1) {
    return Element::single(BasisIndex{fam, s, t}, f.from_long(coeff));
}

}  // namespace

TEST_CASE("basis rank round trip") {
    AlgebraParams p{2, 3, 1, -1};
    for (long r = 0; r < p.dim(); ++r) {
        BasisIndex b = basis_from_rank(r, p);
        CHECK(basis_rank(b, p) == r);
        CHECK(b.s >= 1);
        CHECK(b.s <= 2 * p.N);
        CHECK(b.t >= 0);
        CHECK(b.t <= p.n - 1);
    }
    CHECK(basis_label(BasisIndex{Family::E, 2, 1}) == "x11^2*chi22^1");
    CHECK(basis_label(BasisIndex{Family::O, 1, 0}) == "x12^1");
}

TEST_CASE("mixed parity words vanish") {
    AlgebraParams p{1, 2, 1, 1};
    CycField f(conductor_for(p.N));
    CHECK(normalize({Gen::X11, Gen::X12}, p, f).is_zero());
    CHECK(normalize({Gen::X21, Gen::X22, Gen::X21}, p, f).is_zero());
    CHECK(normalize({Gen::X11, Gen::X11, Gen::X21}, p, f).is_zero());
}

TEST_CASE("defining relation examples") {
    AlgebraParams p{1, 2, 1, 1};
    CycField f(conductor_for(p.N));

    // x22^2 = x11^2
    CHECK(normalize({Gen::X22, Gen::X22}, p, f) == single(f, Family::E, 2, 0));

    // empty word is the unit combination
    Element one = normalize({}, p, f);
    CHECK(one == unit_element(p, f));

    for (int lambda : {1, -1}) {
        for (long n : {2L, 3L, 4L}) {
            AlgebraParams q{1, n, 1, lambda};
            CycField fq(conductor_for(q.N));
            // chi21^n = lambda * chi12^n = lambda * x12 chi21^{n-1}
            Element lhs = normalize(chi_word(2, 1, n), q, fq);
            CHECK(lhs == single(fq, Family::O, 1, n - 1, lambda));
        }
    }
}

TEST_CASE("power folds against the oracle") {
    for (long N : {1L, 2L}) {
        for (long n : {2L, 3L}) {
            for (int mu : {1, -1}) {
                AlgebraParams p{N, n, mu, 1};
                CycField f(conductor_for(N));
                RelationOracle oracle(p);
                CAPTURE(N);
                CAPTURE(n);
                CAPTURE(mu);

                // x11^{2N+1} -> x11
                Word w(2 * N + 1, Gen::X11);
                Element e = normalize(w, p, f);
                CHECK(e == single(f, Family::E, 1, 0));
                CHECK(oracle.word_matches_element(w, e));

                for (long k = 1; k <= 2 * N; ++k) {
                    Word we(2 * N + k, Gen::X11);
                    Element fe = normalize(we, p, f);
                    CHECK(fe == normalize(Word(k, Gen::X11), p, f));
                    CHECK(oracle.word_matches_element(we, fe));

                    Word wo(2 * N + k, Gen::X12);
                    Element fo = normalize(wo, p, f);
                    CHECK(fo == normalize(Word(k, Gen::X12), p, f).scaled(f.from_long(mu)));
                    CHECK(oracle.word_matches_element(wo, fo));
                }
            }
        }
    }
}

TEST_CASE("chi tail folding example") {
    // chi22^{n+1} = x11^3 chi22^{n-2} when 3 <= 2N
    AlgebraParams p{2, 3, 1, 1};
    CycField f(conductor_for(p.N));
    Element e = normalize(chi_word(2, 2, p.n + 1), p, f);
    CHECK(e == single(f, Family::E, 3, p.n - 2));
    RelationOracle oracle(p);
    CHECK(oracle.word_matches_element(chi_word(2, 2, p.n + 1), e));
}

TEST_CASE("normalize is idempotent on basis words") {
    for (long N : {1L, 2L}) {
        for (long n : {2L, 3L, 4L, 5L}) {
            for (int mu : {1, -1}) {
                for (int lambda : {1, -1}) {
                    AlgebraParams p{N, n, mu, lambda};
                    CycField f(conductor_for(N));
                    for (long r = 0; r < p.dim(); ++r) {
                        BasisIndex b = basis_from_rank(r, p);
                        Element e = normalize(basis_word(b), p, f);
                        REQUIRE(e.term_count() == 1);
                        CHECK(e.coeff(b, f).is_one());
                    }
                }
            }
        }
    }
}

TEST_CASE("oracle finds the basis independent") {
    for (long N : {1L, 2L}) {
        for (long n : {2L, 3L, 4L}) {
            AlgebraParams p{N, n, -1, -1};
            RelationOracle oracle(p);
            CAPTURE(N);
            CAPTURE(n);
            CHECK(oracle.basis_words_independent());
            // corank of the relation span at this cap = algebra dimension
            CHECK(oracle.column_count() - oracle.relation_rank() == p.dim());
        }
    }
}

TEST_CASE("oracle equivalence sweep on short words") {
    // Lighter version of the acceptance sweep: all words of length <= 4
    // for four parameter points, mixed ones included.
    for (auto [N, n, mu, lambda] : {std::tuple<long, long, int, int>{1, 2, 1, 1},
                                    std::tuple<long, long, int, int>{1, 3, -1, 1},
                                    std::tuple<long, long, int, int>{2, 2, 1, -1},
                                    std::tuple<long, long, int, int>{2, 3, -1, -1}}) {
        AlgebraParams p{N, n, mu, lambda};
        CycField f(conductor_for(N));
        RelationOracle oracle(p);
        CAPTURE(N);
        CAPTURE(n);
        CAPTURE(mu);
        CAPTURE(lambda);
        long checked = 0;
        for (long len = 0; len <= 4; ++len) {
            for_each_word(len, [&](const Word& w) {
                Element e = normalize(w, p, f);
                REQUIRE(oracle.word_matches_element(w, e));
                ++checked;
            });
        }
        CHECK(checked == 1 + 4 + 16 + 64 + 256);
    }
}
