#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "suzuki/hopf.hpp"

using namespace suzuki;

namespace {

TensorElement simple_tensor(const CycField& f, BasisIndex l, BasisIndex r) {
    TensorElement t;
    t.add_term(l, r, f.one());
    return t;
}

}  // namespace

TEST_CASE("coproduct closed forms on generators") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    HopfTables hopf(alg);
    const CycField& f = alg.field();

    // Delta(x11) = x11 (x) x11 + x12 (x) x21; the right leg x21
    // normalizes to mu * x12^{2N} chi21 = (O,2,1)
    TensorElement dx11 = hopf.coproduct(BasisIndex{Family::E, 1, 0});
    TensorElement expect;
    expect.add_term(BasisIndex{Family::E, 1, 0}, BasisIndex{Family::E, 1, 0}, f.one());
    expect.add_term(BasisIndex{Family::O, 1, 0}, BasisIndex{Family::O, 2, 1}, f.one());
    CHECK(dx11 == expect);

    // Delta(x12) = x11 (x) x12 + x12 (x) x22, with x22 = (E,2,1) after the lift
    TensorElement dx12 = hopf.coproduct(BasisIndex{Family::O, 1, 0});
    TensorElement expect2;
    expect2.add_term(BasisIndex{Family::E, 1, 0}, BasisIndex{Family::O, 1, 0}, f.one());
    expect2.add_term(BasisIndex{Family::O, 1, 0}, BasisIndex{Family::E, 2, 1}, f.one());
    CHECK(dx12 == expect2);

    // Delta(x11^2) = x11^2 (x) x11^2 + x12^2 (x) x12^2 (since x21^2 = x12^2)
    TensorElement dsq = hopf.coproduct(BasisIndex{Family::E, 2, 0});
    TensorElement expect3;
    expect3.add_term(BasisIndex{Family::E, 2, 0}, BasisIndex{Family::E, 2, 0}, f.one());
    expect3.add_term(BasisIndex{Family::O, 2, 0}, BasisIndex{Family::O, 2, 0}, f.one());
    CHECK(dsq == expect3);
}

TEST_CASE("counit values") {
    SuzukiAlgebra alg(AlgebraParams{2, 3, -1, 1});
    HopfTables hopf(alg);
    CHECK(hopf.counit(BasisIndex{Family::E, 1, 0}).is_one());
    CHECK(hopf.counit(BasisIndex{Family::O, 1, 0}).is_zero());
    CHECK(hopf.counit(BasisIndex{Family::E, 3, 2}).is_one());
    CHECK(hopf.counit(alg.unit()).is_one());
}

TEST_CASE("antipode on generators at N=1") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    HopfTables hopf(alg);
    const CycField& f = alg.field();
    // S(x11) = x11^3
    CHECK(hopf.antipode(BasisIndex{Family::E, 1, 0}) ==
          alg.normalize(Word(3, Gen::X11)));
    // S(x12) = x21^3 = x12^2 chi21 -> (O,2,1)
    CHECK(hopf.antipode(BasisIndex{Family::O, 1, 0}) ==
          Element::single(BasisIndex{Family::O, 2, 1}, f.one()));
    // S(1) = 1
    CHECK(hopf.antipode(alg.unit()) == alg.unit());
}

TEST_CASE("antipode images agree with the oracle on short words") {
    // S maps each basis word to the reversed transposed word of
    // x_{ji}^{4N-1} blocks; check the normalized table entries whose raw
    // images fit inside the oracle cap. (Uniqueness of the antipode plus
    // the verified antipode laws covers the rest.)
    AlgebraParams p{1, 3, -1, -1};
    SuzukiAlgebra alg(p);
    HopfTables hopf(alg);
    testsupport::RelationOracle oracle(p);
    long checked = 0;
    for (long i = 0; i < alg.dim(); ++i) {
        Word w = basis_word(alg.basis(i));
        if (static_cast<long>(w.size()) * (4 * p.N - 1) > oracle.max_len()) continue;
        Word image;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            image.insert(image.end(), 4 * p.N - 1, transpose(*it));
        CHECK(oracle.word_matches_element(image, hopf.antipode(alg.basis(i))));
        ++checked;
    }
    CHECK(checked >= 4);
}

TEST_CASE("full axiom report on two parameter points") {
    for (auto [N, n, mu, lambda] : {std::tuple<long, long, int, int>{1, 2, 1, 1},
                                    std::tuple<long, long, int, int>{2, 3, -1, -1}}) {
        SuzukiAlgebra alg(AlgebraParams{N, n, mu, lambda});
        HopfTables hopf(alg);
        AxiomReport rep = verify_hopf(alg, hopf);
        CAPTURE(N);
        CAPTURE(n);
        CAPTURE(mu);
        CAPTURE(lambda);
        CHECK(rep.associativity.ok);
        CHECK(rep.unit_law.ok);
        CHECK(rep.coassociativity.ok);
        CHECK(rep.counit_law.ok);
        CHECK(rep.coproduct_multiplicative.ok);
        CHECK(rep.counit_multiplicative.ok);
        CHECK(rep.antipode_left.ok);
        CHECK(rep.antipode_right.ok);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("corrupted table is caught with a counterexample") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, 1, 1});
    // flip one nonzero product by -1
    long ci = -1, cj = -1;
    for (long i = 0; i < alg.dim() && ci < 0; ++i)
        for (long j = 0; j < alg.dim(); ++j)
            if (!alg.mult(i, j).is_zero()) {
                ci = i;
                cj = j;
                break;
            }
    REQUIRE(ci >= 0);
    SuzukiAlgebra bad = alg.corrupted(ci, cj, -alg.field().one());
    HopfTables hopf(bad);
    AxiomReport rep = verify_hopf(bad, hopf);
    CHECK_FALSE(rep.all_ok());
    // at least one failing verdict carries a counterexample
    bool have_counterexample = false;
    for (const AxiomCheck* c : {&rep.associativity, &rep.unit_law, &rep.coassociativity, &rep.counit_law,
                                &rep.coproduct_multiplicative, &rep.counit_multiplicative,
                                &rep.antipode_left, &rep.antipode_right})
        if (!c->ok && !c->counterexample.empty()) have_counterexample = true;
    CHECK(have_counterexample);
}

TEST_CASE("counit and coassociativity identities on every basis element") {
    SuzukiAlgebra alg(AlgebraParams{1, 5, 1, -1});
    HopfTables hopf(alg);
    const CycField& f = alg.field();
    for (long i = 0; i < alg.dim(); ++i) {
        BasisIndex b = alg.basis(i);
        Element be = Element::single(b, f.one());
        Element left, right;
        for (const auto& [k, c] : hopf.coproduct(b).terms()) {
            left.add_term(k.second, c * hopf.counit(k.first));
            right.add_term(k.first, c * hopf.counit(k.second));
        }
        CHECK(left == be);
        CHECK(right == be);
    }
    CHECK(hopf.coproduct(alg.unit()) == tensor_of(alg.unit(), alg.unit()));
}

TEST_CASE("tensor multiply matches componentwise products") {
    SuzukiAlgebra alg(AlgebraParams{1, 2, -1, 1});
    const CycField& f = alg.field();
    BasisIndex a{Family::E, 1, 0}, b{Family::E, 2, 0}, c{Family::O, 1, 1};
    TensorElement t1 = simple_tensor(f, a, b);
    TensorElement t2 = simple_tensor(f, b, c);
    TensorElement prod = tensor_multiply(alg, t1, t2);
    TensorElement expect = tensor_of(alg.mult(a, b), alg.mult(b, c));
    CHECK(prod == expect);
}
