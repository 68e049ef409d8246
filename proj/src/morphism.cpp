#include "suzuki/morphism.hpp"

#include <sstream>

#include "suzuki/linalg.hpp"

namespace suzuki {

LinearMap::LinearMap(const SuzukiAlgebra& alg, std::vector<std::vector<CycNumber>> matrix)
    : alg_(&alg), m_(std::move(matrix)) {
    const size_t d = alg.dim();
    if (m_.size() != d) throw std::invalid_argument("LinearMap: wrong matrix size");
    for (const auto& row : m_)
        if (row.size() != d) throw std::invalid_argument("LinearMap: ragged matrix");
}

LinearMap LinearMap::identity(const SuzukiAlgebra& alg) {
    const long d = alg.dim();
    const CycField& f = alg.field();
    std::vector<std::vector<CycNumber>> m(d, std::vector<CycNumber>(d, f.zero()));
    for (long i = 0; i < d; ++i) m[i][i] = f.one();
    return LinearMap(alg, std::move(m));
}

LinearMap LinearMap::from_columns(const SuzukiAlgebra& alg, const std::vector<Element>& images) {
    const long d = alg.dim();
    if (static_cast<long>(images.size()) != d)
        throw std::invalid_argument("LinearMap: need one image per basis element");
    const CycField& f = alg.field();
    std::vector<std::vector<CycNumber>> m(d, std::vector<CycNumber>(d, f.zero()));
    for (long j = 0; j < d; ++j)
        for (const auto& [b, c] : images[j].terms()) m[basis_rank(b, alg.params())][j] = c;
    return LinearMap(alg, std::move(m));
}

Element LinearMap::apply_basis(long rank) const {
    Element out;
    const long d = dim();
    for (long r = 0; r < d; ++r) out.add_term(alg_->basis(r), m_[r][rank]);
    return out;
}

Element LinearMap::apply(const Element& e) const {
    Element out;
    for (const auto& [b, c] : e.terms()) {
        long j = alg_->rank_of(b);
        for (long r = 0; r < dim(); ++r) out.add_term(alg_->basis(r), m_[r][j] * c);
    }
    return out;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (alg_ != g.alg_ && alg_->params() != g.alg_->params())
        throw std::invalid_argument("compose: maps over different algebras");
    const long d = dim();
    const CycField& f = alg_->field();
    std::vector<std::vector<CycNumber>> out(d, std::vector<CycNumber>(d, f.zero()));
    for (long i = 0; i < d; ++i) {
        for (long k = 0; k < d; ++k) {
            if (m_[i][k].is_zero()) continue;
            for (long j = 0; j < d; ++j) {
                if (g.m_[k][j].is_zero()) continue;
                out[i][j] += m_[i][k] * g.m_[k][j];
            }
        }
    }
    return LinearMap(*alg_, std::move(out));
}

LinearMap LinearMap::inverse() const {
    const long d = dim();
    const CycField& f = alg_->field();
    std::vector<std::vector<CycNumber>> a = m_;
    std::vector<std::vector<CycNumber>> inv(d, std::vector<CycNumber>(d, f.zero()));
    for (long i = 0; i < d; ++i) inv[i][i] = f.one();
    for (long c = 0; c < d; ++c) {
        long pivot = -1;
        for (long r = c; r < d; ++r) {
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("LinearMap::inverse: singular matrix");
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        CycNumber pinv = a[c][c].inverse();
        for (long k = 0; k < d; ++k) {
            a[c][k] *= pinv;
            inv[c][k] *= pinv;
        }
        for (long r = 0; r < d; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            CycNumber factor = a[r][c];
            for (long k = 0; k < d; ++k) {
                a[r][k] -= factor * a[c][k];
                inv[r][k] -= factor * inv[c][k];
            }
        }
    }
    return LinearMap(*alg_, std::move(inv));
}

bool LinearMap::is_bijective() const {
    return rank_bareiss(m_) == dim();
}

std::string LinearMap::canonical_key() const {
    std::ostringstream os;
    const long d = dim();
    for (long j = 0; j < d; ++j) {
        for (long r = 0; r < d; ++r) {
            if (m_[r][j].is_zero()) continue;
            os << j << ":" << r << ":" << m_[r][j].str() << ";";
        }
    }
    return os.str();
}

std::pair<LinearMap, WellDefinedness> from_generator_images(const SuzukiAlgebra& alg,
                                                            const GeneratorImages& images) {
    const AlgebraParams& p = alg.params();
    const long d = alg.dim();

    auto word_image = [&](const Word& w) {
        Element acc = alg.unit();
        for (Gen g : w) acc = alg.multiply(acc, images.of(g));
        return acc;
    };

    std::vector<Element> cols(d);
    for (long j = 0; j < d; ++j) cols[j] = word_image(basis_word(alg.basis(j)));
    LinearMap map = LinearMap::from_columns(alg, cols);

    WellDefinedness wd;
    auto check = [&](const Element& lhs, const Element& rhs, const std::string& name) {
        if (wd.ok && lhs != rhs) {
            wd.ok = false;
            wd.violated_relation = name;
        }
    };

    check(word_image({Gen::X11, Gen::X11}), word_image({Gen::X22, Gen::X22}), "x11^2 = x22^2");
    check(word_image({Gen::X12, Gen::X12}), word_image({Gen::X21, Gen::X21}), "x12^2 = x21^2");
    check(word_image(chi_word(1, 1, p.n)), word_image(chi_word(2, 2, p.n)), "chi11^n = chi22^n");
    check(word_image(chi_word(2, 1, p.n)),
          word_image(chi_word(1, 2, p.n)).scaled(alg.field().from_long(p.lambda)),
          "chi21^n = lambda*chi12^n");
    check(word_image(Word(2 * p.N, Gen::X11)) +
              word_image(Word(2 * p.N, Gen::X12)).scaled(alg.field().from_long(p.mu)),
          alg.unit(), "x11^{2N} + mu*x12^{2N} = 1");
    static const std::pair<Gen, Gen> mixed[] = {
        {Gen::X11, Gen::X12}, {Gen::X11, Gen::X21}, {Gen::X22, Gen::X12}, {Gen::X22, Gen::X21},
        {Gen::X12, Gen::X11}, {Gen::X12, Gen::X22}, {Gen::X21, Gen::X11}, {Gen::X21, Gen::X22}};
    for (const auto& [a, b] : mixed) {
        check(word_image({a, b}), Element{},
              std::string(gen_name(a)) + "*" + gen_name(b) + " = 0");
    }
    return {std::move(map), wd};
}

std::string MorphismReport::first_failure() const {
    auto named = [](const char* name, const AxiomCheck& c) -> std::string {
        return std::string(name) + (c.counterexample.empty() ? "" : ": " + c.counterexample);
    };
    if (!is_algebra_map.ok) return named("is_algebra_map", is_algebra_map);
    if (!is_unital.ok) return named("is_unital", is_unital);
    if (!is_coalgebra_map.ok) return named("is_coalgebra_map", is_coalgebra_map);
    if (!is_counital.ok) return named("is_counital", is_counital);
    if (!commutes_with_antipode.ok) return named("commutes_with_antipode", commutes_with_antipode);
    if (!is_bijective.ok) return named("is_bijective", is_bijective);
    return "";
}

MorphismReport verify_hopf_morphism(const SuzukiAlgebra& alg, const HopfTables& hopf, const LinearMap& f) {
    MorphismReport rep;
    const long d = alg.dim();

    std::vector<Element> img(d);
    for (long i = 0; i < d; ++i) img[i] = f.apply_basis(i);

    for (long i = 0; i < d && rep.is_algebra_map.ok; ++i) {
        for (long j = 0; j < d; ++j) {
            Element lhs = f.apply(alg.mult(i, j));
            Element rhs = alg.multiply(img[i], img[j]);
            if (lhs != rhs) {
                rep.is_algebra_map.fail("(" + basis_label(alg.basis(i)) + ", " + basis_label(alg.basis(j)) +
                                        ")");
                break;
            }
        }
    }

    if (f.apply(alg.unit()) != alg.unit()) rep.is_unital.fail("f(1) != 1");

    for (long i = 0; i < d; ++i) {
        TensorElement lhs = hopf.coproduct(img[i]);
        TensorElement rhs;
        for (const auto& [k, c] : hopf.coproduct(alg.basis(i)).terms())
            rhs += tensor_of(f.apply_basis(alg.rank_of(k.first)).scaled(c),
                             f.apply_basis(alg.rank_of(k.second)));
        if (lhs != rhs) {
            rep.is_coalgebra_map.fail(basis_label(alg.basis(i)));
            break;
        }
    }

    for (long i = 0; i < d; ++i) {
        if (hopf.counit(img[i]) != hopf.counit(alg.basis(i))) {
            rep.is_counital.fail(basis_label(alg.basis(i)));
            break;
        }
    }

    for (long i = 0; i < d; ++i) {
        if (f.apply(hopf.antipode(alg.basis(i))) != hopf.antipode(img[i])) {
            rep.commutes_with_antipode.fail(basis_label(alg.basis(i)));
            break;
        }
    }

    if (!f.is_bijective()) rep.is_bijective.fail("matrix is singular");
    return rep;
}

Comodule twist_comodule(const LinearMap& psi, const Comodule& cm) {
    LinearMap inv = psi.inverse();
    Comodule out;
    out.name = cm.name + "^psi";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.c[i][j] = inv.apply(cm.c[i][j]);
    return out;
}

SupportTransport support_transport(const SuzukiAlgebra& alg, const HopfTables& hopf, const LinearMap& psi,
                                   const Comodule& cm) {
    SupportTransport rep;
    Comodule twisted = twist_comodule(psi, cm);
    std::string why;
    if (!comodule_axioms_hold(alg, hopf, twisted, &why))
        throw std::logic_error("support_transport: twisted comodule fails axioms (" + why + ")");

    Support before = support(alg, cm);
    Support after = support(alg, twisted);
    rep.dim_before = before.dimension;
    rep.dim_after = after.dimension;

    LinearMap inv = psi.inverse();
    std::vector<Element> fwd, bwd;
    for (const auto& v : before.spanning) {
        fwd.push_back(psi.apply(v));
        bwd.push_back(inv.apply(v));
    }
    rep.forward_holds = spans_equal(alg, after.spanning, fwd);
    rep.backward_holds = spans_equal(alg, after.spanning, bwd);
    rep.matched_subcoalgebra = match_subcoalgebra(alg, after.spanning);
    return rep;
}

}  // namespace suzuki
