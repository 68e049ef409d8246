#include "suzuki/hopf.hpp"

#include <sstream>
#include <tuple>

namespace suzuki {

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        if (!c.is_one()) os << "(" << c.str() << ")*";
        os << basis_label(k.first) << " (x) " << basis_label(k.second);
        first = false;
    }
    return os.str();
}

TensorElement tensor_of(const Element& x, const Element& y) {
    TensorElement out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) out.add_term(bx, by, cx * cy);
    return out;
}

TensorElement tensor_multiply(const SuzukiAlgebra& alg, const TensorElement& x, const TensorElement& y) {
    TensorElement out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const Element& left = alg.mult(kx.first, ky.first);
            const Element& right = alg.mult(kx.second, ky.second);
            if (left.is_zero() || right.is_zero()) continue;
            CycNumber c = cx * cy;
            for (const auto& [bl, cl] : left.terms())
                for (const auto& [br, cr] : right.terms()) out.add_term(bl, br, cl * cr * c);
        }
    }
    return out;
}

HopfTables::HopfTables(const SuzukiAlgebra& alg) : alg_(&alg) {
    const AlgebraParams& p = alg.params();
    const CycField& f = alg.field();
    const long d = alg.dim();
    coproduct_.resize(d);
    counit_.resize(d, f.zero());
    antipode_.resize(d);

    for (long i = 0; i < d; ++i) {
        BasisIndex b = alg.basis(i);

        // Delta(x11^s chi22^t) = x11^s chi22^t (x) x11^s chi22^t + x12^s chi21^t (x) x21^s chi12^t
        // Delta(x12^s chi21^t) = x11^s chi22^t (x) x12^s chi21^t + x12^s chi21^t (x) x22^s chi11^t
        BasisIndex diag_e{Family::E, b.s, b.t};
        BasisIndex diag_o{Family::O, b.s, b.t};
        Word right_leg;
        Gen power = (b.family == Family::E) ? Gen::X21 : Gen::X22;
        for (long k = 0; k < b.s; ++k) right_leg.push_back(power);
        Word tail = (b.family == Family::E) ? chi_word(1, 2, b.t) : chi_word(1, 1, b.t);
        right_leg.insert(right_leg.end(), tail.begin(), tail.end());
        Element leg = alg.normalize(right_leg);

        TensorElement cop;
        if (b.family == Family::E) {
            cop.add_term(diag_e, diag_e, f.one());
            for (const auto& [bl, cl] : leg.terms()) cop.add_term(diag_o, bl, cl);
        } else {
            cop.add_term(diag_e, diag_o, f.one());
            for (const auto& [bl, cl] : leg.terms()) cop.add_term(diag_o, bl, cl);
        }
        coproduct_[i] = std::move(cop);

        // eps(x11)=eps(x22)=1, eps(x12)=eps(x21)=0, extended multiplicatively.
        counit_[i] = (b.family == Family::E) ? f.one() : f.zero();

        // S(x_{ij}) = x_{ji}^{4N-1}, applied to the reversed word.
        Word w = basis_word(b);
        Word image;
        image.reserve(w.size() * (4 * p.N - 1));
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            Gen tr = transpose(*it);
            for (long k = 0; k < 4 * p.N - 1; ++k) image.push_back(tr);
        }
        antipode_[i] = alg.normalize(image);
    }
}

TensorElement HopfTables::coproduct(const Element& e) const {
    TensorElement out;
    for (const auto& [b, c] : e.terms()) {
        const TensorElement& cb = coproduct(b);
        for (const auto& [k, v] : cb.terms()) out.add_term(k.first, k.second, v * c);
    }
    return out;
}

CycNumber HopfTables::counit(const Element& e) const {
    CycNumber out = alg_->field().zero();
    for (const auto& [b, c] : e.terms()) out += counit(b) * c;
    return out;
}

Element HopfTables::antipode(const Element& e) const {
    Element out;
    for (const auto& [b, c] : e.terms()) out += antipode(b).scaled(c);
    return out;
}

namespace {

using Triple = std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, CycNumber>;

void triple_add(Triple& m, const BasisIndex& a, const BasisIndex& b, const BasisIndex& c,
                const CycNumber& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

AxiomReport verify_hopf(const SuzukiAlgebra& alg, const HopfTables& hopf) {
    AxiomReport rep;
    const long d = alg.dim();
    const CycField& f = alg.field();
    const Element& one = alg.unit();

    // Associativity over all basis triples. Table entries are single
    // monomials, so both sides stay tiny.
    for (long i = 0; i < d && rep.associativity.ok; ++i) {
        for (long j = 0; j < d && rep.associativity.ok; ++j) {
            const Element& ij = alg.mult(i, j);
            for (long k = 0; k < d; ++k) {
                Element lhs;
                for (const auto& [b, c] : ij.terms()) lhs += alg.mult(alg.rank_of(b), k).scaled(c);
                Element rhs;
                const Element& jk = alg.mult(j, k);
                for (const auto& [b, c] : jk.terms()) rhs += alg.mult(i, alg.rank_of(b)).scaled(c);
                if (lhs != rhs) {
                    rep.associativity.fail("(" + basis_label(alg.basis(i)) + ", " + basis_label(alg.basis(j)) +
                                           ", " + basis_label(alg.basis(k)) + ")");
                    break;
                }
            }
        }
    }

    for (long i = 0; i < d; ++i) {
        BasisIndex b = alg.basis(i);
        Element be = Element::single(b, f.one());
        if (alg.multiply(one, be) != be || alg.multiply(be, one) != be) {
            rep.unit_law.fail(basis_label(b));
            break;
        }
    }

    // Coassociativity: (Delta ox id)Delta = (id ox Delta)Delta on the basis.
    for (long i = 0; i < d; ++i) {
        BasisIndex b = alg.basis(i);
        Triple lhs, rhs;
        for (const auto& [k, c] : hopf.coproduct(b).terms()) {
            for (const auto& [k2, c2] : hopf.coproduct(k.first).terms())
                triple_add(lhs, k2.first, k2.second, k.second, c * c2);
            for (const auto& [k2, c2] : hopf.coproduct(k.second).terms())
                triple_add(rhs, k.first, k2.first, k2.second, c * c2);
        }
        if (lhs != rhs) {
            rep.coassociativity.fail(basis_label(b));
            break;
        }
    }

    // Counit: (eps ox id)Delta(b) = b = (id ox eps)Delta(b); also eps(1) = 1.
    for (long i = 0; i < d; ++i) {
        BasisIndex b = alg.basis(i);
        Element be = Element::single(b, f.one());
        Element left, right;
        for (const auto& [k, c] : hopf.coproduct(b).terms()) {
            left.add_term(k.second, c * hopf.counit(k.first));
            right.add_term(k.first, c * hopf.counit(k.second));
        }
        if (left != be || right != be) {
            rep.counit_law.fail(basis_label(b));
            break;
        }
    }
    if (rep.counit_law.ok && !hopf.counit(one).is_one()) rep.counit_law.fail("eps(1) != 1");

    // Delta is an algebra map: Delta(xy) = Delta(x)Delta(y); Delta(1) = 1 (x) 1.
    for (long i = 0; i < d && rep.coproduct_multiplicative.ok; ++i) {
        for (long j = 0; j < d; ++j) {
            TensorElement lhs = hopf.coproduct(alg.mult(i, j));
            TensorElement rhs =
                tensor_multiply(alg, hopf.coproduct(alg.basis(i)), hopf.coproduct(alg.basis(j)));
            if (lhs != rhs) {
                rep.coproduct_multiplicative.fail("(" + basis_label(alg.basis(i)) + ", " +
                                                  basis_label(alg.basis(j)) + ")");
                break;
            }
        }
    }
    if (rep.coproduct_multiplicative.ok && hopf.coproduct(one) != tensor_of(one, one))
        rep.coproduct_multiplicative.fail("Delta(1) != 1 (x) 1");

    // eps is an algebra map.
    for (long i = 0; i < d && rep.counit_multiplicative.ok; ++i) {
        for (long j = 0; j < d; ++j) {
            CycNumber lhs = hopf.counit(alg.mult(i, j));
            CycNumber rhs = hopf.counit(alg.basis(i)) * hopf.counit(alg.basis(j));
            if (lhs != rhs) {
                rep.counit_multiplicative.fail("(" + basis_label(alg.basis(i)) + ", " +
                                               basis_label(alg.basis(j)) + ")");
                break;
            }
        }
    }

    // Antipode: m(S ox id)Delta(b) = eps(b) 1 = m(id ox S)Delta(b); S(1) = 1.
    for (long i = 0; i < d; ++i) {
        BasisIndex b = alg.basis(i);
        Element expected = one.scaled(hopf.counit(b));
        Element left, right;
        for (const auto& [k, c] : hopf.coproduct(b).terms()) {
            left += alg.multiply(hopf.antipode(k.first), Element::single(k.second, c));
            right += alg.multiply(Element::single(k.first, c), hopf.antipode(k.second));
        }
        if (rep.antipode_left.ok && left != expected) rep.antipode_left.fail(basis_label(b));
        if (rep.antipode_right.ok && right != expected) rep.antipode_right.fail(basis_label(b));
        if (!rep.antipode_left.ok && !rep.antipode_right.ok) break;
    }
    if (rep.antipode_left.ok && hopf.antipode(one) != one) rep.antipode_left.fail("S(1) != 1");

    return rep;
}

}  // namespace suzuki
