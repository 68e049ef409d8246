#pragma once

#include <string>
#include <utility>

#include "suzuki/algebra.hpp"

namespace suzuki {

// Sparse element of the tensor square, indexed by pairs of basis labels.
class TensorElement {
public:
    using Key = std::pair<BasisIndex, BasisIndex>;

    TensorElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, CycNumber>& terms() const { return terms_; }

    TensorElement& add_term(const BasisIndex& l, const BasisIndex& r, const CycNumber& c) {
        if (c.is_zero()) return *this;
        Key k{l, r};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Key, CycNumber> terms_;
};

TensorElement tensor_of(const Element& x, const Element& y);
TensorElement tensor_multiply(const SuzukiAlgebra& alg, const TensorElement& x, const TensorElement& y);

// Coproduct, counit and antipode tabulated on the basis. The coproduct is
// populated from the closed form on basis monomials; the antipode extends
// x_{ij} -> x_{ji}^{4N-1} anti-multiplicatively along each basis word.
class HopfTables {
public:
    explicit HopfTables(const SuzukiAlgebra& alg);

    const SuzukiAlgebra& algebra() const { return *alg_; }

    const TensorElement& coproduct(const BasisIndex& b) const { return coproduct_[alg_->rank_of(b)]; }
    const CycNumber& counit(const BasisIndex& b) const { return counit_[alg_->rank_of(b)]; }
    const Element& antipode(const BasisIndex& b) const { return antipode_[alg_->rank_of(b)]; }

    TensorElement coproduct(const Element& e) const;
    CycNumber counit(const Element& e) const;
    Element antipode(const Element& e) const;

private:
    const SuzukiAlgebra* alg_;
    std::vector<TensorElement> coproduct_;
    std::vector<CycNumber> counit_;
    std::vector<Element> antipode_;
};

struct AxiomCheck {
    bool ok = true;
    std::string counterexample;  // first failure, empty when ok

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            counterexample = why;
        }
    }
};

struct AxiomReport {
    AxiomCheck associativity;
    AxiomCheck unit_law;
    AxiomCheck coassociativity;
    AxiomCheck counit_law;
    AxiomCheck coproduct_multiplicative;
    AxiomCheck counit_multiplicative;
    AxiomCheck antipode_left;
    AxiomCheck antipode_right;

    bool all_ok() const {
        return associativity.ok && unit_law.ok && coassociativity.ok && counit_law.ok &&
               coproduct_multiplicative.ok && counit_multiplicative.ok && antipode_left.ok &&
               antipode_right.ok;
    }
};

// Exhaustive verification of every Hopf axiom over all basis tuples:
// associativity and unit for the product, coassociativity and counit for
// the coproduct, Delta and epsilon as algebra maps, and both antipode
// identities m(S ox id)Delta = u eps = m(id ox S)Delta.
AxiomReport verify_hopf(const SuzukiAlgebra& alg, const HopfTables& hopf);

}  // namespace suzuki
