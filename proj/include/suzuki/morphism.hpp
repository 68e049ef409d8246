#pragma once

#include <optional>
#include <string>

#include "suzuki/coalgebra.hpp"

namespace suzuki {

// Linear endomorphism in basis coordinates; column j holds the image of
// basis element j. Equality is matrix equality.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(const SuzukiAlgebra& alg, std::vector<std::vector<CycNumber>> matrix);

    static LinearMap identity(const SuzukiAlgebra& alg);
    static LinearMap from_columns(const SuzukiAlgebra& alg, const std::vector<Element>& images);

    const SuzukiAlgebra& algebra() const { return *alg_; }
    long dim() const { return static_cast<long>(m_.size()); }
    const CycNumber& at(long row, long col) const { return m_[row][col]; }

    Element apply(const Element& e) const;
    Element apply_basis(long rank) const;
    Element column(long rank) const { return apply_basis(rank); }

    LinearMap compose(const LinearMap& g) const;  // (this o g)(x) = this(g(x))
    // Exact inverse; throws std::domain_error when singular.
    LinearMap inverse() const;
    bool is_bijective() const;

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

    // Canonical byte string of the matrix; used for dedup and sorting.
    std::string canonical_key() const;

private:
    const SuzukiAlgebra* alg_ = nullptr;
    std::vector<std::vector<CycNumber>> m_;  // m_[row][col]
};

struct GeneratorImages {
    Element x11, x12, x21, x22;
    const Element& of(Gen g) const {
        switch (g) {
            case Gen::X11: return x11;
            case Gen::X12: return x12;
            case Gen::X21: return x21;
            case Gen::X22: return x22;
        }
        return x11;
    }
};

struct WellDefinedness {
    bool ok = true;
    std::string violated_relation;  // name of the first defining relation that breaks
};

// Multiplicative extension of generator images along each basis word,
// with a well-definedness verdict: all defining relations of the
// presentation must map to equal elements.
std::pair<LinearMap, WellDefinedness> from_generator_images(const SuzukiAlgebra& alg,
                                                            const GeneratorImages& images);

struct MorphismReport {
    AxiomCheck is_algebra_map;
    AxiomCheck is_unital;
    AxiomCheck is_coalgebra_map;
    AxiomCheck is_counital;
    AxiomCheck commutes_with_antipode;
    AxiomCheck is_bijective;

    bool all_ok() const {
        return is_algebra_map.ok && is_unital.ok && is_coalgebra_map.ok && is_counital.ok &&
               commutes_with_antipode.ok && is_bijective.ok;
    }
    // "verdict: counterexample" for the first failed check, empty if all pass.
    std::string first_failure() const;
};

// Exhaustive verification that f is a Hopf algebra automorphism:
// f(xy) = f(x)f(y) on all basis pairs, f(1) = 1, (f ox f)Delta = Delta f,
// eps f = eps, S f = f S, and f invertible.
MorphismReport verify_hopf_morphism(const SuzukiAlgebra& alg, const HopfTables& hopf, const LinearMap& f);

// Comodule twist along a Hopf automorphism: coaction entries are replaced
// by psi^{-1}(entry) (KeyLemma convention rho^psi = (psi^{-1} ox id) rho).
Comodule twist_comodule(const LinearMap& psi, const Comodule& cm);

struct SupportTransport {
    long dim_before = 0;
    long dim_after = 0;
    bool forward_holds = false;   // Supp(V^psi) == psi(Supp V)
    bool backward_holds = false;  // Supp(V^psi) == psi^{-1}(Supp V)
    std::optional<std::pair<long, long>> matched_subcoalgebra;  // (s', t') with Supp(V^psi) = C_{s't'}
};

// Twists cm by psi and reports both orientations of the support identity
// plus which C_{s't'} the twisted support equals.
SupportTransport support_transport(const SuzukiAlgebra& alg, const HopfTables& hopf, const LinearMap& psi,
                                   const Comodule& cm);

}  // namespace suzuki
