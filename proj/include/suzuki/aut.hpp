#pragma once

#include "suzuki/morphism.hpp"

namespace suzuki {

enum class AutVariant { Psi, Phi, Gamma };

// Symbolic name of one candidate automorphism: Psi/Phi carry (s, t) and a
// root-of-unity parameter xi; Gamma carries signs theta1, theta2 and s
// (with t = 1 and n = 2 implicit).
struct AutDescriptor {
    AutVariant variant = AutVariant::Psi;
    long s = 1;
    long t = 1;
    CycNumber xi;        // Psi/Phi only; nonzero
    int theta1 = 1;      // Gamma only
    int theta2 = 1;      // Gamma only

    std::string str() const;  // "psi:1:1:1", "phi:2:3:z^1", "gamma:+1:-1:2"
    static AutDescriptor parse(const CycField& f, std::string_view text);
};

LinearMap make_psi(const SuzukiAlgebra& alg, long s, long t, const CycNumber& xi);
LinearMap make_phi(const SuzukiAlgebra& alg, long s, long t, const CycNumber& xi);
LinearMap make_gamma(const SuzukiAlgebra& alg, int theta1, int theta2, long s);
LinearMap make_map(const SuzukiAlgebra& alg, const AutDescriptor& d);

// Generator images of the named family member, before extension.
GeneratorImages family_images(const SuzukiAlgebra& alg, const AutDescriptor& d);

// The side conditions stated by the classification: t odd with the gcd
// and root-of-unity order constraints for Psi/Phi (split on t = n/2),
// and n = 2, mu = lambda = +1, gcd(2s+1, N) = 1 for Gamma.
bool conditions_hold(const AutDescriptor& d, const AlgebraParams& p, const CycField& f);

struct AnsatzCoefficients {
    CycNumber a1, a2, a3, b1, b2, b3, d1, d2, d3, e1, e2, e3;
    long s = 1;
    long t = 1;
};

struct ResidualClause {
    std::string label;  // e.g. "eq3.2"
    CycNumber value;    // satisfied iff exactly zero
};

struct ResidualVector {
    std::vector<ResidualClause> clauses;
    std::string case_note;  // which case selectors applied
    bool all_zero() const {
        for (const auto& c : clauses)
            if (!c.value.is_zero()) return false;
        return true;
    }
    std::string first_nonzero() const {
        for (const auto& c : clauses)
            if (!c.value.is_zero()) return c.label;
        return "";
    }
};

// Exact evaluation of every constraint clause applicable to the case
// (t parity, t = n/2 or not); residual = LHS - RHS per clause.
ResidualVector residuals(const AnsatzCoefficients& c, const AlgebraParams& p, const CycField& f);

// Reads the 12 ansatz coefficients back from a linear map whose generator
// images lie in the C_st span; nullopt when the images leave the span or
// break the (1-a1)/(-d1) coupling of the ansatz shape.
std::optional<AnsatzCoefficients> extract_ansatz(const SuzukiAlgebra& alg, const LinearMap& f, long s,
                                                 long t);
// Finds (s, t) from the support of f(x11), if it lies in some C_st.
std::optional<std::pair<long, long>> detect_ansatz_st(const SuzukiAlgebra& alg, const LinearMap& f);

struct CandidateOutcome {
    AutDescriptor desc;
    bool conditions = false;
    WellDefinedness wd;
    MorphismReport report;
    bool verified = false;
    std::string first_failure;  // well-definedness or axiom failure
    long element_index = -1;    // index into AutEnumeration::verified_maps
};

struct Discrepancy {
    std::string kind;  // conditions_pass_verification_fails | verified_outside_conditions | ...
    std::string descriptor;
    std::string detail;
};

struct XiSummary {
    long t = 0;
    std::vector<std::string> stated;    // theorem's xi set for this t
    std::vector<std::string> verified;  // xi that produced verified maps for some s
};

struct AutEnumeration {
    std::vector<CandidateOutcome> candidates;
    std::vector<LinearMap> verified_maps;    // deduplicated by matrix equality, first-seen order
    std::vector<std::vector<long>> aliases;  // verified map -> candidate indices mapping to it
    std::vector<Discrepancy> discrepancies;
    long classified_count = 0;  // candidates whose conditions hold
    std::vector<XiSummary> xi_summaries;

    bool consistent() const { return discrepancies.empty(); }
};

// Instantiates and fully verifies every family candidate over xi in
// G_{2N} (all t in 1..n-1, both Psi and Phi, plus all Gamma when n = 2);
// records condition/verification mismatches as discrepancies.
AutEnumeration enumerate_automorphisms(const SuzukiAlgebra& alg, const HopfTables& hopf);

struct GroupTable {
    std::vector<LinearMap> elements;
    std::vector<std::vector<long>> table;  // table[i][j] = index of elements[i] o elements[j]
    long order = 0;
    long identity_index = -1;
    std::vector<long> inverse_of;
    bool closed = false;
    std::string failure;  // first missing composite / missing identity or inverse
};

GroupTable group_table(const SuzukiAlgebra& alg, const std::vector<LinearMap>& maps);

// Structured report for a closure failure: for each missing composite
// (up to a small cap), whether it verifies as a Hopf automorphism, which
// C_st its x11-image lands in, and its ansatz coefficients when readable.
// These entries make an incompleteness of the classified list reproducible.
std::vector<Discrepancy> closure_discrepancies(const SuzukiAlgebra& alg, const HopfTables& hopf,
                                               const AutEnumeration& e, const GroupTable& g);

struct GroupInvariants {
    long order = 0;
    bool abelian = false;
    std::vector<long> element_orders;  // sorted ascending
    long center_size = 0;
    long squares_count = 0;       // size of { g^2 }
    std::string identification;   // catalog name for |G| <= 16, empty otherwise
};

GroupInvariants group_invariants(const GroupTable& g);

// Search grids over the coefficient field.
std::vector<CycNumber> search_grid(const SuzukiAlgebra& alg, const std::string& preset);  // "default", "rationals", "roots"

struct SearchHit {
    long s = 1;
    long t = 1;
    AnsatzCoefficients coeffs;
    LinearMap map;
};

struct SearchResult {
    std::vector<SearchHit> hits;  // deduplicated by matrix, sorted by canonical key
    unsigned long long residual_candidates = 0;  // assignments that survived the residual system
    unsigned long long verified_count = 0;
};

// For every (s, t) and every grid assignment of the 12 ansatz
// coefficients that survives the residual system, instantiate the map and
// fully verify it; returns all verified automorphisms found.
SearchResult exhaustive_search(const SuzukiAlgebra& alg, const HopfTables& hopf,
                               const std::vector<CycNumber>& grid);

}  // namespace suzuki
