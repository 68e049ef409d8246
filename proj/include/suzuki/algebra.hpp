#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/cyclotomic.hpp"

namespace suzuki {

// Generators x_{ij}. parity(x_{ij}) = (i+j) mod 2; any product of two
// adjacent letters with different parity is zero in the algebra.
enum class Gen : std::uint8_t { X11 = 0, X12 = 1, X21 = 2, X22 = 3 };

inline int parity(Gen g) { return (g == Gen::X11 || g == Gen::X22) ? 0 : 1; }

// Alternation partner inside one parity class: chi words alternate a
// letter with its partner (x11 <-> x22, x12 <-> x21).
inline Gen chi_partner(Gen g) {
    switch (g) {
        case Gen::X11: return Gen::X22;
        case Gen::X22: return Gen::X11;
        case Gen::X12: return Gen::X21;
        case Gen::X21: return Gen::X12;
    }
    return Gen::X11;
}

// Index transpose x_{ij} -> x_{ji}, used by the antipode.
inline Gen transpose(Gen g) {
    switch (g) {
        case Gen::X12: return Gen::X21;
        case Gen::X21: return Gen::X12;
        default: return g;
    }
}

const char* gen_name(Gen g);

using Word = std::vector<Gen>;

// chi_{ij}^m: the alternating word of length m starting at x_{ij};
// requires {i,j} with |i-j| pattern 11/22/12/21.
Word chi_word(int i, int j, long m);

struct AlgebraParams {
    long N = 1;
    long n = 2;
    int mu = 1;
    int lambda = 1;

    void validate() const;
    long dim() const { return 4 * N * n; }

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

enum class Family : std::uint8_t { E = 0, O = 1 };  // E: x11^s chi22^t, O: x12^s chi21^t

struct BasisIndex {
    Family family = Family::E;
    long s = 1;  // 1..2N
    long t = 0;  // 0..n-1

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

// Export order: family E then O, ascending (s, t).
long basis_rank(const BasisIndex& b, const AlgebraParams& p);
BasisIndex basis_from_rank(long rank, const AlgebraParams& p);
Word basis_word(const BasisIndex& b);
std::string basis_label(const BasisIndex& b);  // e.g. "x11^2*chi22^1"

// Sparse linear combination of basis elements with cyclotomic coefficients.
// Zero coefficients are never stored, so equality is map equality.
class Element {
public:
    Element() = default;

    static Element single(const BasisIndex& b, const CycNumber& c) {
        Element e;
        e.add_term(b, c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<BasisIndex, CycNumber>& terms() const { return terms_; }

    CycNumber coeff(const BasisIndex& b, const CycField& f) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? f.zero() : it->second;
    }

    Element& add_term(const BasisIndex& b, const CycNumber& c) {
        if (c.is_zero()) return *this;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const {
        Element r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }
    Element scaled(const CycNumber& k) const {
        Element r;
        if (k.is_zero()) return r;
        for (const auto& [b, c] : terms_) {
            CycNumber v = c * k;
            if (!v.is_zero()) r.terms_.emplace(b, v);
        }
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string str() const;  // canonical text, e.g. "x11^1 + (-1)*x12^2*chi21^1"

private:
    std::map<BasisIndex, CycNumber> terms_;
};

// The unit 1 = x11^{2N} + mu * x12^{2N} expressed in the basis.
Element unit_element(const AlgebraParams& p, const CycField& f);

// Deterministic normal form of an arbitrary generator word onto the basis.
// Every word maps to 0, to coeff * (single basis element), or (empty word)
// to the unit combination.
Element normalize(const Word& w, const AlgebraParams& p, const CycField& f);

// The algebra A_{Nn}^{mu lambda} with its cached structure constants:
// every product of two basis elements, in normal form, plus the unit.
// Immutable after construction; safe for concurrent reads.
class SuzukiAlgebra {
public:
    explicit SuzukiAlgebra(const AlgebraParams& p);

    const AlgebraParams& params() const { return params_; }
    const CycField& field() const { return *field_; }
    std::shared_ptr<const CycField> field_ptr() const { return field_; }
    long dim() const { return params_.dim(); }

    const Element& unit() const { return unit_; }
    BasisIndex basis(long rank) const { return basis_from_rank(rank, params_); }
    long rank_of(const BasisIndex& b) const { return basis_rank(b, params_); }

    // Cached product of two basis elements.
    const Element& mult(const BasisIndex& a, const BasisIndex& b) const {
        return mult_[basis_rank(a, params_)][basis_rank(b, params_)];
    }
    const Element& mult(long i, long j) const { return mult_[i][j]; }

    Element multiply(const Element& x, const Element& y) const;
    Element power(const Element& x, long e) const;

    Element normalize(const Word& w) const { return suzuki::normalize(w, params_, *field_); }
    Element chi(int i, int j, long m) const { return normalize(chi_word(i, j, m)); }
    Element generator(Gen g) const { return normalize(Word{g}); }

    // Element as dense coordinates in basis-rank order.
    std::vector<CycNumber> dense(const Element& e) const;

    // Test support: a copy with one table coefficient multiplied by a
    // given factor, for corruption/mutation checks.
    SuzukiAlgebra corrupted(long i, long j, const CycNumber& factor) const;

private:
    SuzukiAlgebra() = default;  // cache loading path
    friend std::optional<SuzukiAlgebra> load_tables_cache(const AlgebraParams& p, const std::string& dir);

    AlgebraParams params_;
    std::shared_ptr<const CycField> field_;
    std::vector<std::vector<Element>> mult_;
    Element unit_;
};

// Serialization of the structure tables (see json_export.hpp for the JSON
// form); cache files round-trip through it.
std::string tables_checksum(const SuzukiAlgebra& alg);

}  // namespace suzuki
