#pragma once

#include <map>

#include "suzuki/algebra.hpp"
#include "suzuki/linalg.hpp"

namespace suzuki::testsupport {

// Rational combination of raw generator words.
using WordExpr = std::map<Word, Rational>;

// Independent ground truth for the normal form: the linear span of every
// instance of the defining relations, applied in context inside words up
// to a length cap. Two expressions are provably equal iff their
// difference lies in that span. The oracle never uses the normal-form
// code path; it only enumerates raw relation instances and does exact
// rational elimination, so membership certifies a true identity (an
// out-of-reach proof can only fail the test, never pass it wrongly).
class RelationOracle {
public:
    // max_len <= 0 picks the default cap max(6, 2N+n, 4N) + 1, enough for
    // every length-6 input, every basis word and every relation instance
    // the tests need.
    RelationOracle(const AlgebraParams& p, long max_len = 0);

    long max_len() const { return cap_; }
    long column_count() const { return static_cast<long>(columns_.size()); }
    long relation_rank() const { return ech_.rank(); }

    // Difference lies in the relation span (words with adjacent mixed
    // parity are pre-killed, i.e. treated as 0).
    bool equivalent(const WordExpr& lhs, const WordExpr& rhs) const;

    // Word (as a raw expression) provably equals an Element written out
    // through its basis words. This is the oracle check for normalize.
    bool word_matches_element(const Word& w, const Element& e) const;

    // No nonzero combination of basis words lies in the relation span:
    // the relations found at this cap cannot collapse the basis.
    bool basis_words_independent() const;

private:
    using Row = Echelon<Rational>::Row;

    bool pure(const Word& w) const;
    Row to_row(const WordExpr& expr) const;

    AlgebraParams p_;
    long cap_ = 0;
    std::map<Word, long> columns_;  // pure words (and the empty word) -> column
    long first_basis_column_ = 0;   // basis words occupy the tail block
    Echelon<Rational> ech_;
};

}  // namespace suzuki::testsupport
