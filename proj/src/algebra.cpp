#include "suzuki/algebra.hpp"

#include <sstream>

namespace suzuki {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::X11: return "x11";
        case Gen::X12: return "x12";
        case Gen::X21: return "x21";
        case Gen::X22: return "x22";
    }
    return "?";
}

Word chi_word(int i, int j, long m) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("chi_word: indices must be 1 or 2");
    if (m < 0) throw std::invalid_argument("chi_word: length must be >= 0");
    Gen start;
    if (i == 1 && j == 1) start = Gen::X11;
    else if (i == 2 && j == 2) start = Gen::X22;
    else if (i == 1 && j == 2) start = Gen::X12;
    else start = Gen::X21;
    Word w;
    w.reserve(m);
    Gen g = start;
    for (long k = 0; k < m; ++k) {
        w.push_back(g);
        g = chi_partner(g);
    }
    return w;
}

void AlgebraParams::validate() const {
    if (N < 1) throw std::invalid_argument("AlgebraParams: N must be >= 1");
    if (n < 2) throw std::invalid_argument("AlgebraParams: n must be >= 2");
    if (mu != 1 && mu != -1) throw std::invalid_argument("AlgebraParams: mu must be +1 or -1");
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("AlgebraParams: lambda must be +1 or -1");
}

long basis_rank(const BasisIndex& b, const AlgebraParams& p) {
    if (b.s < 1 || b.s > 2 * p.N || b.t < 0 || b.t > p.n - 1)
        throw std::invalid_argument("basis_rank: index out of range for these parameters");
    long fam = (b.family == Family::E) ? 0 : 1;
    return fam * (2 * p.N * p.n) + (b.s - 1) * p.n + b.t;
}

BasisIndex basis_from_rank(long rank, const AlgebraParams& p) {
    long block = 2 * p.N * p.n;
    BasisIndex b;
    b.family = (rank < block) ? Family::E : Family::O;
    long r = rank % block;
    b.s = r / p.n + 1;
    b.t = r % p.n;
    return b;
}

Word basis_word(const BasisIndex& b) {
    Word w;
    w.reserve(b.s + b.t);
    Gen power = (b.family == Family::E) ? Gen::X11 : Gen::X12;
    for (long k = 0; k < b.s; ++k) w.push_back(power);
    Word tail = (b.family == Family::E) ? chi_word(2, 2, b.t) : chi_word(2, 1, b.t);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

std::string basis_label(const BasisIndex& b) {
    std::ostringstream os;
    if (b.family == Family::E) {
        os << "x11^" << b.s;
        if (b.t > 0) os << "*chi22^" << b.t;
    } else {
        os << "x12^" << b.s;
        if (b.t > 0) os << "*chi21^" << b.t;
    }
    return os.str();
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        if (!c.is_one()) os << "(" << c.str() << ")*";
        os << basis_label(b);
        first = false;
    }
    return os.str();
}

Element unit_element(const AlgebraParams& p, const CycField& f) {
    Element e;
    e.add_term(BasisIndex{Family::E, 2 * p.N, 0}, f.one());
    e.add_term(BasisIndex{Family::O, 2 * p.N, 0}, f.from_long(p.mu));
    return e;
}

namespace {

// Remove adjacent equal pairs (each pair is one central square) until the
// word alternates; returns the number of pairs removed.
long extract_squares(Word& w) {
    Word st;
    st.reserve(w.size());
    long pairs = 0;
    for (Gen g : w) {
        if (!st.empty() && st.back() == g) {
            st.pop_back();
            ++pairs;
        } else {
            st.push_back(g);
        }
    }
    w.swap(st);
    return pairs;
}

}  // namespace

Element normalize(const Word& w, const AlgebraParams& p, const CycField& f) {
    p.validate();
    if (w.empty()) return unit_element(p, f);

    const int par = parity(w[0]);
    for (size_t i = 1; i < w.size(); ++i) {
        if (parity(w[i]) != par) return Element{};  // adjacent mixed parity kills the word
    }

    const Gen lead = (par == 0) ? Gen::X11 : Gen::X12;  // letter absorbed into the power part

    Word tail = w;
    long squares = extract_squares(tail);
    CycNumber coeff = f.one();

    // Fold alternating tails of length >= n through chi_{..}^n relations.
    // Each pass either strictly shortens the tail or flips a length-n tail
    // onto the lead letter, after which we stop.
    while (true) {
        long l = static_cast<long>(tail.size());
        if (l < p.n) break;
        if (l == p.n && tail[0] == lead) break;
        for (long i = 0; i < p.n; ++i) tail[i] = chi_partner(tail[i]);
        if (par == 1 && p.lambda == -1) coeff = -coeff;  // chi21^n = lambda chi12^n
        squares += extract_squares(tail);
    }

    long sigma = 2 * squares;
    long tau;
    if (!tail.empty() && tail[0] == lead) {
        sigma += 1;
        tau = static_cast<long>(tail.size()) - 1;
    } else {
        tau = static_cast<long>(tail.size());
    }

    const Family fam = (par == 0) ? Family::E : Family::O;
    if (sigma == 0) {
        // chi22^t = x11^{2N} chi22^t; chi21^t = mu x12^{2N} chi21^t
        if (par == 1 && p.mu == -1) coeff = -coeff;
        return Element::single(BasisIndex{fam, 2 * p.N, tau}, coeff);
    }
    long s = (sigma - 1) % (2 * p.N) + 1;
    long wraps = (sigma - s) / (2 * p.N);
    if (par == 1 && p.mu == -1 && (wraps % 2) == 1) coeff = -coeff;  // x12^{2N+k} = mu x12^k
    return Element::single(BasisIndex{fam, s, tau}, coeff);
}

SuzukiAlgebra::SuzukiAlgebra(const AlgebraParams& p)
    : params_(p), field_(std::make_shared<CycField>(conductor_for(p.N))) {
    params_.validate();
    const long d = dim();
    unit_ = unit_element(params_, *field_);
    mult_.resize(d);
    std::vector<Word> words(d);
    for (long i = 0; i < d; ++i) words[i] = basis_word(basis_from_rank(i, params_));
    for (long i = 0; i < d; ++i) {
        mult_[i].resize(d);
        for (long j = 0; j < d; ++j) {
            Word prod = words[i];
            prod.insert(prod.end(), words[j].begin(), words[j].end());
            mult_[i][j] = suzuki::normalize(prod, params_, *field_);
        }
    }
}

Element SuzukiAlgebra::multiply(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            const Element& prod = mult(bx, by);
            CycNumber k = cx * cy;
            for (const auto& [bz, cz] : prod.terms()) out.add_term(bz, cz * k);
        }
    }
    return out;
}

Element SuzukiAlgebra::power(const Element& x, long e) const {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    Element acc = unit_;
    Element base = x;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<CycNumber> SuzukiAlgebra::dense(const Element& e) const {
    std::vector<CycNumber> v(dim(), field_->zero());
    for (const auto& [b, c] : e.terms()) v[basis_rank(b, params_)] = c;
    return v;
}

SuzukiAlgebra SuzukiAlgebra::corrupted(long i, long j, const CycNumber& factor) const {
    SuzukiAlgebra copy = *this;
    Element& cell = copy.mult_[i][j];
    if (cell.is_zero()) {
        cell = Element::single(basis_from_rank(0, params_), factor);
    } else {
        Element scaled = cell.scaled(factor);
        cell = scaled.is_zero() ? Element::single(basis_from_rank(0, params_), field_->one()) : scaled;
    }
    return copy;
}

std::string tables_checksum(const SuzukiAlgebra& alg) {
    // FNV-1a over the canonical text of every table entry.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    const long d = alg.dim();
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) mix(alg.mult(i, j).str());
    mix(alg.unit().str());
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace suzuki
