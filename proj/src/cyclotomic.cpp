#include "suzuki/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace suzuki {

namespace {

// Polynomials over Z as ascending coefficient vectors, used only to build
// the cyclotomic modulus. Division is exact here (divisors are monic).
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_exact_div(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
        mpz_class c = num[k + den.size() - 1];  // den is monic
        quot[k] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic: non-exact division");
    return quot;
}

const ZPoly& cyclotomic_poly(long m, std::map<long, ZPoly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    ZPoly poly(m + 1, mpz_class(0));  // x^m - 1
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        poly = zpoly_exact_div(std::move(poly), cyclotomic_poly(d, memo));
    }
    return memo.emplace(m, std::move(poly)).first->second;
}

void check_same_field(const CycField* a, const CycField* b) {
    if (a == nullptr || b == nullptr)
        throw std::invalid_argument("cyclotomic: uninitialized value in arithmetic");
    if (a != b && a->conductor() != b->conductor())
        throw std::invalid_argument("cyclotomic: operands from different fields");
}

}  // namespace

long conductor_for(long N) {
    if (N < 1) throw std::invalid_argument("conductor_for: N must be >= 1");
    return std::lcm(4L, 2 * N);
}

CycField::CycField(long conductor) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("CycField: conductor must be positive");
    std::map<long, ZPoly> memo;
    const ZPoly& phi = cyclotomic_poly(conductor, memo);
    degree_ = static_cast<long>(phi.size()) - 1;
    modulus_.reserve(phi.size());
    for (const auto& c : phi) modulus_.emplace_back(c);

    // zeta^j for j in 0..M-1, each reduced mod the modulus.
    zeta_powers_.resize(conductor_);
    for (long j = 0; j < conductor_; ++j) {
        std::vector<Rational> p(j + 1, Rational(0));
        p[j] = Rational(1);
        zeta_powers_[j] = reduce(std::move(p));
    }
}

std::vector<Rational> CycField::reduce(std::vector<Rational> poly) const {
    for (long k = static_cast<long>(poly.size()) - 1; k >= degree_; --k) {
        Rational c = poly[k];
        if (c.is_zero()) continue;
        poly[k] = Rational(0);
        // x^degree = -(modulus below top), shifted by k - degree.
        for (long i = 0; i < degree_; ++i) poly[k - degree_ + i] -= c * modulus_[i];
    }
    poly.resize(degree_, Rational(0));
    return poly;
}

CycNumber CycField::zero() const { return CycNumber(this, std::vector<Rational>(degree_, Rational(0))); }

CycNumber CycField::one() const { return from_rational(Rational(1)); }

CycNumber CycField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return CycNumber(this, std::move(c));
}

CycNumber CycField::zeta_power(long j) const {
    long r = j % conductor_;
    if (r < 0) r += conductor_;
    return CycNumber(this, zeta_powers_[r]);
}

CycNumber CycField::root_of_unity(long k) const {
    if (k < 1 || conductor_ % k != 0)
        throw std::invalid_argument("root_of_unity: k must divide the conductor");
    return zeta_power(conductor_ / k);
}

std::vector<CycNumber> CycField::enumerate_roots(long k) const {
    if (k < 1 || conductor_ % k != 0)
        throw std::invalid_argument("enumerate_roots: k must divide the conductor");
    std::vector<CycNumber> out;
    out.reserve(k);
    for (long j = 0; j < k; ++j) out.push_back(zeta_power(j * (conductor_ / k)));
    return out;
}

CycNumber CycField::sqrt_of_sign(int lambda) const {
    if (lambda == 1) return one();
    if (lambda == -1) return root_of_unity(4);
    throw std::invalid_argument("sqrt_of_sign: lambda must be +1 or -1");
}

long CycField::order_of_unity(const CycNumber& a) const {
    CycNumber p = a;
    for (long k = 1; k <= conductor_; ++k) {
        if (p.is_one()) return k;
        p *= a;
    }
    return 0;
}

const CycField& CycNumber::field() const {
    if (field_ == nullptr) throw std::logic_error("cyclotomic: value has no field");
    return *field_;
}

bool CycNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CycNumber::is_one() const {
    if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CycNumber::is_rational() const {
    return coeffs_.empty() ||
           std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational CycNumber::rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    check_same_field(field_, o.field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    check_same_field(field_, o.field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    check_same_field(field_, o.field_);
    const long d = static_cast<long>(coeffs_.size());
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (long i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (long j = 0; j < d; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = field_->reduce(std::move(prod));
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this *= o.inverse(); }

bool operator==(const CycNumber& a, const CycNumber& b) {
    check_same_field(a.field_, b.field_);
    return a.coeffs_ == b.coeffs_;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
    check_same_field(a.field_, b.field_);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    const CycField& f = field();

    // Extended Euclid in Q[x] on (modulus, this); the modulus is
    // irreducible, so the gcd is a nonzero constant.
    using QPoly = std::vector<Rational>;
    auto deg = [](const QPoly& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (!p[i].is_zero()) return i;
        return -1L;
    };
    QPoly r0 = f.modulus(), r1 = coeffs_;
    QPoly s0(1, Rational(0)), s1(1, Rational(1));  // cofactors of `this`
    while (deg(r1) > 0) {
        long d0 = deg(r0), d1 = deg(r1);
        QPoly q(d0 - d1 + 1, Rational(0));
        QPoly rem = r0;
        for (long k = d0 - d1; k >= 0; --k) {
            Rational c = rem[k + d1] / r1[d1];
            q[k] = c;
            if (c.is_zero()) continue;
            for (long i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        QPoly snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    long d1 = deg(r1);
    if (d1 != 0) throw std::logic_error("cyclotomic: inverse failed (modulus not coprime?)");
    Rational unit = r1[0];
    for (auto& c : s1) c /= unit;
    return CycNumber(field_, f.reduce(std::move(s1)));
}

CycNumber CycNumber::pow(long e) const {
    const CycField& f = field();
    if (e < 0) return inverse().pow(-e);
    CycNumber base = *this, acc = f.one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycNumber::str() const {
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (k == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += "z^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

CycNumber CycField::parse(std::string_view text) const {
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "parse error at position " << pos << ": " << what;
        throw std::invalid_argument(os.str());
    };
    auto eof = [&] { return pos >= text.size(); };
    auto peek = [&] { return text[pos]; };
    auto read_uint = [&]() -> mpz_class {
        size_t start = pos;
        while (!eof() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected digit");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    };

    if (text.empty()) fail("empty input");
    std::vector<Rational> acc(degree_, Rational(0));
    bool first = true;
    while (!eof()) {
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') sign = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        if (eof()) fail("dangling sign");

        Rational coeff(1);
        bool have_coeff = false;
        if (peek() >= '0' && peek() <= '9') {
            mpz_class num = read_uint();
            mpz_class den(1);
            if (!eof() && peek() == '/') {
                ++pos;
                den = read_uint();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(mpq_class(num, den));
            have_coeff = true;
        }
        long zexp = -1;
        bool want_z = false;
        if (have_coeff) {
            if (!eof() && peek() == '*') {
                ++pos;
                want_z = true;
            }
        } else {
            want_z = true;
        }
        if (want_z) {
            if (eof() || peek() != 'z') fail("expected 'z'");
            ++pos;
            if (eof() || peek() != '^') fail("expected '^' after 'z'");
            ++pos;
            mpz_class e = read_uint();
            if (e > 8 * conductor_) fail("exponent out of range");
            zexp = e.get_si() % conductor_;
        }
        if (sign < 0) coeff = -coeff;
        if (zexp <= 0) {
            // zeta^0 or plain rational
            acc[0] += coeff;
        } else if (zexp < degree_) {
            acc[zexp] += coeff;
        } else {
            // non-canonical exponent; fold through the reduced zeta power
            const CycNumber z = zeta_power(zexp);
            for (long i = 0; i < degree_; ++i) acc[i] += coeff * z.coeffs()[i];
        }
        first = false;
    }
    return CycNumber(this, std::move(acc));
}

}  // namespace suzuki
