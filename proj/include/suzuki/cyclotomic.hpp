#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "suzuki/rational.hpp"

namespace suzuki {

class CycField;

// Element of the cyclotomic field Q(zeta_M), stored as a polynomial in
// zeta of degree < phi(M), reduced modulo the M-th cyclotomic polynomial.
// The representation is canonical: two values are equal iff their
// coefficient vectors are equal. Immutable in spirit; arithmetic returns
// fresh values.
class CycNumber {
public:
    CycNumber() : field_(nullptr) {}

    const CycField& field() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const;  // coefficient of zeta^0

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
    friend bool operator<(const CycNumber& a, const CycNumber& b);  // lexicographic, for ordered containers

    CycNumber inverse() const;
    CycNumber pow(long e) const;

    // Canonical text form, e.g. "1", "-1/2", "z^1", "1/2+1/2*z^2".
    std::string str() const;

private:
    friend class CycField;
    CycNumber(const CycField* f, std::vector<Rational> c) : field_(f), coeffs_(std::move(c)) {}

    const CycField* field_;
    std::vector<Rational> coeffs_;
};

// The ambient field Q(zeta_M). Holds the conductor, the cyclotomic
// modulus and a reduction table; all CycNumbers are created through it.
// Immutable after construction and safe to share across threads.
class CycField {
public:
    explicit CycField(long conductor);

    long conductor() const { return conductor_; }
    long degree() const { return degree_; }  // phi(conductor)
    // Coefficients of the M-th cyclotomic polynomial, ascending degree, monic.
    const std::vector<Rational>& modulus() const { return modulus_; }

    CycNumber zero() const;
    CycNumber one() const;
    CycNumber from_rational(const Rational& r) const;
    CycNumber from_long(long v) const { return from_rational(Rational(v)); }
    CycNumber half() const { return from_rational(Rational(1, 2)); }

    // zeta_M^j for any integer j (reduced mod M).
    CycNumber zeta_power(long j) const;
    // Primitive k-th root zeta_M^{M/k}; requires k | M.
    CycNumber root_of_unity(long k) const;
    // All k distinct k-th roots of unity; requires k | M.
    std::vector<CycNumber> enumerate_roots(long k) const;
    // 1 for lambda=+1, zeta_4 for lambda=-1 (squares to lambda).
    CycNumber sqrt_of_sign(int lambda) const;

    // Inverse of CycNumber::str(); reports malformed input with its position.
    CycNumber parse(std::string_view text) const;

    // Multiplicative order of a root of unity, 0 if the value is not one.
    long order_of_unity(const CycNumber& a) const;

private:
    friend class CycNumber;
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    long conductor_;
    long degree_;
    std::vector<Rational> modulus_;
    std::vector<std::vector<Rational>> zeta_powers_;  // zeta^j reduced, j in 0..M-1
};

// Conductor used throughout for the algebra family: lcm(4, 2N). It is the
// smallest M whose roots of unity cover G_{2N}, sqrt(-1) and the rationals.
long conductor_for(long N);

}  // namespace suzuki
