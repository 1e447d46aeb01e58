#pragma once
// Exact scalars: arbitrary-precision rationals, Gaussian rationals, half-integers.
// Everything here is immutable value semantics; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace relkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Violated preconditions surface as ContractError; the CLI maps it to exit 3.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rat_to_string(const Rational& r);
// Accepts "a", "a/b", and decimal forms with a finite binary-friendly tail
// such as "1.5", "-.25". Throws ContractError on malformed input.
Rational parse_rational(const std::string& s);

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw ContractError("division by zero GaussianRational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

std::string gr_to_string(const GaussianRational& g);

// Half-integer stored as twice its value, so all arithmetic stays integral.
struct HalfInt {
    BigInt twice;

    HalfInt() = default;
    HalfInt(long v) : twice(2 * v) {}  // NOLINT(google-explicit-constructor)
    static HalfInt from_twice(BigInt t) { return HalfInt(std::move(t), 0); }

    bool is_integer() const { return twice % 2 == 0; }
    Rational to_rational() const { return Rational(twice, 2); }
    HalfInt abs() const { return from_twice(twice < 0 ? -twice : twice); }

    HalfInt operator-() const { return from_twice(-twice); }
    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice + b.twice); }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice - b.twice); }
    friend Rational operator*(const HalfInt& a, const HalfInt& b) { return Rational(a.twice * b.twice, 4); }
    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice == b.twice; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice != b.twice; }
    friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.twice < b.twice; }
    friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.twice <= b.twice; }
    friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.twice > b.twice; }
    friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.twice >= b.twice; }

  private:
    HalfInt(BigInt t, int) : twice(std::move(t)) {}
};

std::string half_to_string(const HalfInt& h);
// Accepts "k", "k/2", "x.5", "x.0" with optional sign. Throws ContractError otherwise.
HalfInt parse_half(const std::string& s);

using Weight = std::vector<HalfInt>;

std::string weight_to_string(const Weight& w);
// Comma-separated half-integers, e.g. "-1,1/2".
Weight parse_weight(const std::string& s);

}  // namespace relkit
