#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "arcva/errors.hpp"

namespace arcva::exactpoly {

using Rational = mpq_class;

// Exact element of Q(sqrt2, sqrt3, i), stored in the basis
//   {1, sqrt2, sqrt3, sqrt6} x {1, i},  index = radical + 4*imag.
// Every operation is exact; there is no floating-point mode.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) { c_[0] = n; }
    Scalar(int n) { c_[0] = n; }
    Scalar(const Rational& q) { c_[0] = q; }

    static Scalar rational(long num, long den);
    static Scalar basis(int i);
    static Scalar sqrt2() { return basis(1); }
    static Scalar sqrt3() { return basis(2); }
    static Scalar sqrt6() { return basis(3); }
    static Scalar i() { return basis(4); }

    const Rational& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, 8>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    explicit operator bool() const { return !is_zero(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Inverse via the 8x8 regular-representation solve over Q.
    // Throws DivisionByZero on zero.
    Scalar inverse() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // normal-form text per the CLI grammar, e.g. "3/4 + (1/8)*sqrt2 - I*sqrt6"
    std::string str() const;

  private:
    std::array<Rational, 8> c_{};  // value-initialized mpq_class is 0
};

enum class ScalarOp { add, sub, mul, div };

// the spec-level entry point; div throws DivisionByZero when b == 0
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace arcva::exactpoly
