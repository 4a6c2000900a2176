#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcva/scalar.hpp"

namespace arcva::exactpoly {

using VarId = std::uint32_t;

// sparse monomial: factors sorted by variable id, exponents > 0
class Monomial {
  public:
    Monomial() = default;
    static Monomial var(VarId v, unsigned e = 1);

    const std::vector<std::pair<VarId, unsigned>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    unsigned total_degree() const;
    unsigned exponent(VarId v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    // quotient a/b, or false if b does not divide a
    bool divide(const Monomial& b, Monomial& out) const;
    bool divisible_by(const Monomial& b) const;

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // canonical (order-independent) key for term maps
    bool operator<(const Monomial& o) const { return f_ < o.f_; }

  private:
    std::vector<std::pair<VarId, unsigned>> f_;
};

// lex or graded-reverse-lex over an explicit variable priority
// (priority.front() is the largest variable)
struct MonomialOrder {
    enum class Kind { lex, grevlex };
    Kind kind = Kind::grevlex;
    std::vector<VarId> priority;

    bool greater(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return greater(b, a); }
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Scalar& c);
    static Polynomial variable(VarId v);
    static Polynomial term(const Monomial& m, const Scalar& c);

    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial

    void add_term(const Monomial& m, const Scalar& c);
    const Scalar* coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Polynomial& a, const Scalar& c);
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // leading term under an order (polynomial must be nonzero)
    std::pair<Monomial, Scalar> leading_term(const MonomialOrder& ord) const;

    // all variables that occur
    std::vector<VarId> variables() const;

  private:
    std::map<Monomial, Scalar> t_;
};

enum class PolyOp { add, sub, mul, pow };

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op, unsigned k = 0);

}  // namespace arcva::exactpoly
