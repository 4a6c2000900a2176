#include "arcva/poly.hpp"

#include <algorithm>

namespace arcva::exactpoly {

Monomial Monomial::var(VarId v, unsigned e) {
    Monomial m;
    if (e > 0) m.f_.push_back({v, e});
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() || ib != b.f_.end()) {
        if (ib == b.f_.end() || (ia != a.f_.end() && ia->first < ib->first))
            r.f_.push_back(*ia++);
        else if (ia == a.f_.end() || ib->first < ia->first)
            r.f_.push_back(*ib++);
        else {
            r.f_.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() || ib != b.f_.end()) {
        if (ib == b.f_.end() || (ia != a.f_.end() && ia->first < ib->first))
            r.f_.push_back(*ia++);
        else if (ia == a.f_.end() || ib->first < ia->first)
            r.f_.push_back(*ib++);
        else {
            r.f_.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia, ++ib;
        }
    }
    return r;
}

bool Monomial::divide(const Monomial& b, Monomial& out) const {
    out.f_.clear();
    auto ia = f_.begin();
    for (const auto& [v, e] : b.f_) {
        while (ia != f_.end() && ia->first < v) out.f_.push_back(*ia++);
        if (ia == f_.end() || ia->first != v || ia->second < e) return false;
        if (ia->second > e) out.f_.push_back({v, ia->second - e});
        ++ia;
    }
    while (ia != f_.end()) out.f_.push_back(*ia++);
    return true;
}

bool Monomial::divisible_by(const Monomial& b) const {
    auto ia = f_.begin();
    for (const auto& [v, e] : b.f_) {
        while (ia != f_.end() && ia->first < v) ++ia;
        if (ia == f_.end() || ia->first != v || ia->second < e) return false;
        ++ia;
    }
    return true;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::grevlex) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        // reverse-lex tiebreak: scan from the smallest variable; the first
        // difference decides, smaller exponent wins
        for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
            unsigned ea = a.exponent(*it), eb = b.exponent(*it);
            if (ea != eb) return ea < eb;
        }
        return false;
    }
    for (VarId v : priority) {
        unsigned ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea > eb;
    }
    return false;
}

Polynomial::Polynomial(const Scalar& c) {
    if (!c.is_zero()) t_[Monomial()] = c;
}

Polynomial Polynomial::variable(VarId v) {
    Polynomial p;
    p.t_[Monomial::var(v)] = Scalar(1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
    Polynomial p;
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

const Scalar* Polynomial::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? nullptr : &it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const Polynomial& a, const Scalar& c) {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, q] : a.t_) r.t_[m] = q * c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(Scalar(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const MonomialOrder& ord) const {
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op, unsigned k) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
        case PolyOp::pow: return p.pow(k);
    }
    throw Error("bad PolyOp");
}

}  // namespace arcva::exactpoly
