#include "arcva/scalar.hpp"

#include <sstream>

namespace arcva::exactpoly {

namespace {

// radical multiplication: rad[a][b] = {integer coefficient, radical index}
// indices: 0 = 1, 1 = sqrt2, 2 = sqrt3, 3 = sqrt6
struct RadEntry {
    int coef;
    int idx;
};
constexpr RadEntry kRad[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {2, 0}, {1, 3}, {2, 2}},
    {{1, 2}, {1, 3}, {3, 0}, {3, 1}},
    {{1, 3}, {2, 2}, {3, 1}, {6, 0}},
};

}  // namespace

Scalar Scalar::rational(long num, long den) {
    Scalar s;
    s.c_[0] = Rational(num, den);
    s.c_[0].canonicalize();
    return s;
}

Scalar Scalar::basis(int i) {
    Scalar s;
    s.c_[static_cast<std::size_t>(i)] = 1;
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < 8; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (std::size_t i = 0; i < 8; ++i)
        if (o.c_[i] != 0) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (std::size_t i = 0; i < 8; ++i)
        if (o.c_[i] != 0) c_[i] -= o.c_[i];
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (int i = 0; i < 8; ++i) {
        const Rational& x = a.c_[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        const int r1 = i & 3, s1 = i >> 2;
        for (int j = 0; j < 8; ++j) {
            const Rational& y = b.c_[static_cast<std::size_t>(j)];
            if (y == 0) continue;
            const int r2 = j & 3, s2 = j >> 2;
            const RadEntry& e = kRad[r1][r2];
            Rational t = x * y * e.coef;
            if (s1 && s2) t = -t;
            out.c_[static_cast<std::size_t>(e.idx + 4 * ((s1 + s2) & 1))] += t;
        }
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // columns of M are the coordinates of (*this) * basis(j); solve M x = e0
    Rational M[8][9];
    for (int j = 0; j < 8; ++j) {
        Scalar col = *this * basis(j);
        for (int i = 0; i < 8; ++i) M[i][j] = col.c_[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < 8; ++i) M[i][8] = (i == 0) ? 1 : 0;
    for (int col = 0; col < 8; ++col) {
        int piv = -1;
        for (int k = col; k < 8; ++k)
            if (M[k][col] != 0) {
                piv = k;
                break;
            }
        // the regular representation of a nonzero field element is invertible
        for (int j = 0; j <= 8; ++j) std::swap(M[col][j], M[piv][j]);
        Rational d = M[col][col];
        for (int j = col; j <= 8; ++j) M[col][j] /= d;
        for (int k = 0; k < 8; ++k) {
            if (k == col || M[k][col] == 0) continue;
            Rational f = M[k][col];
            for (int j = col; j <= 8; ++j) M[k][j] -= f * M[col][j];
        }
    }
    Scalar r;
    for (int i = 0; i < 8; ++i) r.c_[static_cast<std::size_t>(i)] = M[i][8];
    return r;
}

std::string Scalar::str() const {
    static const char* kNames[8] = {"", "sqrt2", "sqrt3", "sqrt6", "I", "I*sqrt2", "I*sqrt3", "I*sqrt6"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        const Rational& q = c_[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        Rational a = q;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool frac = a.get_den() != 1;
        const bool unit_coef = (a == 1) && kNames[i][0] != '\0';
        if (!unit_coef) {
            if (frac && kNames[i][0] != '\0')
                os << "(" << a.get_str() << ")";
            else
                os << a.get_str();
        }
        if (kNames[i][0] != '\0') {
            if (!unit_coef) os << "*";
            os << kNames[i];
        }
    }
    if (first) return "0";
    return os.str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    throw Error("bad ScalarOp");
}

}  // namespace arcva::exactpoly
