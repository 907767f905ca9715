#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division by zero");
    Rat r{num, den};
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_int(const Rat& x) {
    if (!is_integer(x))
        throw IdentityViolation("expected an integer, got " + x.get_str());
    return x.get_num();
}

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// x(x-1)...(x-l+1)/l! for l >= 0, zero for l < 0
inline Rat binomial(const Rat& x, long l) {
    if (l < 0) return 0;
    Rat r = 1;
    for (long m = 0; m < l; ++m) {
        r *= x - m;
        r /= m + 1;
    }
    return r;
}

// rising factorial x(x+1)...(x+i-1); for i < 0 the reciprocal 1/((x-1)(x-2)...(x+i)),
// so that (x)_{i+1} = (x)_i (x+i) holds for every integer i
inline Rat pochhammer(const Rat& x, long i) {
    Rat r = 1;
    if (i >= 0) {
        for (long a = 0; a < i; ++a) r *= x + a;
        return r;
    }
    for (long a = 1; a <= -i; ++a) {
        Rat f = x - a;
        if (f == 0) throw DomainError("pochhammer: pole at " + x.get_str() + ", index " + std::to_string(i));
        r /= f;
    }
    return r;
}

inline Int factorial(long m) {
    if (m < 0) throw DomainError("factorial of a negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

// 1/m!, which vanishes for negative m
inline Rat inv_factorial(long m) {
    if (m < 0) return 0;
    return ratio(1, factorial(m));
}

inline Int double_factorial(long m) {
    if (m < 0) throw DomainError("double factorial of a negative integer");
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            for (auto& v : row) a_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const {
        return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
    }
    std::vector<Rat> col(std::size_t j) const {
        std::vector<Rat> c;
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Fraction-free (Bareiss) elimination. Rows are first scaled to integers; the
// scale factors are divided back out at the end.
inline Rat determinant(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Rat d{Int(a[n - 1][n - 1] * sign), scale};
    d.canonicalize();
    return d;
}

}  // namespace aztec
