#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hciz {

// All symbolic-side computation is exact; Rational is the one scalar type
// threaded through the combinatorial code paths.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational p;
    if (e > 0) {
        mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (base == 0) throw std::domain_error("pow_rat: negative power of zero");
        mpz_pow_ui(p.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(p.get_den_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    p.canonicalize();
    return p;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("to_integer: " + q.get_str() + " is not an integer");
    return q.get_num();
}

/// Serialization used everywhere: "p" or "p/q", canonical lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s);

// Exact complex scalar over Q(i); enough field operations for Schur/power-sum
// evaluation and squared-modulus comparisons.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

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
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    Rational abs2() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational inverse() const {
        Rational n = abs2();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussianRational operator*(const Rational& a, GaussianRational b) {
    b.re *= a;
    b.im *= a;
    return b;
}

GaussianRational gaussian_from_string(const std::string& s);
std::string to_string(const GaussianRational& z);

}  // namespace hciz
