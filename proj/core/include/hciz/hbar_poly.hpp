#pragma once

#include <vector>

#include "hciz/rational.hpp"

namespace hciz {

/// Polynomial in hbar truncated at a fixed order; coefficient type for the
/// symbolic-hbar mode of the string series. All arithmetic drops terms above
/// the truncation order.
class HbarPoly {
  public:
    HbarPoly() : coeff_(1, Rational(0)) {}
    explicit HbarPoly(int order) : coeff_(order + 1, Rational(0)) {}
    HbarPoly(int order, const Rational& constant) : coeff_(order + 1, Rational(0)) {
        coeff_[0] = constant;
    }

    static HbarPoly monomial(int order, int power, const Rational& c) {
        HbarPoly p(order);
        if (power <= order) p.coeff_[power] = c;
        return p;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int k) const { return coeff_[k]; }
    Rational& operator[](int k) { return coeff_[k]; }

    bool is_zero() const {
        for (const Rational& c : coeff_)
            if (c != 0) return false;
        return true;
    }

    /// Smallest power with nonzero coefficient; order()+1 when zero.
    int low_order() const {
        for (int k = 0; k <= order(); ++k)
            if (coeff_[k] != 0) return k;
        return order() + 1;
    }

    HbarPoly& operator+=(const HbarPoly& o) {
        for (int k = 0; k <= std::min(order(), o.order()); ++k) coeff_[k] += o.coeff_[k];
        return *this;
    }
    HbarPoly& operator-=(const HbarPoly& o) {
        for (int k = 0; k <= std::min(order(), o.order()); ++k) coeff_[k] -= o.coeff_[k];
        return *this;
    }
    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }

    friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
        HbarPoly r(std::min(a.order(), b.order()));
        for (int i = 0; i <= a.order() && i <= r.order(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
                if (b.coeff_[j] == 0) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }

    HbarPoly& operator*=(const HbarPoly& o) { return *this = *this * o; }

    HbarPoly& operator*=(const Rational& s) {
        for (Rational& c : coeff_) c *= s;
        return *this;
    }
    HbarPoly& operator/=(const Rational& s) {
        for (Rational& c : coeff_) c /= s;
        return *this;
    }

    friend bool operator==(const HbarPoly& a, const HbarPoly& b) { return a.coeff_ == b.coeff_; }

  private:
    std::vector<Rational> coeff_;
};

}  // namespace hciz
