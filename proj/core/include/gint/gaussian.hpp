#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "gint/integer.hpp"

namespace gint {

/// Exact Gaussian integer a + bi. No normalization is ever applied: equality
/// is componentwise, and values are immutable in spirit (all operations
/// return fresh values).
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int real) : re(std::move(real)) {}
    GaussianInt(long real) : re(real) {}
    GaussianInt(int real) : re(real) {}
    GaussianInt(Int real, Int imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianInt(long real, long imag) : re(real), im(imag) {}

    static GaussianInt unit_i() { return GaussianInt(Int(0), Int(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    /// Squared modulus re^2 + im^2; zero iff the value is zero.
    Int norm() const { return Int(re * re + im * im); }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return GaussianInt(Int(a.re + b.re), Int(a.im + b.im));
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return GaussianInt(Int(a.re - b.re), Int(a.im - b.im));
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return GaussianInt(Int(a.re * b.re - a.im * b.im), Int(a.re * b.im + a.im * b.re));
    }
    GaussianInt operator-() const { return GaussianInt(Int(-re), Int(-im)); }

    GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }
    GaussianInt& operator-=(const GaussianInt& o) { return *this = *this - o; }
    GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    /// Total order by (re, im); used to make scan output canonical.
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    std::string str() const {
        if (im == 0) return re.get_str();
        std::string s = re == 0 ? "" : re.get_str();
        if (im > 0 && re != 0) s += "+";
        if (im == -1) s += "-";
        else if (im != 1) s += im.get_str();
        s += "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        return os << z.str();
    }
};

inline GaussianInt pow_ui(const GaussianInt& base, std::uint64_t exponent) {
    GaussianInt acc(1);
    GaussianInt sq = base;
    std::uint64_t e = exponent;
    while (e != 0) {
        if (e & 1) acc *= sq;
        e >>= 1;
        if (e != 0) sq *= sq;
    }
    return acc;
}

}  // namespace gint
