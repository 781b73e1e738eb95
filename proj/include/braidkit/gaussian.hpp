#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "braidkit/errors.hpp"

namespace braidkit {

// Exact a + bi with rational a, b.
struct GaussQ {
    mpq_class re{0};
    mpq_class im{0};

    GaussQ() = default;
    GaussQ(long v) : re(v) {}  // NOLINT: implicit on purpose
    GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussQ i() { return GaussQ(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    GaussQ conj() const { return GaussQ(re, -im); }
    mpq_class norm() const { return re * re + im * im; }

    GaussQ inv() const {
        if (is_zero()) throw DivisionByZero();
        mpq_class n = norm();
        return GaussQ(re / n, -im / n);
    }

    GaussQ& operator+=(const GaussQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussQ& operator*=(const GaussQ& o) {
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussQ& operator/=(const GaussQ& o) { return *this *= o.inv(); }

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re, -a.im); }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const {
        if (sgn(im) == 0) return re.get_str();
        if (sgn(re) == 0) {
            if (im == 1) return "i";
            if (im == -1) return "-i";
            return im.get_str() + "i";
        }
        std::string s = "(" + re.get_str();
        s += sgn(im) > 0 ? "+" : "-";
        mpq_class a = abs(im);
        if (a != 1) s += a.get_str();
        return s + "i)";
    }
};

}  // namespace braidkit
