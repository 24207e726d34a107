#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace ncres {

using Rat = boost::multiprecision::cpp_rational;

/// Gaussian rational re + i*im, exact.  The field of coefficients for
/// every polynomial and rational function in the engine.
struct GRat {
    Rat re{0};
    Rat im{0};

    GRat() = default;
    GRat(long r) : re(r) {}
    GRat(Rat r) : re(std::move(r)) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }
    static GRat of(long num, long den) { return GRat(Rat(num, den)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    friend GRat operator+(const GRat& a, const GRat& b) { return GRat(a.re + b.re, a.im + b.im); }
    friend GRat operator-(const GRat& a, const GRat& b) { return GRat(a.re - b.re, a.im - b.im); }
    friend GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GRat operator/(const GRat& a, const GRat& b) {
        Rat n = b.norm2();
        GRat num = a * b.conj();
        return GRat(num.re / n, num.im / n);
    }
    GRat& operator+=(const GRat& o) { *this = *this + o; return *this; }
    GRat& operator-=(const GRat& o) { *this = *this - o; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    GRat pow(int e) const {
        GRat acc(1), base = *this;
        int k = e;
        if (k < 0) { base = GRat(1) / base; k = -k; }
        for (; k > 0; --k) acc *= base;
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) { os << re; return os.str(); }
        if (re != 0) os << re << (im > 0 ? "+" : "");
        if (im == 1) os << "i";
        else if (im == -1) os << "-i";
        else os << im << "i";
        return os.str();
    }
};

}  // namespace ncres
