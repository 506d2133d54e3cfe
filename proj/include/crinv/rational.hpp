#pragma once

// Exact scalar types: arbitrary-precision rationals and Gaussian rationals.
// No floating point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crinv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long long n) : v_(n) {}
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = den < 0 ? bmp_rational(-num, -den) : bmp_rational(num, den);
    }
    Rat(int num, int den) : Rat(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rat operator-() const { return Rat(bmp_rational(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// "7", "-3/4"
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    using bmp_rational = boost::multiprecision::cpp_rational;
    explicit Rat(const bmp_rational& v) : v_(v) {}
    bmp_rational v_;
};

inline Rat abs(const Rat& a) { return a < 0 ? -a : a; }

inline Rat pow(const Rat& a, int e) {
    if (e < 0) return Rat(1) / pow(a, -e);
    Rat r(1), b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

/// Gaussian rational a + b*i.  A field; division is exact.
class CRat {
public:
    Rat re, im;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(int r) : re(r) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    CRat conj() const { return CRat(re, -im); }
    /// |z|^2, a nonnegative rational.
    Rat norm2() const { return re * re + im * im; }

    CRat operator-() const { return CRat(-re, -im); }
    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    CRat& operator/=(const CRat& o) {
        Rat n2 = o.norm2();
        if (n2.is_zero()) throw std::domain_error("CRat: division by zero");
        *this *= o.conj();
        re /= n2;
        im /= n2;
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    /// "0", "3/2", "i", "-i", "1-2i", "2/3+i"
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s;
        if (!re.is_zero()) s = re.str();
        if (im == Rat(1)) s += s.empty() ? "i" : "+i";
        else if (im == Rat(-1)) s += "-i";
        else {
            std::string t = im.str();
            if (!s.empty() && t[0] != '-') s += "+";
            s += t + "i";
        }
        return s;
    }
};

inline CRat conj(const CRat& z) { return z.conj(); }

inline CRat pow(const CRat& a, int e) {
    if (e < 0) return CRat(1) / pow(a, -e);
    CRat r(1), b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

/// i^k for any integer k.
inline CRat ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return CRat(1);
        case 1: return CRat::i();
        case 2: return CRat(-1);
        default: return -CRat::i();
    }
}

} // namespace crinv
