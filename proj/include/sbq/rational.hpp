#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

namespace sbq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + im*i. The imaginary unit enters through the
/// u-diagonal representation, where e^{u} has eigenvalues i q^{n+1/2}.
struct GaussianRational {
    Rat re{0};
    Rat im{0};

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rat(0), Rat(1)}; }

    // i^k for any integer k
    static GaussianRational i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {Rat(1), Rat(0)};
            case 1: return {Rat(0), Rat(1)};
            case 2: return {Rat(-1), Rat(0)};
            default: return {Rat(0), Rat(-1)};
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        Rat n = re * re + im * im;
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        *this = *this * o;
        return *this;
    }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            os << im << "*i";
        } else {
            os << "(" << re << (im > 0 ? "+" : "") << im << "*i)";
        }
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

}  // namespace sbq
