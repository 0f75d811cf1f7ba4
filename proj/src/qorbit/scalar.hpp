#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>

#include "qorbit/errors.hpp"

namespace qorbit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact Gaussian-rational scalar re + im*i.
///
/// cpp_rational keeps every component in lowest terms with a positive
/// denominator, so values are canonical after any operation.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : re_(n) {}                       // NOLINT(google-explicit-constructor)
    Scalar(BigRat re) : re_(std::move(re)) {}             // NOLINT(google-explicit-constructor)
    Scalar(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(BigRat(0), BigRat(1)); }
    static Scalar ratio(long long num, long long den);
    /// num/den + inum/iden * i
    static Scalar complex_ratio(long long num, long long den, long long inum, long long iden);

    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;
    Scalar pow(std::uint32_t n) const;

    std::complex<double> to_complex() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    BigRat re_{0};
    BigRat im_{0};
};

/// Strict total order (re, then im); used for canonical container keys,
/// carries no arithmetic meaning.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Canonical text: "3", "-1/2", "1 i", "-1/2 i", "1/2 + 1/3 i", "1/2 - 1/3 i".
std::string format(const Scalar& s);
std::string format(const BigRat& r);

/// Parses the canonical scalar text (also accepts "i", "-i", "2i").
Scalar parse_scalar(std::string_view text);

} // namespace qorbit
