#include "qorbit/scalar.hpp"

#include <cctype>

namespace qorbit {

Scalar Scalar::ratio(long long num, long long den) {
    if (den == 0) throw usage_error("Scalar::ratio: zero denominator");
    return Scalar(BigRat(BigInt(num), BigInt(den)));
}

Scalar Scalar::complex_ratio(long long num, long long den, long long inum, long long iden) {
    if (den == 0 || iden == 0) throw usage_error("Scalar::complex_ratio: zero denominator");
    return Scalar(BigRat(BigInt(num), BigInt(den)), BigRat(BigInt(inum), BigInt(iden)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw usage_error("Scalar: division by zero");
    BigRat n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(std::uint32_t n) const {
    Scalar acc(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

std::complex<double> Scalar::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    BigRat re = re_ * o.re_ - im_ * o.im_;
    BigRat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

std::string format(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string format(const Scalar& s) {
    if (s.is_zero()) return "0";
    if (s.im() == 0) return format(s.re());
    std::string imag = format(abs(s.im())) + " i";
    if (s.re() == 0) return (s.im() < 0 ? "-" : "") + imag;
    return format(s.re()) + (s.im() < 0 ? " - " : " + ") + imag;
}

namespace {

struct ScalarLexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer in scalar at offset " + std::to_string(pos));
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }
    bool peek_i() {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'i') return false;
        // make sure this is the bare imaginary unit, not an identifier
        return pos + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1]));
    }
};

} // namespace

Scalar parse_scalar(std::string_view text) {
    ScalarLexer lx{text};
    Scalar acc(0);
    bool first = true;
    while (true) {
        int sign = 1;
        lx.skip_ws();
        if (lx.eat('-')) {
            sign = -1;
        } else if (lx.eat('+')) {
            sign = 1;
        } else if (!first) {
            break;
        }
        BigRat mag(1);
        bool have_number = false;
        if (lx.peek_digit()) {
            BigInt num = lx.integer();
            BigInt den(1);
            if (lx.eat('/')) den = lx.integer();
            if (den == 0) throw parse_error("zero denominator in scalar");
            mag = BigRat(num, den);
            have_number = true;
        }
        bool imaginary = false;
        if (lx.peek_i()) {
            ++lx.pos;
            imaginary = true;
        }
        if (!have_number && !imaginary) {
            if (first) throw parse_error("empty scalar: '" + std::string(text) + "'");
            throw parse_error("dangling sign in scalar: '" + std::string(text) + "'");
        }
        if (sign < 0) mag = -mag;
        acc += imaginary ? Scalar(BigRat(0), mag) : Scalar(mag);
        first = false;
    }
    if (!lx.done()) {
        throw parse_error("trailing characters in scalar: '" + std::string(text) + "'");
    }
    return acc;
}

} // namespace qorbit
