// Exact scalar fields: arbitrary-precision rationals and prime fields GF(p).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catalg {

// expression templates are disabled so Rational behaves like a plain
// value type in templated linear algebra
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Element of GF(p). The modulus is process-global and set once per run
/// (the CLI selects it with --field gf:<p>); all arithmetic reduces mod p.
class GFp {
public:
    GFp() : v_(0) {}
    GFp(long long n) {
        long long p = modulus();
        v_ = n % p;
        if (v_ < 0) v_ += p;
    }

    static void set_modulus(long long p) {
        if (p < 2) throw std::invalid_argument("GFp modulus must be >= 2");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("GFp modulus must be prime");
        modulus_ref() = p;
    }
    static long long modulus() {
        long long p = modulus_ref();
        if (p == 0) throw std::logic_error("GFp modulus not set");
        return p;
    }

    long long value() const { return v_; }

    friend GFp operator+(GFp a, GFp b) { return GFp(a.v_ + b.v_); }
    friend GFp operator-(GFp a, GFp b) { return GFp(a.v_ - b.v_); }
    friend GFp operator*(GFp a, GFp b) { return GFp(a.v_ * b.v_); }
    friend GFp operator/(GFp a, GFp b) { return a * b.inverse(); }
    GFp operator-() const { return GFp(-v_); }
    GFp& operator+=(GFp o) { return *this = *this + o; }
    GFp& operator-=(GFp o) { return *this = *this - o; }
    GFp& operator*=(GFp o) { return *this = *this * o; }
    GFp& operator/=(GFp o) { return *this = *this / o; }
    friend bool operator==(GFp a, GFp b) { return a.v_ == b.v_; }
    friend bool operator!=(GFp a, GFp b) { return a.v_ != b.v_; }

    GFp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
        // extended Euclid
        long long a = v_, b = modulus(), x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return GFp(x0);
    }

private:
    long long v_;
    static long long& modulus_ref() {
        static long long p = 0;
        return p;
    }
};

template <typename K> inline std::string scalar_to_string(const K& x);

template <> inline std::string scalar_to_string<Rational>(const Rational& x) {
    return x.str();
}
template <> inline std::string scalar_to_string<GFp>(const GFp& x) {
    return std::to_string(x.value());
}

/// Parses "n", "-n" or "n/d" (integer fraction, field-agnostic input format).
template <typename K>
K parse_scalar(const std::string& text) {
    auto slash = text.find('/');
    auto to_ll = [](const std::string& s) -> long long {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
        return v;
    };
    if (slash == std::string::npos) return K(to_ll(text));
    long long num = to_ll(text.substr(0, slash));
    long long den = to_ll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return K(num) / K(den);
}

} // namespace catalg
