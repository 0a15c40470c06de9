// Exact arbitrary-precision integers and rationals used throughout the
// library. Every average-range value is an ExactRational; no computation
// in the library rounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lipwalk {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator. Canonical form is maintained
// by the underlying boost rational adaptor: gcd(|num|, den) == 1, den > 0,
// zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long n) : v_(n) {}  // NOLINT: implicit by design
    ExactRational(const BigInt& n) : v_(n) {}
    ExactRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
        v_ = Rep(num, den);
    }

    // Accepts "p/q" or a bare integer "p".
    static ExactRational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return ExactRational(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        return ExactRational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return denominator() == 1; }

    // Always "p/q", e.g. "227/81", "2/1", "0/1".
    std::string str() const { return numerator().str() + "/" + denominator().str(); }

    // Floating approximation; presentation-layer only.
    double approx() const { return v_.convert_to<double>(); }

    ExactRational operator-() const { return ExactRational(Rep(-v_)); }

    ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.v_ == 0) throw std::invalid_argument("ExactRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r);

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit ExactRational(Rep v) : v_(std::move(v)) {}
    Rep v_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.str();
}

inline BigInt big_pow(unsigned base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

// Converts the unsigned 128-bit accumulators used by the enumeration core.
inline BigInt big_from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    BigInt lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}

}  // namespace lipwalk
