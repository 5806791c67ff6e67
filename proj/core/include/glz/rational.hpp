// Exact rational arithmetic extended with a positive-infinity marker, used for
// Lebesgue exponents and their conjugates. All boundary dispatch in the space
// algebra compares these exactly; no floating point is involved.
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace glz {

class ExtendedRational {
public:
    constexpr ExtendedRational() : num_(0), den_(1), inf_(false) {}
    constexpr ExtendedRational(std::int64_t n) : num_(n), den_(1), inf_(false) {}
    ExtendedRational(std::int64_t n, std::int64_t d) : num_(n), den_(d), inf_(false) {
        normalize();
    }

    static constexpr ExtendedRational infinity() {
        ExtendedRational r;
        r.inf_ = true;
        r.num_ = 1;
        return r;
    }

    // Accepts "p", "-p", "p/q" and "inf"/"+inf"/"infinity".
    static ExtendedRational parse(const std::string& text);

    constexpr bool is_inf() const { return inf_; }
    std::int64_t num() const { require_finite(); return num_; }
    std::int64_t den() const { require_finite(); return den_; }

    bool is_zero() const { return !inf_ && num_ == 0; }
    bool is_negative() const { return !inf_ && num_ < 0; }
    bool is_positive() const { return inf_ || num_ > 0; }
    bool is_integer() const { return !inf_ && den_ == 1; }

    double to_double() const {
        if (inf_) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Hoelder conjugate: 1' = inf, inf' = 1, otherwise q/(q-1). Defined for
    // exponents >= 1 only.
    ExtendedRational conjugate() const {
        if (inf_) return ExtendedRational(1);
        if (*this < ExtendedRational(1))
            throw std::domain_error("conjugate exponent needs q >= 1");
        if (num_ == den_) return infinity();
        return ExtendedRational(num_, num_ - den_);
    }

    // 1/q with the convention 1/inf = 0. Throws on 1/0.
    ExtendedRational reciprocal() const {
        if (inf_) return ExtendedRational(0);
        if (num_ == 0) throw std::domain_error("reciprocal of zero");
        return ExtendedRational(den_, num_);
    }

    ExtendedRational operator-() const {
        if (inf_) throw std::domain_error("negating infinity");
        ExtendedRational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtendedRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) {
        if (b.inf_) throw std::domain_error("subtracting infinity");
        if (a.inf_) return infinity();
        return ExtendedRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.inf_ || b.inf_) {
            const ExtendedRational& fin = a.inf_ ? b : a;
            if (!fin.inf_ && !fin.is_positive())
                throw std::domain_error("infinity times non-positive");
            return infinity();
        }
        return ExtendedRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ExtendedRational operator/(const ExtendedRational& a, const ExtendedRational& b) {
        return a * b.reciprocal();
    }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
    friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
    friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

private:
    void require_finite() const {
        if (inf_) throw std::domain_error("finite value required");
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
    bool inf_;
};

using Rational = ExtendedRational;

inline ExtendedRational ExtendedRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "Inf")
        return infinity();
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return ExtendedRational(n);
        }
        const std::int64_t n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        const std::int64_t d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument(s);
        return ExtendedRational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

}  // namespace glz
