#pragma once

#include "algdct/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace algdct {

// A dyadic rational m / 2^j in [0, 1], kept in lowest terms (m odd unless the
// value is 0 or 1).  These index every angle in the artifact: skew parameters,
// root angles t (meaning the angle t*pi), and cosine constants 2cos(t*pi).
class Dyadic {
public:
    Dyadic() : num_(0), log2_den_(0) {}

    /// num / 2^log2_den, canonicalized.  Requires 0 <= value <= 1.
    Dyadic(std::int64_t num, int log2_den) : num_(num), log2_den_(log2_den) {
        if (num_ < 0 || log2_den_ < 0 || log2_den_ > 62)
            throw std::domain_error("dyadic: out of range");
        while (num_ % 2 == 0 && num_ != 0 && log2_den_ > 0) {
            num_ /= 2;
            --log2_den_;
        }
        if (num_ == 0) log2_den_ = 0;
        if (num_ > (std::int64_t(1) << log2_den_))
            throw std::domain_error("dyadic: value exceeds 1");
        if (num_ == (std::int64_t(1) << log2_den_)) { num_ = 1; log2_den_ = 0; }
    }

    /// Exact conversion from a general rational; rejects non-dyadic input.
    static Dyadic from_rational(const Rational& q) {
        if (q < 0 || q > 1) throw std::domain_error("dyadic: value outside [0, 1]");
        Integer den = denominator(q);
        int j = 0;
        while (den % 2 == 0) { den /= 2; ++j; }
        if (den != 1)
            throw std::domain_error("dyadic: denominator of '" + rational_to_short_string(q) +
                                    "' is not a power of two");
        if (j > 62 || numerator(q) > (Integer(1) << 62))
            throw std::domain_error("dyadic: out of range");
        return Dyadic(numerator(q).convert_to<std::int64_t>(), j);
    }

    /// Parse exact dyadic text: "m/2^j", "m/d" with d a power of two, "0", "1".
    static Dyadic parse(const std::string& text) {
        const auto caret = text.find("2^");
        const auto slash = text.find('/');
        if (caret != std::string::npos && slash != std::string::npos && caret == slash + 1) {
            const std::int64_t m = std::stoll(text.substr(0, slash));
            const int j = std::stoi(text.substr(caret + 2));
            if (m < 0 || j < 0 || j > 62) throw std::domain_error("dyadic: out of range");
            return Dyadic(m, j);
        }
        return from_rational(parse_rational(text));
    }

    std::int64_t num() const { return num_; }
    int log2_den() const { return log2_den_; }
    std::int64_t den() const { return std::int64_t(1) << log2_den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && log2_den_ == 0; }
    bool is_endpoint() const { return is_zero() || is_one(); }

    /// value / 2 (exact; stays in [0, 1]).
    Dyadic half() const { return Dyadic(num_, log2_den_ + 1); }
    /// 1 - value/2 (the second child of a skew split; numerator stays odd).
    Dyadic one_minus_half() const {
        return Dyadic((std::int64_t(2) << log2_den_) - num_, log2_den_ + 1);
    }
    /// 1 - value.
    Dyadic complement() const { return Dyadic(den() - num_, log2_den_); }

    Rational to_rational() const { return make_rational(num_, den()); }
    double to_double() const { return double(num_) / double(den()); }

    /// Canonical plain-fraction text ("1/2", "3/4", "0", "1").
    std::string str() const {
        if (log2_den_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den());
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.log2_den_ == b.log2_den_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        // Compare m1/2^j1 < m2/2^j2 on a common power-of-two denominator.
        const int j = std::max(a.log2_den_, b.log2_den_);
        return (a.num_ << (j - a.log2_den_)) < (b.num_ << (j - b.log2_den_));
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }

private:
    std::int64_t num_;
    int log2_den_;
};

} // namespace algdct
