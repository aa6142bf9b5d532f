// tropitac/rational.hpp - exact rationals and Gaussian rationals
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropitac {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown for malformed user-facing literals.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t k = 0;
    bool neg = false;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        neg = s[k] == '-';
        ++k;
    }
    if (k == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    Integer v = 0;
    for (; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        v = v * 10 + (s[k] - '0');
    }
    return neg ? Integer(-v) : v;
}

}  // namespace detail

// Accepts "p", "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, text));
    Integer num = detail::parse_integer(detail::trim(s.substr(0, slash)), text);
    Integer den = detail::parse_integer(detail::trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

inline int sign(const Rational& q) { return q.sign(); }

// Element of Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long long re) : re_(re) {}  // NOLINT: implicit integer literals are convenient
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    Gaussian conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return {-re_, -im_}; }
    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        if (im_ == 0 && o.im_ == 0) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (o.im_ == 0) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }
    Gaussian inverse() const { return Gaussian(1) /= *this; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    // Total order used only for canonical output.
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // "3/2", "2/5i", "(-41/256+19/128i)"
    std::string str() const {
        if (im_ == 0) return to_string(re_);
        std::string imag = im_ == 1 ? "i" : im_ == -1 ? "-i" : to_string(im_) + "i";
        if (re_ == 0) return imag;
        std::string sep = im_ > 0 ? "+" : "";
        return "(" + to_string(re_) + sep + imag + ")";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

// Parses rationals and Gaussian literals such as "i", "-2/5i", "(-41/256+19/128i)".
inline Gaussian parse_gaussian(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = detail::trim(s.substr(1, s.size() - 2));
    if (s.empty()) throw ParseError("empty scalar literal");
    if (s.back() != 'i') return Gaussian(parse_rational(s));
    s.remove_suffix(1);
    // split at the last sign that is not leading
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view t) {
        t = detail::trim(t);
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };
    if (split == std::string_view::npos) return {Rational(0), imag_part(s)};
    return {parse_rational(s.substr(0, split)), imag_part(s.substr(split))};
}

}  // namespace tropitac
