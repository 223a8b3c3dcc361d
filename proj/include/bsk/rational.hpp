#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bsk {

// Exact rational arithmetic for every shifted statistic in the library.
// Floating point is banned from the core: dominance comparisons and the
// integrality tests behind the matching conditions must be exact.
using Rational = boost::rational<long long>;

inline Rational rational(long long num, long long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Round toward -infinity. boost::rational keeps denominator > 0.
inline long long floor_rational(const Rational& q) {
    long long d = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() < 0)
        --d;
    return d;
}

inline long long ceil_rational(const Rational& q) {
    long long d = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() > 0)
        ++d;
    return d;
}

// Canonical "p/q" form with q > 0 and gcd(p,q) = 1; the denominator is
// always written, so "0/1" and "4/1" are the canonical spellings.
inline std::string format_rational(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Accepts "p/q" and plain integers "p". Rejects empty input, junk after
// the number, and zero denominators.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("not a rational: '" + text + "'");
    };
    if (text.empty())
        throw bad();
    std::size_t pos = 0;
    long long num = 0, den = 1;
    try {
        num = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw bad();
    }
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw bad();
        const std::string tail = text.substr(pos + 1);
        std::size_t tail_pos = 0;
        try {
            den = std::stoll(tail, &tail_pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (tail_pos != tail.size())
            throw bad();
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

}  // namespace bsk
