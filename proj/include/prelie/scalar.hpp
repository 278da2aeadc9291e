#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace prelie {

// Exact rationals, always in lowest terms with a positive denominator.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        pos = 1;
    if (pos == text.size())
        throw ValueError("malformed rational \"" + std::string(whole) + "\"");
    for (std::size_t k = pos; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw ValueError("malformed rational \"" + std::string(whole) + "\"");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits);
}

} // namespace detail

/// Parses "p", "-p" or "p/q". Throws ValueError on a zero denominator or junk.
inline Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(detail::parse_integer(text, text));
    Integer num = detail::parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ValueError("sign in denominator of \"" + std::string(text) + "\"");
    Integer den = detail::parse_integer(den_text, text);
    if (den == 0)
        throw ValueError("zero denominator in \"" + std::string(text) + "\"");
    return Scalar(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& s) { return s.str(); }

} // namespace prelie
