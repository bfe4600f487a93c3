#ifndef CONELAB_RATIONAL_HPP
#define CONELAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conelab {

// expression templates off so Rat behaves like a plain value type
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Renders a rational as "p" or "p/q", the form used in graph JSON.
inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

/// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Int num = Int(head) * den + (tail.empty() ? Int(0) : Int(tail));
        if (neg) num = -num;
        return Rat(num, den);
    }
    return Rat(Int(s));
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace conelab

#endif
