#ifndef HIDELAB_RATIONAL_HPP
#define HIDELAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hidelab {

// Exact rational arithmetic. All state-vector algebra, Gram inversion and
// feasibility verdicts run on this type; doubles only enter in the dense
// backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Thrown for inputs that are well-formed but outside the supported domain
// (invalid states, infeasible specs, size guards). The CLI maps it to exit
// code 2.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical "p/q" form, q >= 1, gcd-reduced (handled by cpp_rational).
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw invalid_input("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw invalid_input("malformed rational: " + s);
    }
}

}  // namespace hidelab

#endif
