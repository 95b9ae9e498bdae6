#ifndef TORIC_RATIONAL_HPP
#define TORIC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "toric/errors.hpp"

namespace toric {

// All polyhedral computation in this library is exact; floating point is
// confined to the tduality/kernels side.
using Rational = boost::multiprecision::mpq_rational;
using Int = long long;

using IVec = std::vector<Int>;       // lattice vector (point of N or M)
using QVec = std::vector<Rational>;  // rational vector (point of N_R or M_R)
using IMat = std::vector<IVec>;      // row-major integer matrix
using QMat = std::vector<QVec>;      // row-major rational matrix

inline QVec to_rational(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline std::vector<double> to_double(const QVec& v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].convert_to<double>();
    return out;
}

/// Natural pairing <m, y> between dual vectors, exact.
inline Rational pairing(const QVec& m, const QVec& y) {
    require(m.size() == y.size(), ErrorCode::DimensionMismatch,
            "pairing: dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * y[i];
    return s;
}

inline Rational pairing(const QVec& m, const IVec& y) {
    require(m.size() == y.size(), ErrorCode::DimensionMismatch,
            "pairing: dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * y[i];
    return s;
}

inline Int pairing(const IVec& m, const IVec& y) {
    require(m.size() == y.size(), ErrorCode::DimensionMismatch,
            "pairing: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * y[i];
    return s;
}

inline bool is_zero(const IVec& v) {
    for (Int x : v) if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const Rational& x : v) if (x != 0) return false;
    return true;
}

inline IVec negate(const IVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline QVec negate(const QVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline IVec add(const IVec& a, const IVec& b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "add: dimension mismatch");
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec add(const QVec& a, const QVec& b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "add: dimension mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec sub(const QVec& a, const QVec& b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "sub: dimension mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline QVec scale(const Rational& t, const QVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
    return out;
}

inline Int gcd_all(const IVec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

/// Divide out the content; the zero vector is left unchanged.
inline IVec primitivize(const IVec& v) {
    Int g = gcd_all(v);
    if (g <= 1) return v;
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

/// Scale a rational vector to its primitive integer multiple (v must be nonzero).
inline IVec primitive_integer_direction(const QVec& v) {
    boost::multiprecision::mpz_int lcm_den = 1;
    for (const Rational& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<boost::multiprecision::mpz_int> z(v.size());
    boost::multiprecision::mpz_int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        z[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, z[i]);
    }
    require(g != 0, ErrorCode::BadInput, "primitive_integer_direction: zero vector");
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = (z[i] / g).convert_to<Int>();
    return out;
}

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

inline bool is_integral(const QVec& v) {
    for (const Rational& x : v) if (!is_integral(x)) return false;
    return true;
}

inline Rational rational_floor(const Rational& x) {
    boost::multiprecision::mpz_int q, r;
    boost::multiprecision::divide_qr(numerator(x), denominator(x), q, r);
    if (r != 0 && x < 0) --q;
    return Rational(q);
}

inline Int floor_int(const Rational& x) {
    return rational_floor(x).convert_to<Int>();
}

inline Int ceil_int(const Rational& x) { return -floor_int(-x); }

inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    if (denominator(x) == 1) os << numerator(x);
    else os << numerator(x) << "/" << denominator(x);
    return os.str();
}

inline std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << to_string(v[i]);
    }
    os << ")";
    return os.str();
}

inline std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

/// Parse "p/q" or "p" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(boost::multiprecision::mpz_int(text));
        boost::multiprecision::mpz_int num(text.substr(0, slash));
        boost::multiprecision::mpz_int den(text.substr(slash + 1));
        require(den != 0, ErrorCode::BadInput, "rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const ToricError&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "not a rational: '" + text + "'");
    }
}

}  // namespace toric

#endif
