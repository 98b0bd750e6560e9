#ifndef K3LAT_ARITH_HPP
#define K3LAT_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace k3lat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Residue in [0, |b|).
inline Int mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += abs(b);
    return r;
}

inline bool divides(const Int& d, const Int& a) { return d != 0 && a % d == 0; }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// g = a*x + b*y with g = gcd(a,b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
        Int x2 = x0 - q * x1; x0 = x1; x1 = x2;
        Int y2 = y0 - q * y1; y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return r0;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod(a, m), m, x, y);
    if (g != 1) throw invalid_input("mod_inverse: arguments are not coprime");
    return mod(x, m);
}

// Miller-Rabin with the witness set that is deterministic for n < 3.3e24,
// in particular for all 64-bit inputs.  Larger inputs get a strong
// probable-prime answer, which is all the desk-scale callers need.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Trial-division factorization, adequate at desk scale.  Returns (prime,
// exponent) pairs in increasing prime order.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n == 0) throw invalid_input("factorize: zero input");
    n = abs(n);
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    const Int cap = 100000000; // 1e8: covers n up to 1e16 before bailing
    for (Int p = 5; p * p <= n; p += 6) {
        if (p > cap) {
            if (is_prime(n)) break;
            throw capacity_error("factorize: input beyond trial-division range");
        }
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// Legendre symbol (x/p) for odd prime p, by Euler's criterion.
inline int legendre(const Int& x, const Int& p) {
    if (p <= 2 || !is_prime(p)) throw invalid_input("legendre: p must be an odd prime");
    Int a = mod(x, p);
    if (a == 0) return 0;
    Int e = boost::multiprecision::powm(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Nonnegative Jacobi-symbol style wrapper used by the Gauss-sum tables:
// (x/m) for odd m > 0 via multiplicativity over prime factors.
inline int jacobi(Int x, Int m) {
    if (m <= 0 || m % 2 == 0) throw invalid_input("jacobi: modulus must be odd positive");
    x = mod(x, m);
    int sign = 1;
    for (const auto& [p, e] : factorize(m)) {
        if (e % 2 == 0) continue;
        int s = legendre(x, p);
        if (s == 0) return 0;
        sign *= s;
    }
    return sign;
}

namespace detail {

// Tonelli-Shanks square root mod an odd prime; nullopt when a is a
// nonresidue.  Assumes gcd(a, p) = 1.
inline std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod(a0, p);
    if (p == 2) return a;
    if (legendre(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return boost::multiprecision::powm(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m = s, c = boost::multiprecision::powm(z, q, p);
    Int t = boost::multiprecision::powm(a, q, p);
    Int r = boost::multiprecision::powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        Int i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

} // namespace detail

// Smallest z >= 0 with z^2 = a mod m, for odd squarefree m and gcd(a,m)=1;
// nullopt when some prime factor refuses.  Per-prime Tonelli-Shanks glued
// by CRT; the minimum over all sign choices makes the answer canonical.
inline std::optional<Int> sqrt_mod(const Int& a, const Int& m) {
    if (m <= 0 || m % 2 == 0 || !is_squarefree(m))
        throw invalid_input("sqrt_mod: modulus must be odd, positive and squarefree");
    if (gcd(mod(a, m), m) != 1)
        throw invalid_input("sqrt_mod: gcd(a, m) must be 1");
    std::vector<Int> primes, roots;
    for (const auto& [p, e] : factorize(m)) {
        auto r = detail::sqrt_mod_prime(a, p);
        if (!r) return std::nullopt;
        primes.push_back(p);
        roots.push_back(*r);
    }
    // All solutions mod m are CRT combinations of +-root per prime.
    std::optional<Int> best;
    const size_t k = primes.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        Int x = 0, mm = 1;
        for (size_t i = 0; i < k; ++i) {
            Int ri = (mask >> i & 1) ? mod(-roots[i], primes[i]) : roots[i];
            // x = x (mod mm), x = ri (mod primes[i])
            Int t = mod((ri - x) * mod_inverse(mm, primes[i]), primes[i]);
            x += mm * t;
            mm *= primes[i];
        }
        if (!best || x < *best) best = x;
    }
    return best;
}

// Residue class value + modulus*Z with 0 <= value < modulus.
class ResidueClass {
public:
    ResidueClass(const Int& value, const Int& modulus)
        : m_(modulus), v_(mod(value, modulus)) {
        if (modulus <= 0) throw invalid_input("ResidueClass: modulus must be positive");
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return m_; }

    ResidueClass operator+(const ResidueClass& o) const { return {v_ + check(o).v_, m_}; }
    ResidueClass operator-(const ResidueClass& o) const { return {v_ - check(o).v_, m_}; }
    ResidueClass operator*(const ResidueClass& o) const { return {v_ * check(o).v_, m_}; }
    ResidueClass inverse() const { return {mod_inverse(v_, m_), m_}; }

    bool operator==(const ResidueClass& o) const { return m_ == o.m_ && v_ == o.v_; }

private:
    const ResidueClass& check(const ResidueClass& o) const {
        if (o.m_ != m_) throw invalid_input("ResidueClass: mixed moduli");
        return o;
    }
    Int m_, v_;
};

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace k3lat

#endif
