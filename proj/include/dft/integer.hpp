#ifndef DFT_INTEGER_HPP
#define DFT_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dft/errors.hpp"

namespace dft {

// GMP supplies the sign-magnitude bignum representation; everything in the
// project goes through these aliases and helpers.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long int_gcd_l(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long p_valuation(const Integer& m, const Integer& p) {
    if (m == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "valuation of zero");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Deterministic primality: Miller-Rabin with a fixed base set proven complete
/// below 2^64, probabilistic (mpz_probab_prime_p) above.
bool is_prime(const Integer& n);

/// Prime factorization of |m| by trial division plus Brent's cycle variant of
/// Pollard rho. Keys ascending.
std::map<Integer, unsigned long> factorize(const Integer& m);

/// Renders a factorization as e.g. "2^4*3^2*5".
std::string factorization_string(const std::map<Integer, unsigned long>& f);

/// Multiplicative order of p modulo n; requires gcd(p, n) = 1.
unsigned long multiplicative_order(const Integer& p, const Integer& n);

}  // namespace dft

#endif
