#include "dft/integer.hpp"

#include <cstdint>

namespace dft {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n odd composite, not a prime power of a
// small prime (trial division already ran).
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1, q = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    u64 diff = x > y ? x - y : y - x;
                    if (diff == 0) {
                        // Hare met the tortoise: cycle exhausted, retry with
                        // the next iteration constant.
                        d = n;
                        break;
                    }
                    q = mulmod(q, diff, n);
                }
                if (d == 1) d = std::__gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (d == n) {
            // Backtrack one step at a time.
            d = 1;
            u64 y2 = ys;
            while (d == 1) {
                y2 = (mulmod(y2, y2, n) + c) % n;
                u64 diff = x > y2 ? x - y2 : y2 - x;
                d = std::__gcd(diff == 0 ? n : diff, n);
            }
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_u64(u64 n, std::map<Integer, unsigned long>& out) {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                  41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull,
                  89ull, 97ull}) {
        while (n % p == 0) {
            ++out[Integer((unsigned long)p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        ++out[Integer((unsigned long)n)];
        return;
    }
    u64 d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) || n.fits_ulong_p()) {
        return miller_rabin_u64(n.get_ui());
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // Doesn't fit unsigned long only on exotic ABIs; fall through.
        u64 v = 0;
        mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
        return miller_rabin_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::map<Integer, unsigned long> factorize(const Integer& m) {
    if (m == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "factorize(0)");
    std::map<Integer, unsigned long> out;
    Integer n = abs(m);
    if (n == 1) return out;
    if (n.fits_ulong_p()) {
        factor_u64(n.get_ui(), out);
        return out;
    }
    // Large inputs: peel small primes, then GMP-assisted rho on the remainder.
    for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
        if (n == 1) return out;
        if (n.fits_ulong_p()) {
            factor_u64(n.get_ui(), out);
            return out;
        }
    }
    // Remainder is big; recursive rho over mpz.
    struct Rho {
        static void run(Integer n, std::map<Integer, unsigned long>& out) {
            if (n == 1) return;
            if (is_prime(n)) {
                ++out[n];
                return;
            }
            Integer c = 1;
            while (true) {
                Integer x = 2, y = 2, d = 1;
                while (d == 1) {
                    x = (x * x + c) % n;
                    y = (y * y + c) % n;
                    y = (y * y + c) % n;
                    d = int_gcd(abs(x - y), n);
                }
                if (d != n) {
                    run(d, out);
                    run(n / d, out);
                    return;
                }
                c += 1;
            }
        }
    };
    Rho::run(n, out);
    return out;
}

std::string factorization_string(const std::map<Integer, unsigned long>& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f) {
        if (!s.empty()) s += "*";
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

unsigned long multiplicative_order(const Integer& p, const Integer& n) {
    if (int_gcd(p, n) != 1)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "multiplicative_order: gcd != 1");
    Integer x = p % n;
    if (x < 0) x += n;
    Integer acc = x;
    unsigned long ord = 1;
    while (acc != 1) {
        acc = acc * x % n;
        ++ord;
    }
    return ord;
}

}  // namespace dft
