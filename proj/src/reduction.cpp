#include "dft/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dft {

namespace {

constexpr size_t kSubsetLimit = 20;
constexpr size_t kValueBitGuard = 8192;

}  // namespace

DInvariant d_invariant(const ValencyType& t, DVariant variant, size_t omit_slot) {
    const size_t n = t.n();
    if (n > kSubsetLimit)
        throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "too many subsets for d-invariant");
    if (variant == DVariant::OMIT && omit_slot >= n)
        throw DomainError(ErrorTag::DEGENERATE_INPUT, "omit slot out of range");

    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
        if (!(variant == DVariant::OMIT && i == omit_slot)) idx.push_back(i);
    const size_t m = idx.size();
    const size_t full = (size_t(1) << m) - 1;

    // Multiplicity of each subset sum; sums are at most N, so factoring the
    // distinct values once is cheap no matter how many subsets there are.
    std::map<Integer, unsigned long> sums;
    for (size_t mask = 1; mask <= full; ++mask) {
        if (variant == DVariant::PROPER && mask == full) continue;
        Integer s = 0;
        for (size_t b = 0; b < m; ++b)
            if (mask & (size_t(1) << b)) s += t.a[idx[b]];
        ++sums[s];
    }

    DInvariant r;
    Integer value = 1;
    bool tracked = true;
    for (const auto& [s, count] : sums) {
        for (const auto& [q, e] : factorize(s)) r.prime_support.insert(q);
        if (tracked) {
            for (unsigned long c = 0; c < count && tracked; ++c) {
                value *= s;
                if (mpz_sizeinbase(value.get_mpz_t(), 2) > kValueBitGuard) tracked = false;
            }
        }
    }
    if (tracked) r.value = value;
    return r;
}

PrimeClassification classify_prime(const ValencyType& t, const Integer& p) {
    PrimeClassification c;
    DInvariant d = d_invariant(t, DVariant::FULL);
    if (!d.prime_support.count(p)) {
        c.good = true;
        return c;
    }
    for (size_t i = 0; i < t.n(); ++i) {
        if (t.a[i] % p != 0) continue;
        DInvariant di = d_invariant(t, DVariant::OMIT, i);
        if (!di.prime_support.count(p)) c.ai_regular.push_back(i);
    }
    if (t.N() % p == 0) {
        DInvariant dinf = d_invariant(t, DVariant::PROPER);
        if (!dinf.prime_support.count(p)) c.regular_at_infinity = true;
    }
    c.wild_unclassified = c.ai_regular.empty() && !c.regular_at_infinity;
    return c;
}

unsigned long h_p(unsigned long n, const Integer& p) {
    if (n < 1) throw DomainError(ErrorTag::DEGENERATE_INPUT, "h_p needs n >= 1");
    unsigned long h = 1;
    Integer q = p;
    while (q <= Integer(n)) {
        q *= p;
        ++h;
    }
    return h;
}

std::optional<std::vector<size_t>> p_congruent(const ValencyType& t1, const ValencyType& t2,
                                               const Integer& p, bool strict) {
    const size_t n = t1.n();
    if (t2.n() != n) return std::nullopt;
    const Integer ph = int_pow(p, h_p(n, p));
    auto residue = [&](const Integer& a) {
        Integer r = a % ph;
        if (r < 0) r += ph;
        return r;
    };

    std::vector<size_t> perm(n);
    if (!strict) {
        // Match slots greedily inside residue classes.
        std::map<Integer, std::vector<size_t>> pool;
        for (size_t j = 0; j < n; ++j) pool[residue(t2.a[j])].push_back(j);
        for (size_t i = 0; i < n; ++i) {
            auto it = pool.find(residue(t1.a[i]));
            if (it == pool.end() || it->second.empty()) return std::nullopt;
            perm[i] = it->second.back();
            it->second.pop_back();
        }
        return perm;
    }
    // Strict: pair equal-value classes with equal residue and equal size.
    std::map<Integer, std::vector<size_t>> cls1, cls2;
    for (size_t i = 0; i < n; ++i) cls1[t1.a[i]].push_back(i);
    for (size_t j = 0; j < n; ++j) cls2[t2.a[j]].push_back(j);
    std::map<std::pair<Integer, size_t>, std::vector<const std::vector<size_t>*>> pool;
    for (const auto& [v, slots] : cls2) pool[{residue(v), slots.size()}].push_back(&slots);
    for (const auto& [v, slots] : cls1) {
        auto it = pool.find({residue(v), slots.size()});
        if (it == pool.end() || it->second.empty()) return std::nullopt;
        const auto* target = it->second.back();
        it->second.pop_back();
        for (size_t k = 0; k < slots.size(); ++k) perm[slots[k]] = (*target)[k];
    }
    return perm;
}

ValencyType reduce_type_mod_p(const ValencyType& t, const Integer& p) {
    const Integer ph = int_pow(p, h_p(t.n(), p));
    std::vector<Integer> b;
    b.reserve(t.n());
    for (const auto& a : t.a) {
        Integer r = a % ph;
        if (r <= 0) r += ph;
        b.push_back(r);
    }
    return ValencyType(std::move(b));
}

namespace {

std::vector<unsigned long> valency_class_sizes(const ValencyType& t,
                                               std::optional<size_t> omit) {
    std::map<Integer, unsigned long> cls;
    for (size_t j = 0; j < t.n(); ++j)
        if (!omit || j != *omit) ++cls[t.a[j]];
    std::vector<unsigned long> sizes;
    for (const auto& [v, c] : cls) sizes.push_back(c);
    return sizes;
}

}  // namespace

RamificationIndex combinatorial_ramification_index(const ValencyType& t, Locus locus, size_t slot,
                                                   const Integer& p) {
    const size_t n = t.n();
    PrimeClassification c = classify_prime(t, p);
    RamificationIndex r;
    if (locus == Locus::ZERO) {
        if (std::find(c.ai_regular.begin(), c.ai_regular.end(), slot) == c.ai_regular.end())
            throw DomainError(ErrorTag::NOT_REGULAR, "p is not a_i-regular at this slot");
        r.class_sizes = valency_class_sizes(t, slot);
        r.h = p_valuation(t.a[slot], p);
        // n_0 Z = sum of n_j Z
        unsigned long n0 = 0;
        for (auto s : r.class_sizes) n0 = std::gcd(n0, s);
        r.n0 = n0;
    } else {
        if (!c.regular_at_infinity)
            throw DomainError(ErrorTag::NOT_REGULAR, "p is not regular at infinity");
        r.class_sizes = valency_class_sizes(t, std::nullopt);
        r.h = p_valuation(t.N(), p);
        // n_0 Z = sum n_i n_j Z (i != j) + sum n_i (n_i - 1) Z
        unsigned long n0 = 0;
        for (size_t i = 0; i < r.class_sizes.size(); ++i) {
            for (size_t j = i + 1; j < r.class_sizes.size(); ++j)
                n0 = std::gcd(n0, r.class_sizes[i] * r.class_sizes[j]);
            n0 = std::gcd(n0, r.class_sizes[i] * (r.class_sizes[i] - 1));
        }
        r.n0 = n0;
    }
    r.e = (n - 1) / std::gcd((unsigned long)(n - 1), r.h * r.n0);
    return r;
}

Integer cyclotomic_orbit_count(const ValencyType& t, const Integer& p) {
    const size_t n = t.n();
    for (size_t i = 0; i + 1 < n; ++i)
        if (t.a[i] == t.a[i + 1])
            throw DomainError(ErrorTag::NOT_APPLICABLE, "type is not generic");
    if (Integer((unsigned long)n) % p == 0)
        throw DomainError(ErrorTag::NOT_APPLICABLE, "p divides n");
    std::vector<Integer> ones(n, Integer(1));
    if (!p_congruent(t, ValencyType(ones), p, false))
        throw DomainError(ErrorTag::NOT_APPLICABLE, "type is not p-congruent to (1,...,1)");
    unsigned long ord = multiplicative_order(p, Integer((unsigned long)n));
    return factorial((unsigned long)(n - 1)) / Integer(ord);
}

std::vector<RamificationBound> ramification_bound_report(const ValencyType& t, const Integer& p) {
    const size_t n = t.n();
    PrimeClassification c = classify_prime(t, p);
    std::vector<RamificationBound> out;
    for (size_t slot : c.ai_regular) {
        RamificationIndex r = combinatorial_ramification_index(t, Locus::ZERO, slot, p);
        unsigned long upper = (n - 1) / std::gcd((unsigned long)(n - 1), r.h);
        out.push_back({Locus::ZERO, slot, r.e, upper, r.e == upper});
    }
    if (c.regular_at_infinity) {
        RamificationIndex r = combinatorial_ramification_index(t, Locus::INFINITY_, 0, p);
        unsigned long upper = (n - 1) / std::gcd((unsigned long)(n - 1), r.h);
        out.push_back({Locus::INFINITY_, 0, r.e, upper, r.e == upper});
    }
    if (out.empty()) throw DomainError(ErrorTag::NOT_REGULAR, "p is regular at no locus");
    return out;
}

}  // namespace dft
