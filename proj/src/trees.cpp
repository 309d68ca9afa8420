#include "dft/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dft/errors.hpp"

namespace dft {

namespace {

constexpr size_t kEnumerationLimit = 10;  // 10! permutations at most

std::vector<Integer> canonical_rotation(const std::vector<Integer>& v) {
    std::vector<Integer> best = v;
    std::vector<Integer> cur = v;
    for (size_t r = 1; r < v.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

unsigned long symmetry_order(const std::vector<Integer>& v) {
    const size_t n = v.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        // period d?
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = v[i] == v[(i + d) % n];
        if (ok) return (unsigned long)(n / d);
    }
    return 1;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::map<Integer, size_t> multiplicities(const ValencyType& t) {
    std::map<Integer, size_t> m;
    for (const auto& v : t.a) ++m[v];
    return m;
}

}  // namespace

ValencyType::ValencyType(std::vector<Integer> v) : a(std::move(v)) {
    if (a.empty()) throw DomainError(ErrorTag::DEGENERATE_INPUT, "empty valency type");
    for (const auto& x : a)
        if (x < 1) throw DomainError(ErrorTag::DEGENERATE_INPUT, "valency < 1");
    std::sort(a.begin(), a.end());
}

Integer ValencyType::N() const {
    Integer s = 0;
    for (const auto& x : a) s += x;
    return s;
}

size_t ValencyType::multiplicity(const Integer& v) const {
    return (size_t)std::count(a.begin(), a.end(), v);
}

std::vector<PlanarTreeClass> enumerate_trees(const ValencyType& t) {
    if (t.n() > kEnumerationLimit)
        throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "necklace enumeration bound exceeded");
    std::vector<Integer> perm = t.a;
    std::set<std::vector<Integer>> seen;
    do {
        seen.insert(canonical_rotation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<PlanarTreeClass> out;
    out.reserve(seen.size());
    for (const auto& neck : seen) out.push_back({neck, symmetry_order(neck)});
    return out;
}

Integer count_trees(const ValencyType& t) {
    const size_t n = t.n();
    auto mult = multiplicities(t);
    Integer total = 0;
    for (size_t g = 1; g <= n; ++g) {
        if (n % g != 0) continue;
        const size_t period = n / g;  // cycle length of the rotation
        bool ok = true;
        Integer fixed = factorial((unsigned long)g);
        for (const auto& [v, m] : mult) {
            if (m % period != 0) {
                ok = false;
                break;
            }
            fixed /= factorial((unsigned long)(m / period));
        }
        if (!ok) continue;
        total += Integer(euler_phi((unsigned long)period)) * fixed;
    }
    return total / Integer((unsigned long)n);
}

Integer normalized_model_count(const ValencyType& t, const PlanarTreeClass& tree) {
    return Integer((unsigned long)t.n()) / Integer(tree.aut_order);
}

Integer ai_normalized_model_count(const ValencyType& t, const PlanarTreeClass& tree, size_t i) {
    if (i >= t.n()) throw DomainError(ErrorTag::DEGENERATE_INPUT, "slot out of range");
    const size_t na = t.multiplicity(t.a[i]);
    if (na % tree.aut_order != 0)
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "aut order does not divide n(a_i)");
    return Integer((unsigned long)(na / tree.aut_order));
}

Integer total_normalized_models(const ValencyType& t) {
    Integer total = factorial((unsigned long)t.n());
    for (const auto& [v, m] : multiplicities(t)) total /= factorial((unsigned long)m);
    return total;
}

}  // namespace dft
