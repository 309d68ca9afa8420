#include "dft/fqsolver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dft {

namespace {

constexpr std::uint64_t kFieldBound = 1u << 16;
constexpr std::uint64_t kWorkBound = 1u << 24;
constexpr size_t kMaxSlots = 6;

void check_tame(const ValencyType& t, const Integer& p) {
    Integer m = Integer((unsigned long)t.n()) * t.N();
    for (const auto& a : t.a) m *= a;
    if (m % p == 0) throw DomainError(ErrorTag::WILD_PRIME, "p divides n*a_1...a_n*N");
}

/// Sorts roots inside maximal runs of equal exponents (type is ascending, so
/// runs are contiguous); the canonical tuple is the dedup key.
void canonicalize_blocks(const GF& F, const ValencyType& t, std::vector<GFElem>& roots) {
    size_t i = 0;
    while (i < roots.size()) {
        size_t j = i + 1;
        while (j < roots.size() && t.a[j] == t.a[i]) ++j;
        std::sort(roots.begin() + i, roots.begin() + j,
                  [&](const GFElem& x, const GFElem& y) { return F.index_of(x) < F.index_of(y); });
        i = j;
    }
}

std::vector<std::uint64_t> tuple_key(const GF& F, const std::vector<GFElem>& roots) {
    std::vector<std::uint64_t> k;
    k.reserve(roots.size());
    for (const auto& r : roots) k.push_back(F.index_of(r));
    return k;
}

/// Full condition check used to re-verify every solution independently of the
/// search path: psi-system when p <= n, phi-system otherwise.
bool is_solution(const GFRing& ring, const Model<GFRing>& m, bool wild_factorials) {
    const size_t n = m.n();
    for (size_t k = 1; k < n; ++k) {
        if (wild_factorials) {
            if (!ring.is_zero(psi(ring, k, m))) return false;
        } else {
            if (!ring.is_zero(phi(ring, k, m))) return false;
        }
    }
    return true;
}

}  // namespace

SolveResult solve_over_fq(const ValencyType& t, const Integer& p, unsigned k) {
    const size_t n = t.n();
    if (n < 2 || n > kMaxSlots)
        throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "slot count outside 2..6");
    check_tame(t, p);
    if (p.fits_ulong_p() == 0)
        throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "characteristic too large");
    GFPtr F = GF::make(p.get_ui(), k);
    const std::uint64_t q = F->order();
    if (q > kFieldBound) throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "field beyond 2^16");
    std::uint64_t work = 1;
    for (size_t i = 0; i + 2 < n; ++i) {
        work *= (q - 1);
        if (work > kWorkBound) throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "search too large");
    }

    GFRing ring{F};
    const bool wild_factorials = p <= Integer((unsigned long)n);  // p | (n-1)! possible
    std::vector<GFElem> coef(n);
    for (size_t i = 0; i < n; ++i) coef[i] = F->from_int(t.a[i]);
    const GFElem an1_inv = F->inv(coef[n - 2]);

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Model<GFRing>> out;

    auto emit_class = [&](const std::vector<GFElem>& rep) {
        // All normalized tuples of the scaling class of `rep`.
        for (size_t i = 0; i < n; ++i) {
            GFElem s = F->inv(rep[i]);
            std::vector<GFElem> scaled(n);
            for (size_t j = 0; j < n; ++j) scaled[j] = F->mul(s, rep[j]);
            canonicalize_blocks(*F, t, scaled);
            if (!seen.insert(tuple_key(*F, scaled)).second) continue;
            Model<GFRing> m{t, scaled, ModelKind::NORMALIZED, 0};
            if (!is_solution(ring, m, wild_factorials))
                throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "rescaling broke a solution");
            out.push_back(std::move(m));
        }
    };

    // Enumerate x_1..x_{n-2} in F_q^*, fix x_n = 1, solve x_{n-1} from phi_1.
    std::vector<std::uint64_t> idx(n >= 2 ? n - 2 : 0, 1);
    std::vector<GFElem> x(n);
    x[n - 1] = F->one();
    bool running = true;
    while (running) {
        for (size_t i = 0; i + 2 < n; ++i) x[i] = F->from_index(idx[i]);
        GFElem s = coef[n - 1];  // a_n * 1
        for (size_t i = 0; i + 2 < n; ++i) s = F->add(s, F->mul(coef[i], x[i]));
        x[n - 2] = F->neg(F->mul(an1_inv, s));
        bool ok = !F->is_zero(x[n - 2]);
        for (size_t i = 0; ok && i < n; ++i)
            for (size_t j = i + 1; ok && j < n; ++j)
                if (x[i] == x[j]) ok = false;
        if (ok) {
            Model<GFRing> probe{t, x, ModelKind::NORMALIZED, 0};
            if (is_solution(ring, probe, wild_factorials)) emit_class(x);
        }
        // next tuple
        running = false;
        for (size_t i = 0; i + 2 < n; ++i) {
            if (++idx[i] < q) {
                running = true;
                break;
            }
            idx[i] = 1;
        }
        if (n == 2) break;
    }

    std::sort(out.begin(), out.end(), [&](const Model<GFRing>& a, const Model<GFRing>& b) {
        return tuple_key(*F, a.roots) < tuple_key(*F, b.roots);
    });
    return {F, std::move(out)};
}

namespace {

unsigned tuple_degree(const GF& F, const std::vector<GFElem>& roots) {
    unsigned d = 1;
    for (const auto& r : roots) d = std::lcm(d, F.degree_of(r));
    return d;
}

}  // namespace

OrbitReport orbit_report(const ValencyType& t, const Integer& p, unsigned k_max) {
    OrbitReport rep(t, p);
    rep.k_max = k_max;
    rep.predicted_total = total_normalized_models(t);

    SolveResult best;
    unsigned best_k = 0;
    for (unsigned k = 1; k <= k_max; ++k) {
        SolveResult r;
        try {
            r = solve_over_fq(t, p, k);
        } catch (const DomainError& e) {
            if (e.tag() == ErrorTag::SEARCH_TOO_LARGE) break;
            throw;
        }
        if (r.models.size() > best.models.size() || best_k == 0) {
            best = r;
            best_k = k;
        }
        if (Integer((unsigned long)r.models.size()) == rep.predicted_total) {
            rep.complete = true;
            break;
        }
        if (Integer((unsigned long)r.models.size()) > rep.predicted_total)
            throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "more models than predicted");
    }
    if (best_k == 0) throw DomainError(ErrorTag::SEARCH_TOO_LARGE, "no field size searchable");
    rep.k_used = best_k;
    rep.field = best.field;
    rep.models = std::move(best.models);
    const GF& F = *rep.field;
    const size_t n = t.n();

    // Tree partition: scaling classes, keyed by the lexmin canonical rescaling.
    std::map<std::vector<std::uint64_t>, std::vector<size_t>> classes;
    std::map<std::vector<std::uint64_t>, size_t> model_by_key;
    for (size_t mi = 0; mi < rep.models.size(); ++mi)
        model_by_key[tuple_key(F, rep.models[mi].roots)] = mi;
    for (size_t mi = 0; mi < rep.models.size(); ++mi) {
        std::vector<std::uint64_t> tk;
        for (size_t i = 0; i < n; ++i) {
            GFElem s = F.inv(rep.models[mi].roots[i]);
            std::vector<GFElem> scaled(n);
            for (size_t j = 0; j < n; ++j) scaled[j] = F.mul(s, rep.models[mi].roots[j]);
            canonicalize_blocks(F, t, scaled);
            auto key = tuple_key(F, scaled);
            if (tk.empty() || key < tk) tk = key;
        }
        classes[tk].push_back(mi);
    }
    std::map<size_t, size_t> tree_of_model;
    for (const auto& [key, members] : classes) {
        TreeClass tc;
        tc.model_indices = members;
        unsigned d = 0;
        for (size_t mi : members) {
            unsigned dm = tuple_degree(F, rep.models[mi].roots);
            d = d == 0 ? dm : std::min(d, dm);
        }
        tc.splitting_degree = d;
        for (size_t mi : members) tree_of_model[mi] = rep.trees.size();
        rep.trees.push_back(std::move(tc));
    }

    // Frobenius closure on models, induced permutation on trees, orbits.
    std::vector<size_t> frob_tree(rep.trees.size());
    for (size_t ti = 0; ti < rep.trees.size(); ++ti) {
        size_t mi = rep.trees[ti].model_indices.front();
        std::vector<GFElem> fr(n);
        for (size_t j = 0; j < n; ++j) fr[j] = F.frobenius(rep.models[mi].roots[j]);
        canonicalize_blocks(F, t, fr);
        auto it = model_by_key.find(tuple_key(F, fr));
        if (it == model_by_key.end())
            throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY,
                              "Frobenius left the reported model set");
        frob_tree[ti] = tree_of_model[it->second];
    }
    std::vector<bool> done(rep.trees.size(), false);
    for (size_t ti = 0; ti < rep.trees.size(); ++ti) {
        if (done[ti]) continue;
        std::vector<size_t> orbit;
        size_t cur = ti;
        while (!done[cur]) {
            done[cur] = true;
            orbit.push_back(cur);
            cur = frob_tree[cur];
        }
        size_t oid = rep.frobenius_orbits.size();
        for (size_t member : orbit) {
            rep.trees[member].frobenius_orbit = oid;
            rep.trees[member].moduli_degree = orbit.size();
        }
        rep.frobenius_orbits.push_back(std::move(orbit));
    }
    return rep;
}

Char2Census char2_abc_census(const Integer& a, const Integer& b, const Integer& c) {
    if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
        throw DomainError(ErrorTag::WILD_PRIME, "even valency at p = 2");
    Char2Census out;
    out.criterion = (a % 4 == b % 4) && (b % 4 == c % 4);
    out.field = GF::make(2, 2);
    GFRing ring{out.field};
    ValencyType t({a, b, c});

    std::set<std::vector<std::uint64_t>> seen;
    // Roots are {1, x, x+1} with x a generator of F_4; try both generators in
    // every slot assignment, then keep the psi-system solutions.
    std::vector<GFElem> elems = {out.field->from_index(2), out.field->from_index(3)};
    for (const auto& x : elems) {
        GFElem y = out.field->add(x, out.field->one());
        std::vector<GFElem> base = {out.field->one(), x, y};
        std::sort(base.begin(), base.end());
        do {
            std::vector<GFElem> roots = base;
            canonicalize_blocks(*out.field, t, roots);
            if (seen.count(tuple_key(*out.field, roots))) continue;
            Model<GFRing> m{t, roots, ModelKind::NORMALIZED, 0};
            bool ok = true;
            for (size_t k = 1; k < 3 && ok; ++k) ok = ring.is_zero(psi(ring, k, m));
            if (!ok) continue;
            seen.insert(tuple_key(*out.field, roots));
            out.models.push_back(std::move(m));
        } while (std::next_permutation(base.begin(), base.end()));
    }
    out.nonempty = !out.models.empty();
    return out;
}

SplitModelResult construct_fp_split_model(const Integer& p, const std::vector<Integer>& xs,
                                          const Integer& u) {
    const size_t n = xs.size();
    if (n == 0) throw DomainError(ErrorTag::DEGENERATE_INPUT, "no roots given");
    if (p <= Integer((unsigned long)n))
        throw DomainError(ErrorTag::WILD_PRIME, "need p > n");
    GFPtr F = GF::make(p.get_ui(), 1);
    GFRing ring{F};
    std::vector<GFElem> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = F->from_int(xs[i]);
        if (F->is_zero(x[i])) throw DomainError(ErrorTag::DEGENERATE_INPUT, "root is zero");
        for (size_t j = 0; j < i; ++j)
            if (x[i] == x[j]) throw DomainError(ErrorTag::DEGENERATE_INPUT, "repeated root");
    }
    GFElem uu = F->from_int(u);
    if (F->is_zero(uu)) throw DomainError(ErrorTag::DEGENERATE_INPUT, "u must be a unit");

    std::vector<std::pair<Integer, GFElem>> slots(n);
    for (size_t i = 0; i < n; ++i) {
        GFElem r = uu;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            GFElem f = F->sub(F->one(), F->mul(x[i], F->inv(x[j])));
            if (F->is_zero(f))
                throw DomainError(ErrorTag::DEGENERATE_INPUT, "coincident root ratio");
            r = F->mul(r, F->inv(f));
        }
        if (F->is_zero(r)) throw DomainError(ErrorTag::DEGENERATE_INPUT, "prescribed residue 0");
        slots[i] = {Integer(F->index_of(r)), x[i]};
    }
    std::sort(slots.begin(), slots.end(), [&](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return F->index_of(l.second) < F->index_of(r.second);
    });
    std::vector<Integer> exps;
    std::vector<GFElem> roots;
    for (auto& [e, rt] : slots) {
        exps.push_back(e);
        roots.push_back(rt);
    }
    SplitModelResult res{ValencyType(exps), F,
                         Model<GFRing>{ValencyType(exps), roots, ModelKind::STANDARD, 0},
                         {}};
    for (const auto& r : roots)
        if (r == F->one()) res.model.kind = ModelKind::NORMALIZED;
    res.conditions = check_conditions(ring, res.model);
    if (!res.conditions.iv)
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "condition iv fails");
    if ((res.type.N() - u) % p != 0)
        throw DomainError(ErrorTag::INTERNAL_INCONSISTENCY, "degree residue mismatch");
    return res;
}

}  // namespace dft
