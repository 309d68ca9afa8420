// Command-line front end: exact tree/model computations with text or JSON
// reports. Exit codes: 0 success, 2 usage error, 3 tagged domain error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <sstream>
#include <thread>

#include "dft/families.hpp"
#include "dft/fqsolver.hpp"
#include "dft/lifting.hpp"

using namespace dft;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

// ---- parsing helpers -------------------------------------------------------

ValencyType parse_type(const std::string& s) {
    std::vector<Integer> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--type", "empty component in type");
        try {
            v.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--type", "non-integer component '" + item + "'");
        }
    }
    if (v.empty()) throw CLI::ValidationError("--type", "empty type");
    if (!std::is_sorted(v.begin(), v.end()))
        std::fprintf(stderr, "warning: valency type reordered to ascending\n");
    return ValencyType(std::move(v));
}

// ---- serialization helpers -------------------------------------------------

json type_json(const ValencyType& t) {
    json a = json::array();
    for (const auto& x : t.a) a.push_back(x.get_str());
    return a;
}

json gf_json(const GFPtr& F) {
    return json{{"p", F->p()}, {"k", F->k()}, {"modulus", F->modulus()}};
}

json gf_elem_json(const GFElem& a) { return json(a.c); }

json gf_model_json(const Model<GFRing>& m) {
    json roots = json::array();
    for (const auto& r : m.roots) roots.push_back(gf_elem_json(r));
    return json{{"type", type_json(m.type)}, {"kind", kind_name(m.kind)}, {"roots", roots}};
}

json ring_json(const LocalRingPtr& R) {
    json j{{"p", R->p().get_str()},
           {"precision", R->precision()},
           {"e", R->e()},
           {"f", R->f()}};
    if (R->e() > 1) {
        j["h"] = R->h();
        j["eisenstein_constant"] = R->eisenstein_constant().get_str();
    }
    return j;
}

json ring_elem_json(const LocalRingContext::Elem& a) {
    json t = json::array();
    for (const auto& row : a.t) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.get_str());
        t.push_back(r);
    }
    return json{{"coeffs", t}};
}

json integer_factorization_json(const std::map<Integer, unsigned long>& f) {
    json j = json::array();
    for (const auto& [p, e] : f) j.push_back(json{{"prime", p.get_str()}, {"exponent", e}});
    return j;
}

// ---- text rendering of a report document -----------------------------------

bool scalar_array(const json& j) {
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

std::string inline_scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_text(const json& j, int indent, std::string label) {
    std::string pad(indent * 2, ' ');
    if (j.is_object()) {
        if (!label.empty()) std::printf("%s%s:\n", pad.c_str(), label.c_str());
        for (const auto& [k, v] : j.items()) render_text(v, indent + (label.empty() ? 0 : 1), k);
    } else if (j.is_array() && !scalar_array(j)) {
        std::printf("%s%s: (%zu entries)\n", pad.c_str(), label.c_str(), j.size());
        size_t i = 0;
        for (const auto& v : j) render_text(v, indent + 1, "[" + std::to_string(i++) + "]");
    } else if (j.is_array()) {
        std::string line;
        for (const auto& v : j) line += (line.empty() ? "" : ", ") + inline_scalar(v);
        std::printf("%s%s: [%s]\n", pad.c_str(), label.c_str(), line.c_str());
    } else {
        std::printf("%s%s: %s\n", pad.c_str(), label.c_str(), inline_scalar(j).c_str());
    }
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        render_text(doc, 0, "");
    }
}

// ---- residue-model search helpers ------------------------------------------

std::optional<Model<GFRing>> to_kummer(const GFPtr& F, const Model<GFRing>& m) {
    GFRing gf{F};
    const size_t n = m.n();
    GFElem pn = phi(gf, n, m);
    if (gf.is_zero(pn)) return std::nullopt;
    auto mus = F->nth_roots(gf.inv(pn), n);
    if (mus.empty()) return std::nullopt;
    Model<GFRing> out{m.type, {}, ModelKind::KUMMER, 0};
    for (const auto& r : m.roots) out.roots.push_back(gf.mul(mus.front(), r));
    return out;
}

struct ResidueSearch {
    GFPtr field;
    Model<GFRing> model;
};

ResidueSearch find_residue(const ValencyType& t, const Integer& p, bool kummer,
                           unsigned k_max = 6) {
    for (unsigned k = 1; k <= k_max; ++k) {
        auto res = solve_over_fq(t, p, k);
        if (res.models.empty()) continue;
        if (!kummer) return ResidueSearch{res.field, res.models.front()};
        for (const auto& m : res.models) {
            auto km = to_kummer(res.field, m);
            if (km) return ResidueSearch{res.field, *km};
        }
    }
    throw DomainError(ErrorTag::SEARCH_TOO_LARGE,
                      "no suitable residue model found up to the field bound");
}

// ---- subcommand handlers ---------------------------------------------------

json cmd_trees(const ValencyType& t) {
    json doc{{"schema_version", kSchemaVersion}, {"command", "trees"}};
    doc["type"] = type_json(t);
    doc["degree"] = t.N().get_str();
    doc["tree_count"] = count_trees(t).get_str();
    json trees = json::array();
    for (const auto& tree : enumerate_trees(t)) {
        json necklace = json::array();
        for (const auto& v : tree.necklace) necklace.push_back(v.get_str());
        trees.push_back(json{{"necklace", necklace},
                             {"aut_order", tree.aut_order},
                             {"normalized_models",
                              normalized_model_count(t, tree).get_str()}});
    }
    doc["trees"] = trees;
    doc["total_normalized_models"] = total_normalized_models(t).get_str();
    return doc;
}

json cmd_solve(const ValencyType& t, const Integer& p, unsigned kmax) {
    auto rep = orbit_report(t, p, kmax);
    json doc{{"schema_version", kSchemaVersion}, {"command", "solve"}};
    doc["type"] = type_json(t);
    doc["p"] = p.get_str();
    doc["k_used"] = rep.k_used;
    doc["complete"] = rep.complete;
    doc["predicted_total"] = rep.predicted_total.get_str();
    doc["field"] = gf_json(rep.field);
    json models = json::array();
    for (const auto& m : rep.models) models.push_back(gf_model_json(m));
    doc["models"] = models;
    json trees = json::array();
    for (const auto& tr : rep.trees)
        trees.push_back(json{{"model_indices", tr.model_indices},
                             {"splitting_degree", tr.splitting_degree},
                             {"frobenius_orbit", tr.frobenius_orbit},
                             {"moduli_degree", tr.moduli_degree}});
    doc["trees"] = trees;
    doc["frobenius_orbits"] = rep.frobenius_orbits;
    return doc;
}

json cmd_invariants(const ValencyType& t, const std::optional<Integer>& p) {
    json doc{{"schema_version", kSchemaVersion}, {"command", "invariants"}};
    doc["type"] = type_json(t);
    doc["degree"] = t.N().get_str();
    doc["tree_count"] = count_trees(t).get_str();
    doc["total_normalized_models"] = total_normalized_models(t).get_str();
    auto dj = [](const DInvariant& d) {
        json support = json::array();
        for (const auto& q : d.prime_support) support.push_back(q.get_str());
        json j{{"prime_support", support}};
        if (d.value) j["value"] = d.value->get_str();
        return j;
    };
    doc["d"] = dj(d_invariant(t, DVariant::FULL));
    doc["d_infinity"] = dj(d_invariant(t, DVariant::PROPER));
    if (p) {
        json pj{{"p", p->get_str()}};
        auto cls = classify_prime(t, *p);
        pj["good"] = cls.good;
        pj["ai_regular_slots"] = cls.ai_regular;
        pj["regular_at_infinity"] = cls.regular_at_infinity;
        pj["wild_unclassified"] = cls.wild_unclassified;
        json bounds = json::array();
        try {
            for (const auto& b : ramification_bound_report(t, *p)) {
                json bj{{"locus", b.locus == Locus::ZERO ? "zero" : "infinity"},
                        {"lower", b.lower},
                        {"upper", b.upper},
                        {"totally_determined", b.totally_determined}};
                if (b.locus == Locus::ZERO) bj["slot"] = b.slot;
                bounds.push_back(bj);
            }
        } catch (const DomainError& e) {
            if (e.tag() != ErrorTag::NOT_REGULAR) throw;
        }
        pj["ramification_bounds"] = bounds;
        doc["prime"] = pj;
    }
    return doc;
}

json lift_result_json(const LiftResult& lr) {
    json j{{"ring", ring_json(lr.ring)}, {"precision", lr.precision}};
    json roots = json::array();
    for (const auto& x : lr.lifted.roots) roots.push_back(ring_elem_json(x));
    j["lifted_roots"] = roots;
    j["jacobian_witness"] = ring_elem_json(lr.jacobian_witness);
    j["residue_field"] = gf_json(lr.residue_field);
    j["residue_model"] = gf_model_json(lr.reduction);
    return j;
}

json cmd_lift(const ValencyType& t, const Integer& p, unsigned M, bool kummer) {
    auto rs = find_residue(t, p, kummer);
    LiftResult lr = kummer ? hensel_lift_kummer(rs.field, rs.model, M)
                           : hensel_lift_normalized(rs.field, rs.model, M);
    json doc{{"schema_version", kSchemaVersion}, {"command", "lift"}};
    doc["type"] = type_json(t);
    doc["p"] = p.get_str();
    doc["system"] = kummer ? "kummer-phi" : "normalized-psi";
    doc["result"] = lift_result_json(lr);
    return doc;
}

json cmd_correspondence(const ValencyType& t, const Integer& p, size_t slot,
                        const std::string& locus, unsigned M) {
    if (slot >= t.n()) throw DomainError(ErrorTag::DEGENERATE_INPUT, "slot out of range");
    Locus mode = locus == "zero" ? Locus::ZERO : Locus::INFINITY_;
    std::vector<Integer> red;
    for (size_t j = 0; j < t.n(); ++j)
        if (j != slot) red.push_back(t.a[j]);
    ValencyType rt{std::move(red)};
    auto rs = find_residue(rt, p, /*kummer=*/true);
    auto inv = mode == Locus::ZERO ? phi_inverse(rs.field, rs.model, t, slot, p, M)
                                   : psi_inverse(rs.field, rs.model, t, slot, p, M);
    LocalRing ring{inv.ring};
    json doc{{"schema_version", kSchemaVersion}, {"command", "correspondence"}};
    doc["type"] = type_json(t);
    doc["p"] = p.get_str();
    doc["slot"] = slot;
    doc["locus"] = locus;
    doc["kummer_residue"] = gf_model_json(rs.model);
    doc["ring"] = ring_json(inv.ring);
    json roots = json::array();
    for (const auto& x : inv.model.roots) roots.push_back(ring_elem_json(x));
    doc["model"] = json{{"kind", kind_name(inv.model.kind)}, {"roots", roots}};
    json ys = json::array();
    for (const auto& y : inv.twisted.ys) ys.push_back(ring_elem_json(y));
    doc["twisted_ys"] = ys;
    doc["jacobian_witness"] = ring_elem_json(inv.twisted.jacobian_witness);
    json prof = json::array();
    for (const auto& [j, k, v] : valuation_profile(ring, inv.model, mode, slot))
        prof.push_back(json{{"j", j}, {"k", k}, {"valuation", v}});
    doc["valuation_profile"] = prof;
    return doc;
}

json cmd_family_ab(const Integer& a, const Integer& b) {
    RationalRing Q;
    auto m = family_ab(a, b);
    json doc{{"schema_version", kSchemaVersion}, {"command", "family-ab"}};
    doc["a"] = a.get_str();
    doc["b"] = b.get_str();
    json roots = json::array();
    for (const auto& r : m.roots) roots.push_back(r.get_str());
    doc["roots"] = roots;
    doc["kummer_invariant"] = kummer_invariant(Q, m).get_str();
    auto rec = check_conditions(Q, m);
    doc["conditions"] = json{{"i", rec.i}, {"ii", rec.ii}, {"iii", rec.iii}, {"iv", rec.iv}};
    return doc;
}

json cmd_family_abc(const Integer& a, const Integer& b, const Integer& c,
                    const std::optional<Integer>& p) {
    json doc{{"schema_version", kSchemaVersion}, {"command", "family-abc"}};
    doc["a"] = a.get_str();
    doc["b"] = b.get_str();
    doc["c"] = c.get_str();
    doc["disc"] = family_abc_disc(a, b, c).get_str();
    if (p) {
        auto tri = family_abc_fp_trichotomy(a, b, c, *p);
        const char* tag = tri.tag == AbcCase::EMPTY            ? "empty"
                          : tri.tag == AbcCase::UNIQUE_RATIONAL ? "unique-rational"
                                                                : "split-as-char0";
        json pj{{"p", p->get_str()},
                {"case", tag},
                {"D", tri.D.get_str()},
                {"d", tri.d.get_str()}};
        if (tri.tag == AbcCase::SPLIT_AS_CHAR0) pj["disc_square_mod_p"] = tri.disc_square_mod_p;
        doc["trichotomy"] = pj;
    }
    return doc;
}

json cmd_family_ones_ab(unsigned long n, const Integer& a, const Integer& b,
                        const std::optional<size_t>& root_index) {
    json doc{{"schema_version", kSchemaVersion}, {"command", "family-ones-ab"}};
    doc["n"] = n;
    doc["a"] = a.get_str();
    doc["b"] = b.get_str();
    auto h = family_ones_ab_hpoly(n, a, b);
    json hc = json::array();
    for (const auto& c : h) hc.push_back(c.get_str());
    doc["h"] = hc;
    Integer disc = discriminant(h);
    doc["disc"] = disc.get_str();
    doc["disc_factorization"] = integer_factorization_json(factorize(disc < 0 ? -disc : disc));
    auto rc = family_regularity_constants(n, a, b);
    doc["c"] = rc.c.get_str();
    doc["c_factorization"] = integer_factorization_json(rc.c_factorization);
    doc["u"] = rc.u.get_str();
    doc["u_factorization"] = integer_factorization_json(rc.u_factorization);
    if (root_index) {
        auto m = family_ones_ab_model(n, a, b, *root_index);
        doc["model"] = json{{"root_index", m.root_index},
                            {"root_approx", m.root_approx},
                            {"beta_at_one_zero", m.beta_at_one_zero},
                            {"beta_at_root_inv_zero", m.beta_at_root_inv_zero},
                            {"division_exact", m.division_exact},
                            {"numeric_residual", m.numeric_residual}};
    }
    return doc;
}

json cmd_census(unsigned long nmax, long bmax, unsigned threads) {
    struct Cell {
        unsigned long n;
        long a, b;
    };
    std::vector<Cell> cells;
    for (unsigned long n = 3; n <= nmax; ++n)
        for (long a = 2; a < bmax; ++a)
            for (long b = a + 1; b <= bmax; ++b) cells.push_back({n, a, b});
    std::vector<json> rows(cells.size());
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < cells.size(); i += step) {
            const auto& c = cells[i];
            auto h = family_ones_ab_hpoly(c.n, c.a, c.b);
            Integer disc = discriminant(h);
            Integer ad = disc < 0 ? -disc : disc;
            bool square = disc > 0 && mpz_perfect_square_p(disc.get_mpz_t());
            std::vector<std::uint64_t> h2;
            for (const auto& co : h) h2.push_back(mpz_fdiv_ui(co.get_mpz_t(), 2));
            rows[i] = json{{"n", c.n},
                           {"a", c.a},
                           {"b", c.b},
                           {"disc", disc.get_str()},
                           {"disc_square", square},
                           {"h_irreducible_mod_2", is_irreducible_mod_p(h2, 2)}};
        }
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
        for (auto& th : pool) th.join();
    }
    json doc{{"schema_version", kSchemaVersion}, {"command", "census"}};
    doc["family"] = "ones-ab";
    doc["nmax"] = nmax;
    doc["bmax"] = bmax;
    doc["rows"] = rows;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact models of diameter-four trees"};
    app.require_subcommand(1);
    std::string format = "text";
    unsigned threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads, "worker count")->check(CLI::Range(1u, 256u));

    std::string type_str, p_str, locus = "zero";
    std::string a_str, b_str, c_str;
    unsigned kmax = 8, precision = 8;
    unsigned long n_opt = 5, nmax = 5;
    long bmax = 8;
    size_t slot = 0;
    long root_index = -1;
    bool kummer = false;

    auto* sc_trees = app.add_subcommand("trees", "enumerate diameter-four trees of a type");
    sc_trees->add_option("type", type_str, "comma-separated valency type")->required();

    auto* sc_solve = app.add_subcommand("solve", "models and Frobenius orbits over F_{p^k}");
    sc_solve->add_option("--type", type_str)->required();
    sc_solve->add_option("--p", p_str)->required();
    sc_solve->add_option("--kmax", kmax);

    auto* sc_inv = app.add_subcommand("invariants", "subset-sum invariants and reduction data");
    sc_inv->add_option("--type", type_str)->required();
    auto* inv_p = sc_inv->add_option("--p", p_str);

    auto* sc_lift = app.add_subcommand("lift", "Hensel-lift a residue model to Z_p precision");
    sc_lift->add_option("--type", type_str)->required();
    sc_lift->add_option("--p", p_str)->required();
    sc_lift->add_option("--precision", precision)->required();
    sc_lift->add_flag("--kummer", kummer, "lift through the phi-system Kummer model");

    auto* sc_corr = app.add_subcommand("correspondence",
                                       "zero/infinity-locus correspondence at a regular prime");
    sc_corr->add_option("--type", type_str)->required();
    sc_corr->add_option("--p", p_str)->required();
    sc_corr->add_option("--slot", slot)->required();
    sc_corr->add_option("--locus", locus)->check(CLI::IsMember({"zero", "infinity"}));
    sc_corr->add_option("--precision", precision);

    auto* sc_family = app.add_subcommand("family", "closed-form families");
    auto* sc_ab = sc_family->add_subcommand("ab", "the (a,b) rational family");
    sc_ab->add_option("--a", a_str)->required();
    sc_ab->add_option("--b", b_str)->required();
    auto* sc_abc = sc_family->add_subcommand("abc", "the (a,b,c) quadratic family");
    sc_abc->add_option("--a", a_str)->required();
    sc_abc->add_option("--b", b_str)->required();
    sc_abc->add_option("--c", c_str)->required();
    auto* abc_p = sc_abc->add_option("--p", p_str);
    auto* sc_ones = sc_family->add_subcommand("ones-ab", "the (1,...,1,a,b) family");
    sc_ones->add_option("--n", n_opt)->required();
    sc_ones->add_option("--a", a_str)->required();
    sc_ones->add_option("--b", b_str)->required();
    sc_ones->add_option("--root-index", root_index,
                        "reconstruct the exact model at this h-root");

    auto* sc_census = app.add_subcommand("census", "family sweep");
    std::string census_family = "ones-ab";
    sc_census->add_option("--family", census_family)->check(CLI::IsMember({"ones-ab"}));
    sc_census->add_option("--nmax", nmax);
    sc_census->add_option("--bmax", bmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json doc;
        if (*sc_trees) {
            doc = cmd_trees(parse_type(type_str));
        } else if (*sc_solve) {
            doc = cmd_solve(parse_type(type_str), Integer(p_str), kmax);
        } else if (*sc_inv) {
            std::optional<Integer> p;
            if (*inv_p) p = Integer(p_str);
            doc = cmd_invariants(parse_type(type_str), p);
        } else if (*sc_lift) {
            doc = cmd_lift(parse_type(type_str), Integer(p_str), precision, kummer);
        } else if (*sc_corr) {
            doc = cmd_correspondence(parse_type(type_str), Integer(p_str), slot, locus,
                                     precision);
        } else if (*sc_ab) {
            doc = cmd_family_ab(Integer(a_str), Integer(b_str));
        } else if (*sc_abc) {
            std::optional<Integer> p;
            if (*abc_p) p = Integer(p_str);
            doc = cmd_family_abc(Integer(a_str), Integer(b_str), Integer(c_str), p);
        } else if (*sc_ones) {
            std::optional<size_t> ri;
            if (root_index >= 0) ri = (size_t)root_index;
            doc = cmd_family_ones_ab(n_opt, Integer(a_str), Integer(b_str), ri);
        } else if (*sc_census) {
            doc = cmd_census(nmax, bmax, threads);
        } else {
            return 2;
        }
        emit(doc, format);
        return 0;
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        if (format == "json") {
            json err;
            err["schema_version"] = kSchemaVersion;
            err["error"] = json{{"tag", tag_name(e.tag())}, {"message", e.what()}};
            std::printf("%s\n", err.dump(2).c_str());
        } else {
            std::fprintf(stderr, "error: %s\n", e.what());
        }
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    }
}
