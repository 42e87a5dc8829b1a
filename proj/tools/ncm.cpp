// Command-line front end. Exit status is 0 iff every certificate printed passes.
#include "ncm/ncm.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ncm;

namespace {

constexpr const char* kMagmaDirEnv = "NCM_MAGMA_DIR";

struct Config {
    std::string magma = "N:2";
    bool json = false;
    std::uint64_t seed = 1;
};

// Builtin names first, then the path as given, then relative to $NCM_MAGMA_DIR.
MagmaPtr resolve_magma(const std::string& spec) {
    namespace fs = std::filesystem;
    const std::string head = spec.substr(0, spec.find(':'));
    const bool builtin_name = head == "N" || head == "S" || head == "E" || spec == "D0" || spec == "BNC" || spec == "Z";
    if (builtin_name || fs::exists(spec)) return parse_magma_spec(spec);
    if (const char* dir = std::getenv(kMagmaDirEnv)) {
        for (const std::string& candidate : {spec, spec + ".txt"}) {
            const fs::path p = fs::path(dir) / candidate;
            if (fs::exists(p)) return load_magma_file(p.string());
        }
    }
    return parse_magma_spec(spec);
}

MagmaPtr finite_magma(const Config& cfg) {
    auto m = resolve_magma(cfg.magma);
    m->require_finite("this command");
    if (auto v = check_unitary(*m); !v.empty()) throw std::invalid_argument("magma is not unitary: " + v.front().detail);
    return m;
}

// "ARITY" or "ARITY:i-j=label;i-j=label", labels by element name.
Clique parse_clique(const std::string& text, const MagmaPtr& m) {
    if (!text.empty() && text.front() == '{') return clique_from_json(Json::parse(text), m);
    const auto colon = text.find(':');
    const int arity = std::stoi(text.substr(0, colon));
    std::vector<ArcLabel> arcs;
    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        for (std::string item; std::getline(rest, item, ';');) {
            if (item.empty()) continue;
            const auto dash = item.find('-'), eq = item.find('=');
            if (dash == std::string::npos || eq == std::string::npos || eq < dash)
                throw std::invalid_argument("bad arc '" + item + "', expected i-j=label");
            arcs.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1, eq - dash - 1)),
                            m->parse_label(item.substr(eq + 1))});
        }
    }
    return Clique(m, arity, std::move(arcs));
}

SyntaxTree random_tree(const MagmaPtr& m, int n, std::mt19937_64& rng) {
    const auto els = m->elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    std::function<SyntaxTree(int)> build = [&](int leaves) -> SyntaxTree {
        if (leaves == 1) return SyntaxTree::leaf();
        std::uniform_int_distribution<int> split(1, leaves - 1);
        const int l = split(rng);
        auto left = build(l);
        auto right = build(leaves - l);
        return SyntaxTree::node(Clique::triangle(m, els[pick(rng)], els[pick(rng)], els[pick(rng)]),
                                {std::move(left), std::move(right)});
    };
    return build(n);
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
}

template <class T>
std::vector<std::string> strs(const std::vector<T>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) {
        if constexpr (std::is_same_v<T, BigInt>) out.push_back(x.str());
        else out.push_back(std::to_string(x));
    }
    return out;
}

Json envelope(const std::string& command, const Config& cfg) {
    return Json{{"schema", kSchemaVersion}, {"command", command}, {"magma", cfg.magma}};
}

int emit(const Json& doc, bool ok, const Config& cfg, const std::string& text) {
    if (cfg.json) {
        Json d = doc;
        d["passed"] = ok;
        std::cout << d.dump(2) << "\n";
    } else {
        std::cout << text;
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

std::vector<std::array<WordPolynomial, 3>> word_samples(std::size_t k, Label lo, Label hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<WordPolynomial, 3>> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back({random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi)});
    return out;
}

// --- commands ------------------------------------------------------------------

int cmd_enumerate(const Config& cfg, int arity, bool dual) {
    auto m = finite_magma(cfg);
    const auto list = dual ? enumerate_dual_cliques(m, arity) : enumerate_noncrossing(m, arity);
    const BigInt expected = dual ? dim_ncm_dual(m->size(), arity) : dim_ncm(m->size(), arity);
    const bool ok = BigInt(list.size()) == expected;
    Json doc = envelope("enumerate", cfg);
    doc["arity"] = arity;
    doc["dual"] = dual;
    doc["count"] = list.size();
    doc["expected"] = expected.str();
    Json items = Json::array();
    std::ostringstream text;
    for (const auto& p : list) {
        if (cfg.json) items.push_back(to_json(p));
        else text << to_string(p) << "\n";
    }
    doc["cliques"] = items;
    text << "count " << list.size() << " (formula " << expected << ")\n";
    return emit(doc, ok, cfg, text.str());
}

int cmd_compose(const Config& cfg, const std::string& left, int pos, const std::string& right) {
    auto m = resolve_magma(cfg.magma);
    const Clique p = parse_clique(left, m), q = parse_clique(right, m);
    const Clique r = partial_compose(p, pos, q);
    Json doc = envelope("compose", cfg);
    doc["left"] = to_json(p);
    doc["position"] = pos;
    doc["right"] = to_json(q);
    doc["result"] = to_json(r);
    doc["noncrossing"] = crossing_free(r);
    std::ostringstream text;
    text << to_string(p) << " o_" << pos << " " << to_string(q) << "\n= " << to_string(r) << "\n";
    return emit(doc, true, cfg, text.str());
}

int cmd_normal_form(const Config& cfg, const std::string& tree_json, int arity) {
    auto m = finite_magma(cfg);
    SyntaxTree t;
    if (!tree_json.empty()) {
        std::string text = tree_json;
        if (std::filesystem::exists(tree_json)) {
            std::ifstream in(tree_json);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        t = tree_from_json(Json::parse(text), m);
    } else {
        std::mt19937_64 rng(cfg.seed);
        t = random_tree(m, arity, rng);
    }
    std::function<bool(const SyntaxTree&)> binary = [&](const SyntaxTree& u) {
        if (u.is_leaf()) return true;
        if (u.label().arity() != 2) return false;
        return std::all_of(u.children().begin(), u.children().end(), binary);
    };
    if (!binary(t)) throw std::invalid_argument("normal-form expects a tree of triangles");
    const SyntaxTree n = normal_form(t, m);
    const bool ok = is_normal_form(n, *m) && ev(n, m) == ev(t, m);
    const Phi before = phi_measure(t, *m), after = phi_measure(n, *m);
    Json doc = envelope("normal-form", cfg);
    doc["input"] = to_json(t);
    doc["normal_form"] = to_json(n);
    doc["phi_before"] = Json::array({before.alpha, before.beta});
    doc["phi_after"] = Json::array({after.alpha, after.beta});
    doc["value"] = to_json(ev(n, m));
    std::ostringstream text;
    text << "input       " << encode(t) << "\nnormal form " << encode(n) << "\nvalue       " << to_string(ev(n, m))
         << "\n";
    return emit(doc, ok, cfg, text.str());
}

int cmd_confluence(const Config& cfg, int arity) {
    auto m = finite_magma(cfg);
    const auto c = confluence_report(m, arity);
    Json doc = envelope("confluence", cfg);
    doc["arity"] = c.arity;
    doc["trees_checked"] = c.trees_checked;
    doc["normal_form_counts"] = c.normal_form_counts;
    doc["expected_counts"] = c.expected_counts;
    doc["violations"] = c.violations;
    std::ostringstream text;
    text << "trees checked: " << c.trees_checked << "\nnormal forms by arity: " << join(strs(c.normal_form_counts))
         << "\nexpected:              " << join(c.expected_counts) << "\n";
    for (const auto& v : c.violations) text << "violation: " << v << "\n";
    return emit(doc, c.passed(), cfg, text.str());
}

int cmd_relations(const Config& cfg, bool dual, bool dump) {
    auto m = finite_magma(cfg);
    const auto space = dual ? dual_relation_space(m) : relation_space(m);
    const std::size_t rank = rank_of(space, m);
    const BigInt expected = dual ? dim_relations_dual(m->size()) : dim_relations(m->size());
    const bool ok = BigInt(rank) == expected;
    Json doc = envelope("relations", cfg);
    doc["dual"] = dual;
    doc["generators"] = space.size();
    doc["rank"] = rank;
    doc["expected"] = expected.str();
    if (dump) {
        Json gens = Json::array();
        for (const auto& r : space) gens.push_back(to_json(r));
        doc["spanning_set"] = gens;
    }
    std::ostringstream text;
    text << (dual ? "dual relation space" : "relation space") << ": " << space.size() << " generators, rank " << rank
         << " (formula " << expected << ")\n";
    return emit(doc, ok, cfg, text.str());
}

int cmd_koszul(const Config& cfg) {
    auto m = finite_magma(cfg);
    const auto c = koszul_certificate(m);
    const auto r = relation_space(m);
    const auto d = dual_relation_space(m);
    std::size_t bad = 0;
    for (const auto& a : r)
        for (const auto& b : d)
            if (pairing(a, b) != 0) ++bad;
    Arity3Basis basis{m->size()};
    std::vector<SparseRow> ann_rows, dual_rows;
    for (const auto& f : annihilator(r, m)) ann_rows.push_back(to_row(f, basis));
    for (const auto& f : d) dual_rows.push_back(to_row(f, basis));
    const bool same = span_contains(ann_rows, dual_rows) && span_contains(dual_rows, ann_rows);
    const bool ok = c.passed() && bad == 0 && same;
    Json doc = envelope("koszul", cfg);
    doc["dim_relations"] = c.dim_relations;
    doc["dim_relations_dual"] = c.dim_relations_dual;
    doc["sum"] = c.dim_relations + c.dim_relations_dual;
    doc["expected_sum"] = c.total;
    doc["non_orthogonal_pairs"] = bad;
    doc["annihilator_is_dual_space"] = same;
    std::ostringstream text;
    text << "dim R = " << c.dim_relations << ", dim R! = " << c.dim_relations_dual << ", sum "
         << c.dim_relations + c.dim_relations_dual << " (2m^6 = " << c.total << ")\n"
         << "non-orthogonal generator pairs: " << bad << "\nannihilator of R equals R!: " << (same ? "yes" : "no")
         << "\n";
    return emit(doc, ok, cfg, text.str());
}

int cmd_dims(const Config& cfg, int upto, bool dual, int enumerate_upto) {
    auto m = resolve_magma(cfg.magma);
    m->require_finite("dims");
    const BigInt k = m->size();
    std::vector<BigInt> formula;
    for (int n = 1; n <= upto; ++n) formula.push_back(dual ? dim_ncm_dual(k, n) : dim_ncm(k, n));
    bool ok = true;
    Json enumerated = Json::array();
    for (int n = 1; n <= std::min(upto, enumerate_upto); ++n) {
        const auto c = dual ? enumerate_dual_cliques(m, n).size() : enumerate_noncrossing(m, n).size();
        enumerated.push_back(c);
        ok &= BigInt(c) == formula[static_cast<std::size_t>(n - 1)];
    }
    Json doc = envelope("dims", cfg);
    doc["dual"] = dual;
    doc["formula"] = strs(formula);
    doc["enumerated"] = enumerated;
    std::ostringstream text;
    text << (dual ? "dim NC M!(n)" : "dim NC M(n)") << ", n = 1.." << upto << ": " << join(strs(formula)) << "\n";
    if (!enumerated.empty()) {
        std::vector<std::string> e;
        for (const auto& x : enumerated) e.push_back(std::to_string(x.get<std::size_t>()));
        text << "enumerated: " << join(e) << "\n";
    }
    return emit(doc, ok, cfg, text.str());
}

int cmd_series(const Config& cfg, int order, const std::string& equation) {
    Json doc = envelope("series", cfg);
    std::ostringstream text;
    auto coeffs = [](const RatSeries& s) {
        std::vector<std::string> out;
        for (std::size_t k = 1; k <= s.order(); ++k) out.push_back(to_string(s[k]));
        return out;
    };
    if (!equation.empty()) {
        const std::map<std::string, AlgebraicEquation> named{{"motzkin", equations::motzkin()},
                                                             {"nct", equations::nct()},
                                                             {"ff4", equations::ff4()},
                                                             {"cubic-e2", equations::cubic_e2()}};
        auto it = named.find(equation);
        if (it == named.end()) throw std::invalid_argument("unknown equation " + equation + " (motzkin, nct, ff4, cubic-e2)");
        const auto h = solve_algebraic_series(it->second, static_cast<std::size_t>(order));
        doc["equation"] = equation;
        doc["coefficients"] = coeffs(h);
        text << equation << ": " << join(coeffs(h)) << "\n";
        return emit(doc, true, cfg, text.str());
    }
    auto m = finite_magma(cfg);
    const auto c = koszul_series_check(m->size(), static_cast<std::size_t>(order));
    doc["order"] = order;
    doc["h"] = coeffs(c.h);
    doc["h_dual"] = coeffs(c.h_dual);
    doc["identity_holds"] = c.identity_holds;
    doc["h_matches_formula"] = c.h_matches_formula;
    doc["dual_matches_formula"] = c.dual_matches_formula;
    text << "H  = " << join(coeffs(c.h)) << "\nH! = " << join(coeffs(c.h_dual)) << "\nH(-H!(-t)) = t mod t^"
         << order + 1 << ": " << (c.identity_holds ? "yes" : "no") << "\n";
    return emit(doc, c.passed(), cfg, text.str());
}

int cmd_construct(Config cfg, const std::string& name, int nmax, bool dump) {
    const auto nc = named_construction(name);
    cfg.magma = nc.magma->name();
    const auto c = suboperad_closure(nc.magma, nc.generators, nmax);
    const auto dims = c.dims();
    bool ok = !c.partial;
    for (std::size_t k = 0; k < dims.size() && k < nc.expected_dims.size(); ++k)
        ok &= BigInt(dims[k]) == nc.expected_dims[k];
    Json rels = Json::array();
    std::ostringstream text;
    text << name << " over " << nc.magma->name() << ", generators: " << join(nc.generator_names) << "\n";
    text << "dims: " << join(strs(dims)) << "\n";
    text << "expected: " << join(strs(nc.expected_dims)) << "\n";
    if (c.partial) text << "partial: " << c.partial_reason << "\n";
    for (const auto& r : nc.relations) {
        const bool v = relation_verify(nc.magma, r.lhs, r.rhs);
        ok &= v;
        rels.push_back(Json{{"name", r.name}, {"holds", v}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
        text << "relation " << r.name << ": " << (v ? "holds" : "FAILS") << "\n";
    }
    Json doc = envelope("construct", cfg);
    doc["construction"] = name;
    doc["nmax"] = nmax;
    doc["dims"] = dims;
    doc["expected_dims"] = strs(nc.expected_dims);
    doc["partial"] = c.partial;
    doc["relations"] = rels;
    if (dump) {
        Json elements = Json::array();
        for (const auto& level : c.by_arity)
            for (const auto& p : level) elements.push_back(to_json(p));
        doc["elements"] = elements;
    }
    return emit(doc, ok, cfg, text.str());
}

int cmd_algebra_check(Config cfg, const std::string& carrier, std::size_t samples, std::size_t max_instances,
                      bool magma_given) {
    WordOmega om;
    Label lo = 0, hi = 0;
    if (carrier == "monoid") {
        if (!magma_given) cfg.magma = "N:4";
        auto m = finite_magma(cfg);
        om = monoid_words(m);
        hi = static_cast<Label>(m->size()) - 1;
    } else if (carrier == "selected") {
        if (!magma_given) cfg.magma = "S:3";
        auto m = finite_magma(cfg);
        if (m->name().rfind("S:", 0) != 0) throw std::invalid_argument("selected concatenation needs a builtin S:l magma");
        om = selected_concatenation(m);
        lo = 1;
        hi = std::max<Label>(1, static_cast<Label>(std::countr_zero(m->size())));
    } else if (carrier == "constant") {
        cfg.magma = "D0";
        om = constant_term(d0());
        lo = 1;
        hi = 3;
    } else {
        throw std::invalid_argument("unknown carrier " + carrier + " (monoid, selected, constant)");
    }
    const auto rep = relations_check<WordPolynomial>(
        om, word_samples(samples, lo, hi, cfg.seed), max_instances, cfg.seed,
        [](const WordPolynomial& f) { return to_string(f, [](Label x) { return std::to_string(x) + " "; }); });
    Json doc = envelope("algebra-check", cfg);
    doc["carrier"] = om.name;
    doc["seed"] = cfg.seed;
    doc["samples"] = rep.samples;
    doc["instances"] = rep.instances;
    doc["exhaustive"] = rep.exhaustive;
    doc["violations"] = rep.violations;
    std::ostringstream text;
    text << om.name << ": " << rep.samples << " samples x " << rep.instances << " relation instances"
         << (rep.exhaustive ? "" : " (sampled)") << ", " << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations) text << "violation: " << v << "\n";
    return emit(doc, rep.passed(), cfg, text.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncrossing M-clique operads: enumeration, rewriting, Koszul duality, constructions"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--magma", cfg.magma,
                   "N:l, D0, S:l, E:2, BNC, Z or a table file (also looked up in $" + std::string(kMagmaDirEnv) + ")")
        ->capture_default_str();
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();

    int arity = 3, upto = 6, nmax = 5, order = 8, pos = 1, enumerate_upto = 5;
    bool dual = false, dump = false;
    std::string left, right, tree, equation, name, carrier = "monoid";
    std::size_t samples = 100, max_instances = 50'000;

    auto* en = app.add_subcommand("enumerate", "list noncrossing cliques of one arity");
    en->add_option("--arity", arity)->capture_default_str();
    en->add_flag("--dual", dual, "dual cliques instead");

    auto* co = app.add_subcommand("compose", "partial composition of two cliques (ARITY:i-j=label;...)");
    co->add_option("left", left)->required();
    co->add_option("position", pos)->required();
    co->add_option("right", right)->required();

    auto* nf = app.add_subcommand("normal-form", "normalize a syntax tree (JSON) or a seeded random one");
    nf->add_option("--tree", tree, "tree JSON or a file holding it");
    nf->add_option("--arity", arity, "arity of the random tree")->capture_default_str();

    auto* cf = app.add_subcommand("confluence", "convergence certificate up to an arity");
    cf->add_option("--arity", arity)->capture_default_str();

    auto* re = app.add_subcommand("relations", "rank of the (dual) relation space");
    re->add_flag("--dual", dual);
    re->add_flag("--dump", dump, "include the spanning set in JSON output");

    auto* ko = app.add_subcommand("koszul", "Koszul dual certificate");

    auto* di = app.add_subcommand("dims", "dimensions by formula, checked by enumeration");
    di->add_option("--upto", upto)->capture_default_str();
    di->add_option("--enumerate-upto", enumerate_upto, "largest arity also enumerated")->capture_default_str();
    di->add_flag("--dual", dual);

    auto* se = app.add_subcommand("series", "Hilbert series and the Koszul identity");
    se->add_option("--nmax", order, "truncation order")->capture_default_str();
    se->add_option("--equation", equation, "motzkin, nct, ff4 or cubic-e2 instead of the magma's series");

    auto* cs = app.add_subcommand("construct", "named suboperad closure");
    cs->add_option("name", name, "NCT, FF4, BNC, MOTZKIN or CUBIC_E2")->required();
    cs->add_option("--nmax", nmax)->capture_default_str();
    cs->add_flag("--dump", dump, "include every element in JSON output");

    auto* al = app.add_subcommand("algebra-check", "sampled check of the algebra relations");
    al->add_option("--carrier", carrier, "monoid, selected or constant")->capture_default_str();
    al->add_option("--samples", samples)->capture_default_str();
    al->add_option("--max-instances", max_instances, "relation instances per sample before sampling them")
        ->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*en) return cmd_enumerate(cfg, arity, dual);
        if (*co) return cmd_compose(cfg, left, pos, right);
        if (*nf) return cmd_normal_form(cfg, tree, arity);
        if (*cf) return cmd_confluence(cfg, arity);
        if (*re) return cmd_relations(cfg, dual, dump);
        if (*ko) return cmd_koszul(cfg);
        if (*di) return cmd_dims(cfg, upto, dual, enumerate_upto);
        if (*se) return cmd_series(cfg, order, equation);
        if (*cs) return cmd_construct(cfg, name, nmax, dump);
        if (*al) return cmd_algebra_check(cfg, carrier, samples, max_instances, app.count("--magma") > 0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
