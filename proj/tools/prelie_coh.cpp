#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prelie/prelie.hpp"

namespace {

using namespace prelie;

enum Exit : int { kOk = 0, kInputError = 1, kViolation = 2, kOutputCheck = 3 };

/// Wrong document kind or otherwise unusable input.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
};

std::string vec_string(const Vector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + to_string(v[k]);
    return s + "]";
}

Json vec_json(const Vector& v) {
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_string(x));
    return j;
}

std::string args_string(const std::vector<std::size_t>& args) {
    std::string s = "(";
    for (std::size_t k = 0; k < args.size(); ++k)
        s += (k ? "," : "") + std::to_string(args[k] + 1);
    return s + ")";
}

/// Nonzero basis values of a cochain, as (arguments, value) pairs.
std::vector<std::pair<std::vector<std::size_t>, Vector>> nonzero_values(const Cochain& f) {
    std::vector<std::pair<std::vector<std::size_t>, Vector>> out;
    const std::size_t v = f.value_dim();
    for (std::size_t p = 0; p < f.basis().size(); ++p) {
        Vector val(f.coordinates().begin() + static_cast<std::ptrdiff_t>(p * v),
                   f.coordinates().begin() + static_cast<std::ptrdiff_t>((p + 1) * v));
        if (!is_zero(val))
            out.emplace_back(f.basis().element(p), std::move(val));
    }
    return out;
}

void print_cochain(std::ostream& os, const std::string& name, const Cochain& f,
                   const std::string& indent) {
    const auto values = nonzero_values(f);
    if (values.empty()) {
        os << indent << name << " = 0\n";
        return;
    }
    for (const auto& [args, val] : values)
        os << indent << name << args_string(args) << " = " << vec_string(val) << '\n';
}

Json cochain_json(const Cochain& f) {
    Json j = Json::array();
    for (const auto& [args, val] : nonzero_values(f)) {
        Json row;
        Json a = Json::array();
        for (auto k : args)
            a.push_back(k + 1);
        row["args"] = std::move(a);
        row["value"] = vec_json(val);
        j.push_back(std::move(row));
    }
    return j;
}

void emit_json(const Json& j) { std::cout << format_json(j) << '\n'; }

Json violation_json(const Violation& v) {
    Json j;
    j["axiom"] = v.axiom;
    Json w = Json::array();
    for (auto k : v.witness)
        w.push_back(k + 1);
    j["witness"] = std::move(w);
    j["lhs"] = vec_json(v.lhs);
    j["rhs"] = vec_json(v.rhs);
    return j;
}

void print_violation(const Violation& v) {
    std::cout << "result: Violation\n";
    std::cout << "axiom: " << v.axiom << '\n';
    if (!v.witness.empty())
        std::cout << "witness: " << v.witness_string() << '\n';
    if (!v.lhs.empty() || !v.rhs.empty()) {
        std::cout << "lhs: " << vec_string(v.lhs) << '\n';
        std::cout << "rhs: " << vec_string(v.rhs) << '\n';
    }
}

/// Reports an invalid input structure on stdout and returns the violation exit code.
int report_invalid(const Globals& g, const std::string& command, const CheckResult& r) {
    if (g.json) {
        Json j;
        j["command"] = command;
        j["valid"] = false;
        j["violation"] = violation_json(r.violation());
        emit_json(j);
    } else {
        std::cout << "invalid input\n";
        print_violation(r.violation());
    }
    return kViolation;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path) {
    const Document doc = parse_document(path);
    const CheckResult r = check_document(doc);
    if (g.json) {
        Json j;
        j["command"] = "validate";
        j["kind"] = doc.kind();
        j["valid"] = r.ok();
        if (!r)
            j["violation"] = violation_json(r.violation());
        emit_json(j);
    } else {
        std::cout << "kind: " << doc.kind() << '\n';
        if (r)
            std::cout << "result: Valid\n";
        else
            print_violation(r.violation());
    }
    return r ? kOk : kViolation;
}

struct CohomologyOptions {
    std::string path;
    std::size_t n = 1;
    bool reps = false;
    bool verify = false;
    bool phi = false;
    std::string rep = "regular";
};

int cmd_cohomology(const Globals& g, const CohomologyOptions& o) {
    const Document doc = parse_document(o.path);
    std::optional<PreLieAlgebra> a;
    std::optional<Representation> rep;
    if (const auto* p = std::get_if<PreLieAlgebra>(&doc.payload)) {
        a = *p;
        if (o.rep == "regular")
            rep = Representation::regular(*p);
        else if (o.rep == "left")
            rep = Representation::left_regular(*p);
        else
            rep = Representation::trivial(p->dim(), 1);
    } else if (const auto* r = std::get_if<RepresentationDocument>(&doc.payload)) {
        a = r->algebra;
        rep = r->rep;
    } else if (const auto* c = std::get_if<CochainDocument>(&doc.payload)) {
        a = c->algebra;
        rep = c->rep;
    } else {
        throw UsageError("cohomology needs a prelie, representation or cochain document, got " +
                         doc.kind());
    }
    if (const CheckResult r = check_document(Document{RepresentationDocument{*a, *rep}, ""}); !r)
        return report_invalid(g, "cohomology", r);

    bool certified = true;
    Json out;
    out["command"] = "cohomology";
    std::ostringstream text;

    if (o.verify) {
        bool ok = true;
        for (std::size_t k = 1; k <= o.n; ++k)
            if (!(coboundary_matrix(*a, *rep, k + 1) * coboundary_matrix(*a, *rep, k)).is_zero())
                ok = false;
        certified = certified && ok;
        out["d_squared_zero"] = ok;
        text << "d o d = 0 for k = 1.." << o.n << ": " << (ok ? "PASS" : "FAIL") << '\n';
    }

    const LieAlgebra lie = subadjacent_lie(*a);
    const std::optional<LieModule> hom =
        o.phi ? std::optional<LieModule>(hom_module(*a, *rep)) : std::nullopt;
    Json rows = Json::array();
    for (std::size_t k = 1; k <= o.n; ++k) {
        const CohomologySpace h = cohomology(*a, *rep, k);
        Json row;
        row["n"] = k;
        row["dim"] = h.dimension;
        text << "H^" << k << " = " << h.dimension;
        if (hom) {
            const std::size_t ld = lie_cohomology_dim(lie, *hom, k - 1);
            const bool equal = ld == h.dimension;
            certified = certified && equal;
            row["lie_dim"] = ld;
            row["phi_agrees"] = equal;
            text << "  Lie H^" << k - 1 << " = " << ld << "  " << (equal ? "PASS" : "FAIL");
        }
        text << '\n';
        if (o.reps) {
            Json rs = Json::array();
            for (std::size_t r = 0; r < h.representatives.size(); ++r) {
                text << "  representative " << r + 1 << ":\n";
                print_cochain(text, "f", h.representatives[r], "    ");
                rs.push_back(cochain_json(h.representatives[r]));
            }
            row["representatives"] = std::move(rs);
        }
        rows.push_back(std::move(row));
    }
    out["cohomology"] = std::move(rows);
    if (g.json)
        emit_json(out);
    else
        std::cout << text.str();
    return certified ? kOk : kOutputCheck;
}

struct TmapOptions {
    std::string path;
    std::string sections = "deterministic";
};

/// mu theta = 0 on every basis triple, for theta with values in m.
bool mu_kills_theta(const CrossedModuleExtension& e, const Cochain& theta_in_m) {
    for (const auto& [args, val] : nonzero_values(theta_in_m))
        if (!is_zero(e.mu * val))
            return false;
    return true;
}

int cmd_tmap(const Globals& g, const TmapOptions& o) {
    const Document doc = parse_document(o.path);
    CrossedModuleExtension e;
    if (const auto* p = std::get_if<CrossedModuleExtension>(&doc.payload))
        e = *p;
    else if (const auto* x = std::get_if<CrossedModule>(&doc.payload))
        e = canonical_extension(*x);
    else
        throw UsageError("tmap needs an extension or crossed_module document, got " + doc.kind());
    if (const CheckResult r = check_extension(e); !r)
        return report_invalid(g, "tmap", r);

    const bool random = o.sections == "random";
    std::optional<ThreeCocycleResult> res;
    std::optional<ThreeCocycleResult> reference;
    try {
        res = t_map(e, random ? std::optional<SectionPair>(random_sections(e, g.seed)) : std::nullopt);
        if (random)
            reference = t_map(e);
    } catch (const InternalAssertionFailed& err) {
        if (g.json) {
            Json j;
            j["command"] = "tmap";
            j["certified"] = false;
            j["failure"] = err.what();
            emit_json(j);
        } else {
            std::cout << "FAIL: " << err.what() << '\n';
        }
        return kOutputCheck;
    }

    const bool mu_ok = mu_kills_theta(e, res->theta_in_m);
    const bool d_ok = coboundary(e.g, e.v_rep, res->theta).is_zero();
    bool same_class = true;
    if (reference)
        same_class = are_cohomologous(e.g, e.v_rep, res->theta, reference->theta).has_value();
    const bool certified = mu_ok && d_ok && same_class;

    if (g.json) {
        Json j;
        j["command"] = "tmap";
        j["sections"] = o.sections;
        if (random)
            j["seed"] = g.seed;
        j["theta"] = cochain_json(res->theta);
        j["class"] = vec_json(res->class_coordinates);
        j["h3_dimension"] = res->h3_dimension;
        j["mu_theta_zero"] = mu_ok;
        j["d_theta_zero"] = d_ok;
        if (reference)
            j["cohomologous_to_deterministic"] = same_class;
        emit_json(j);
    } else {
        std::cout << "sections: " << o.sections;
        if (random)
            std::cout << " (seed " << g.seed << ")";
        std::cout << "\ntheta:\n";
        print_cochain(std::cout, "theta", res->theta, "  ");
        std::cout << "class: " << vec_string(res->class_coordinates) << '\n';
        std::cout << "dim H^3 = " << res->h3_dimension << '\n';
        std::cout << "mu theta = 0: " << (mu_ok ? "PASS" : "FAIL") << '\n';
        std::cout << "d theta = 0: " << (d_ok ? "PASS" : "FAIL") << '\n';
        if (reference)
            std::cout << "cohomologous to deterministic sections: " << (same_class ? "PASS" : "FAIL")
                      << '\n';
    }
    return certified ? kOk : kOutputCheck;
}

int cmd_convert(const std::string& path, const std::string& from) {
    const Document doc = parse_document(path);
    Document out;
    try {
        out = convert_document(doc, from);
    } catch (const InvalidInput& err) {
        std::cerr << err.what() << '\n';
        return kViolation;
    }
    // The converted document is JSON in either output mode.
    std::cout << serialize_document(out);
    return kOk;
}

struct TreesOptions {
    std::size_t labels = 0;
    std::size_t degree = 0;
    std::vector<std::string> product;
};

int cmd_trees(const Globals& g, const TreesOptions& o) {
    if (!o.product.empty()) {
        const Tree s = parse_tree(o.product[0]);
        const Tree t = parse_tree(o.product[1]);
        const std::size_t d = s.degree() + t.degree();
        const TreePoly p = graft_product(TreePoly::basis(s, d), TreePoly::basis(t, d));
        if (g.json) {
            Json j;
            j["command"] = "trees";
            j["product"] = to_string(p);
            Json terms = Json::array();
            for (const auto& [tree, c] : p.terms()) {
                Json term;
                term["tree"] = to_string(tree);
                term["coefficient"] = to_string(c);
                terms.push_back(std::move(term));
            }
            j["terms"] = std::move(terms);
            emit_json(j);
        } else {
            std::cout << to_string(p) << '\n';
        }
        return kOk;
    }
    if (o.labels == 0 || o.degree == 0)
        throw UsageError("trees needs --labels k --degree d with k, d >= 1, or --product t1 t2");
    if (o.labels > 26)
        throw UsageError("at most 26 labels are supported");
    const auto trees = enumerate_trees(o.labels, o.degree);
    if (g.json) {
        Json j;
        j["command"] = "trees";
        j["labels"] = o.labels;
        j["degree"] = o.degree;
        j["count"] = trees.size();
        Json list = Json::array();
        for (const auto& t : trees)
            list.push_back(to_string(t));
        j["trees"] = std::move(list);
        emit_json(j);
    } else {
        for (const auto& t : trees)
            std::cout << to_string(t) << '\n';
    }
    return kOk;
}

int cmd_cohomologous(const Globals& g, const std::string& first, const std::string& second) {
    const Document d1 = parse_document(first);
    const Document d2 = parse_document(second);
    const auto* c1 = std::get_if<CochainDocument>(&d1.payload);
    const auto* c2 = std::get_if<CochainDocument>(&d2.payload);
    if (!c1 || !c2)
        throw UsageError("cohomologous needs two cochain documents");
    if (!(c1->algebra == c2->algebra) || !(c1->rep == c2->rep))
        throw UsageError("the cochains live over different algebras or modules");
    if (const CheckResult r = check_document(d1); !r)
        return report_invalid(g, "cohomologous", r);
    const auto beta = are_cohomologous(c1->algebra, c1->rep, c1->cochain, c2->cochain);
    if (g.json) {
        Json j;
        j["command"] = "cohomologous";
        j["cohomologous"] = beta.has_value();
        if (beta)
            j["witness"] = cochain_json(*beta);
        emit_json(j);
    } else {
        std::cout << "cohomologous: " << (beta ? "yes" : "no") << '\n';
        if (beta) {
            std::cout << "witness beta with d beta = f1 - f2:\n";
            print_cochain(std::cout, "beta", *beta, "  ");
        }
    }
    return beta ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional pre-Lie algebras", "prelie-coh"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--seed", g.seed, "Seed for random section choices")->capture_default_str();

    std::string path, path2, from;
    auto* validate = app.add_subcommand("validate", "Run the verifier matching the document kind");
    validate->add_option("file", path, "Input document")->required();

    CohomologyOptions co;
    auto* cohom = app.add_subcommand("cohomology", "Dimensions of H^k for k = 1..N");
    cohom->add_option("file", co.path, "prelie, representation or cochain document")->required();
    cohom->add_option("--n", co.n, "Highest degree N")->required()->check(CLI::Range(1, 16));
    cohom->add_flag("--reps", co.reps, "Print cocycle representatives");
    cohom->add_flag("--verify", co.verify, "Check d o d = 0 before reporting");
    cohom->add_flag("--phi", co.phi, "Cross-check against Lie cohomology of Hom(g,V)");
    cohom->add_option("--rep", co.rep, "Module for a bare prelie document")
        ->check(CLI::IsMember({"regular", "left", "trivial"}))
        ->capture_default_str();

    TmapOptions to;
    auto* tmap = app.add_subcommand("tmap", "Third cohomology class of an extension");
    tmap->add_option("file", to.path, "extension or crossed_module document")->required();
    tmap->add_option("--sections", to.sections, "Section choice")
        ->check(CLI::IsMember({"deterministic", "random"}))
        ->capture_default_str();

    auto* convert = app.add_subcommand("convert", "Convert a crossed module between flavors");
    convert->add_option("file", path, "Input document")->required();
    convert->add_option("--from", from, "Input flavor")
        ->required()
        ->check(CLI::IsMember({"prelie", "rblie", "dendriform"}));

    TreesOptions tr;
    auto* trees = app.add_subcommand("trees", "Rooted-tree basis of the free pre-Lie algebra");
    trees->add_option("--labels", tr.labels, "Number of labels");
    trees->add_option("--degree", tr.degree, "Tree degree");
    trees->add_option("--product", tr.product, "Graft product t1 o t2")->expected(2);

    auto* cohomologous = app.add_subcommand("cohomologous", "Decide whether two cochains are cohomologous");
    cohomologous->add_option("first", path, "Cochain document")->required();
    cohomologous->add_option("second", path2, "Cochain document")->required();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*validate)
            return cmd_validate(g, path);
        if (*cohom)
            return cmd_cohomology(g, co);
        if (*tmap)
            return cmd_tmap(g, to);
        if (*convert)
            return cmd_convert(path, from);
        if (*trees)
            return cmd_trees(g, tr);
        return cmd_cohomologous(g, path, path2);
    } catch (const OutputCheckFailed& e) {
        std::cerr << e.what() << '\n';
        return kOutputCheck;
    } catch (const InternalAssertionFailed& e) {
        std::cerr << e.what() << '\n';
        return kOutputCheck;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
