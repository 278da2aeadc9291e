#pragma once

// JSON documents for algebras, representations, crossed modules, extensions,
// the other crossed module flavors, and cochains. Files use 1-based sparse
// entries [i, j, k, "p/q"]; unspecified entries are zero.

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "cochain.hpp"
#include "crossed_module.hpp"
#include "errors.hpp"
#include "functors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace prelie {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

struct RepresentationDocument {
    PreLieAlgebra algebra;
    Representation rep;
    friend bool operator==(const RepresentationDocument&, const RepresentationDocument&) = default;
};

struct CochainDocument {
    PreLieAlgebra algebra;
    Representation rep;
    Cochain cochain{1, 0, 0};
    friend bool operator==(const CochainDocument&, const CochainDocument&) = default;
};

using Payload = std::variant<PreLieAlgebra, LieAlgebra, RepresentationDocument, CrossedModule,
                             CrossedModuleExtension, RotaBaxterLieCrossedModule,
                             DendriformCrossedModule, CochainDocument, LieCrossedModule>;

struct Document {
    Payload payload;
    std::string description;

    std::string kind() const {
        static constexpr const char* names[] = {"prelie",      "lie",        "representation",
                                                "crossed_module", "extension", "rblie_xmod",
                                                "dendriform_xmod", "cochain", "lie_xmod"};
        return names[payload.index()];
    }

    friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

/// A JSON node with its pointer, for error reporting.
class Node {
public:
    Node(const Json& j, std::string pointer) : j_(j), pointer_(std::move(pointer)) {}

    const Json& json() const noexcept { return j_; }
    const std::string& pointer() const noexcept { return pointer_; }

    [[noreturn]] void fail(const std::string& what) const { throw SchemaError(pointer_, what); }

    void require_object(std::initializer_list<const char*> allowed) const {
        if (!j_.is_object())
            fail("expected an object");
        for (const auto& [key, value] : j_.items()) {
            bool ok = false;
            for (const char* a : allowed)
                ok = ok || key == a;
            if (!ok)
                throw SchemaError(child_pointer(key), "unexpected key");
        }
    }

    bool has(const char* key) const { return j_.contains(key); }

    Node at(const char* key) const {
        if (!j_.contains(key))
            fail(std::string("missing key '") + key + "'");
        return {j_.at(key), child_pointer(key)};
    }

    Node at(std::size_t index) const { return {j_.at(index), pointer_ + "/" + std::to_string(index)}; }

    std::vector<Node> array() const {
        if (!j_.is_array())
            fail("expected an array");
        std::vector<Node> out;
        for (std::size_t k = 0; k < j_.size(); ++k)
            out.push_back(at(k));
        return out;
    }

    std::size_t natural() const {
        if (!j_.is_number_integer() || j_.get<long long>() < 0)
            fail("expected a non-negative integer");
        return j_.get<std::size_t>();
    }

    std::string string() const {
        if (!j_.is_string())
            fail("expected a string");
        return j_.get<std::string>();
    }

    Scalar scalar() const {
        if (j_.is_number_integer())
            return Scalar(j_.get<long long>());
        if (j_.is_string()) {
            try {
                return parse_scalar(j_.get<std::string>());
            } catch (const ValueError& e) {
                std::string msg = e.what();
                msg.erase(0, std::string_view("ValueError: ").size());
                throw ValueError(msg + " at " + pointer_);
            }
        }
        fail("expected an integer or a \"p/q\" string");
    }

private:
    std::string child_pointer(const std::string& key) const {
        std::string escaped;
        for (char c : key) {
            if (c == '~')
                escaped += "~0";
            else if (c == '/')
                escaped += "~1";
            else
                escaped += c;
        }
        return pointer_ + "/" + escaped;
    }

    const Json& j_;
    std::string pointer_;
};

/// Sparse entries [i_1, ..., i_r, value] with 1-based indices bounded by dims.
template <class Sink>
void read_entries(const Node& node, const std::vector<std::size_t>& dims, Sink&& sink) {
    std::set<std::vector<std::size_t>> seen;
    for (const Node& e : node.array()) {
        const auto items = e.array();
        if (items.size() != dims.size() + 1)
            e.fail("expected " + std::to_string(dims.size()) + " indices and a value");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const std::size_t v = items[k].natural();
            if (v < 1 || v > dims[k])
                items[k].fail("index out of range 1.." + std::to_string(dims[k]));
            idx.push_back(v - 1);
        }
        if (!seen.insert(idx).second)
            e.fail("duplicate entry");
        sink(idx, items.back().scalar());
    }
}

inline Tensor3 read_tensor(const Node& node, std::size_t d0, std::size_t d1, std::size_t d2) {
    Tensor3 t(d0, d1, d2);
    read_entries(node, {d0, d1, d2},
                 [&](const std::vector<std::size_t>& i, const Scalar& c) { t(i[0], i[1], i[2]) = c; });
    return t;
}

inline Matrix read_matrix(const Node& node, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    read_entries(node, {rows, cols},
                 [&](const std::vector<std::size_t>& i, const Scalar& c) { m(i[0], i[1]) = c; });
    return m;
}

inline Json scalar_json(const Scalar& c) { return to_string(c); }

inline Json write_tensor(const Tensor3& t) {
    Json out = Json::array();
    const auto d = t.dims();
    for (std::size_t i = 0; i < d[0]; ++i)
        for (std::size_t j = 0; j < d[1]; ++j)
            for (std::size_t k = 0; k < d[2]; ++k)
                if (t(i, j, k) != 0)
                    out.push_back(Json::array({i + 1, j + 1, k + 1, scalar_json(t(i, j, k))}));
    return out;
}

inline Json write_matrix(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                out.push_back(Json::array({r + 1, c + 1, scalar_json(m(r, c))}));
    return out;
}

// --- algebras

inline PreLieAlgebra read_prelie(const Node& n, bool top = false) {
    if (top)
        n.require_object({"kind", "format_version", "description", "dim", "product", "labels"});
    else
        n.require_object({"kind", "dim", "product", "labels"});
    const std::size_t d = n.at("dim").natural();
    Tensor3 product = n.has("product") ? read_tensor(n.at("product"), d, d, d) : Tensor3(d, d, d);
    std::vector<std::string> labels;
    if (n.has("labels")) {
        for (const Node& l : n.at("labels").array())
            labels.push_back(l.string());
        if (labels.size() != d)
            n.at("labels").fail("expected " + std::to_string(d) + " labels");
    }
    return PreLieAlgebra(std::move(product), std::move(labels));
}

inline Json write_prelie(const PreLieAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    j["product"] = write_tensor(a.product());
    if (!a.labels().empty())
        j["labels"] = a.labels();
    return j;
}

inline LieAlgebra read_lie(const Node& n, bool top = false) {
    if (top)
        n.require_object({"kind", "format_version", "description", "dim", "bracket"});
    else
        n.require_object({"kind", "dim", "bracket"});
    const std::size_t d = n.at("dim").natural();
    return LieAlgebra(n.has("bracket") ? read_tensor(n.at("bracket"), d, d, d) : Tensor3(d, d, d));
}

inline Json write_lie(const LieAlgebra& l) {
    Json j;
    j["dim"] = l.dim();
    j["bracket"] = write_tensor(l.structure());
    return j;
}

/// {"dim": v, "left": [[x, u, w, c]], "right": [[u, x, w, c]]} over an algebra of dimension n.
inline Representation read_module(const Node& n, std::size_t algebra_dim) {
    n.require_object({"dim", "left", "right"});
    const std::size_t v = n.at("dim").natural();
    Tensor3 left = n.has("left") ? read_tensor(n.at("left"), algebra_dim, v, v)
                                 : Tensor3(algebra_dim, v, v);
    Tensor3 right = n.has("right") ? read_tensor(n.at("right"), v, algebra_dim, v)
                                   : Tensor3(v, algebra_dim, v);
    return {std::move(left), std::move(right)};
}

inline Json write_module(const Representation& r) {
    Json j;
    j["dim"] = r.carrier_dim();
    j["left"] = write_tensor(r.left());
    j["right"] = write_tensor(r.right());
    return j;
}

/// Actions carry their carrier dimension in the enclosing document.
inline ActionData read_action(const Node& n, std::size_t algebra_dim, std::size_t carrier_dim) {
    n.require_object({"left", "right"});
    Tensor3 left = n.has("left") ? read_tensor(n.at("left"), algebra_dim, carrier_dim, carrier_dim)
                                 : Tensor3(algebra_dim, carrier_dim, carrier_dim);
    Tensor3 right = n.has("right")
                        ? read_tensor(n.at("right"), carrier_dim, algebra_dim, carrier_dim)
                        : Tensor3(carrier_dim, algebra_dim, carrier_dim);
    return {std::move(left), std::move(right)};
}

inline Json write_action(const ActionData& a) {
    Json j;
    j["left"] = write_tensor(a.left());
    j["right"] = write_tensor(a.right());
    return j;
}

// --- composite kinds

inline CrossedModule read_crossed_module(const Node& n) {
    n.require_object({"kind", "format_version", "description", "m", "n", "mu", "action"});
    PreLieAlgebra m = read_prelie(n.at("m")), nn = read_prelie(n.at("n"));
    Matrix mu = read_matrix(n.at("mu"), nn.dim(), m.dim());
    ActionData act = read_action(n.at("action"), nn.dim(), m.dim());
    return {std::move(m), std::move(nn), std::move(mu), std::move(act)};
}

inline void write_crossed_module(Json& j, const CrossedModule& x) {
    j["m"] = write_prelie(x.m);
    j["n"] = write_prelie(x.n);
    j["mu"] = write_matrix(x.mu);
    j["action"] = write_action(x.action);
}

inline CrossedModuleExtension read_extension(const Node& n) {
    n.require_object({"kind", "format_version", "description", "g", "v", "m", "n", "i", "mu", "pi",
                      "action"});
    PreLieAlgebra g = read_prelie(n.at("g"));
    Representation v = read_module(n.at("v"), g.dim());
    PreLieAlgebra m = read_prelie(n.at("m")), nn = read_prelie(n.at("n"));
    Matrix i = read_matrix(n.at("i"), m.dim(), v.carrier_dim());
    Matrix mu = read_matrix(n.at("mu"), nn.dim(), m.dim());
    Matrix pi = read_matrix(n.at("pi"), g.dim(), nn.dim());
    ActionData act = read_action(n.at("action"), nn.dim(), m.dim());
    return {std::move(g), std::move(v), std::move(m), std::move(nn),
            std::move(i), std::move(mu), std::move(pi), std::move(act)};
}

inline void write_extension(Json& j, const CrossedModuleExtension& e) {
    j["g"] = write_prelie(e.g);
    j["v"] = write_module(e.v_rep);
    j["m"] = write_prelie(e.m);
    j["n"] = write_prelie(e.n);
    j["i"] = write_matrix(e.i);
    j["mu"] = write_matrix(e.mu);
    j["pi"] = write_matrix(e.pi);
    j["action"] = write_action(e.action);
}

inline RotaBaxterLieCrossedModule read_rblie(const Node& n) {
    n.require_object({"kind", "format_version", "description", "m", "n", "t_m", "t_n", "mu", "rho"});
    LieAlgebra m = read_lie(n.at("m")), nn = read_lie(n.at("n"));
    Matrix tm = read_matrix(n.at("t_m"), m.dim(), m.dim());
    Matrix tn = read_matrix(n.at("t_n"), nn.dim(), nn.dim());
    Matrix mu = read_matrix(n.at("mu"), nn.dim(), m.dim());
    Tensor3 rho = read_tensor(n.at("rho"), nn.dim(), m.dim(), m.dim());
    return {std::move(m), std::move(nn), std::move(tm), std::move(tn), std::move(mu), std::move(rho)};
}

inline void write_rblie(Json& j, const RotaBaxterLieCrossedModule& x) {
    j["m"] = write_lie(x.m);
    j["n"] = write_lie(x.n);
    j["t_m"] = write_matrix(x.t_m);
    j["t_n"] = write_matrix(x.t_n);
    j["mu"] = write_matrix(x.mu);
    j["rho"] = write_tensor(x.rho);
}

inline DendriformAlgebra read_dendriform(const Node& n) {
    n.require_object({"dim", "succ", "prec"});
    const std::size_t d = n.at("dim").natural();
    return {n.has("succ") ? read_tensor(n.at("succ"), d, d, d) : Tensor3(d, d, d),
            n.has("prec") ? read_tensor(n.at("prec"), d, d, d) : Tensor3(d, d, d)};
}

inline Json write_dendriform(const DendriformAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    j["succ"] = write_tensor(a.succ);
    j["prec"] = write_tensor(a.prec);
    return j;
}

inline DendriformCrossedModule read_dendriform_xmod(const Node& n) {
    n.require_object({"kind", "format_version", "description", "m", "n", "mu", "left_succ",
                      "left_prec", "right_succ", "right_prec"});
    DendriformAlgebra m = read_dendriform(n.at("m")), nn = read_dendriform(n.at("n"));
    const std::size_t dm = m.dim(), dn = nn.dim();
    auto opt = [&](const char* key, std::size_t a, std::size_t b, std::size_t c) {
        return n.has(key) ? read_tensor(n.at(key), a, b, c) : Tensor3(a, b, c);
    };
    Matrix mu = read_matrix(n.at("mu"), dn, dm);
    return {std::move(m),
            std::move(nn),
            std::move(mu),
            opt("left_succ", dn, dm, dm),
            opt("left_prec", dn, dm, dm),
            opt("right_succ", dm, dn, dm),
            opt("right_prec", dm, dn, dm)};
}

inline void write_dendriform_xmod(Json& j, const DendriformCrossedModule& x) {
    j["m"] = write_dendriform(x.m);
    j["n"] = write_dendriform(x.n);
    j["mu"] = write_matrix(x.mu);
    j["left_succ"] = write_tensor(x.left_succ);
    j["left_prec"] = write_tensor(x.left_prec);
    j["right_succ"] = write_tensor(x.right_succ);
    j["right_prec"] = write_tensor(x.right_prec);
}

inline LieCrossedModule read_lie_xmod(const Node& n) {
    n.require_object({"kind", "format_version", "description", "m", "n", "mu", "action"});
    LieAlgebra m = read_lie(n.at("m")), nn = read_lie(n.at("n"));
    Matrix mu = read_matrix(n.at("mu"), nn.dim(), m.dim());
    Tensor3 act = n.has("action") ? read_tensor(n.at("action"), nn.dim(), m.dim(), m.dim())
                                  : Tensor3(nn.dim(), m.dim(), m.dim());
    return {std::move(m), std::move(nn), std::move(mu), std::move(act)};
}

inline void write_lie_xmod(Json& j, const LieCrossedModule& x) {
    j["m"] = write_lie(x.m);
    j["n"] = write_lie(x.n);
    j["mu"] = write_matrix(x.mu);
    j["action"] = write_tensor(x.action);
}

/// "values": [[a_1, ..., a_n, b, c]] sets the b-th coordinate of f(e_{a_1}, ..., e_{a_n})
/// to c; the first n - 1 slots are alternating, so any order of distinct
/// indices is accepted and stored with its sign.
inline CochainDocument read_cochain(const Node& n) {
    n.require_object({"kind", "format_version", "description", "algebra", "module", "arity", "values"});
    PreLieAlgebra a = read_prelie(n.at("algebra"));
    Representation rep = read_module(n.at("module"), a.dim());
    const std::size_t arity = n.at("arity").natural();
    if (arity == 0)
        n.at("arity").fail("arity must be at least 1");
    Cochain f(arity, a.dim(), rep.carrier_dim());
    std::vector<std::size_t> dims(arity, a.dim());
    dims.push_back(rep.carrier_dim());
    std::set<std::vector<std::size_t>> canonical_seen;
    if (n.has("values")) {
        const Node values = n.at("values");
        std::size_t row = 0;
        read_entries(values, dims, [&](const std::vector<std::size_t>& idx, const Scalar& c) {
            std::vector<std::size_t> head(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(arity - 1));
            const int sign = sort_with_sign(head);
            if (sign == 0)
                values.at(row).fail("repeated index in an alternating slot");
            std::vector<std::size_t> key = head;
            key.push_back(idx[arity - 1]);
            key.push_back(idx[arity]);
            if (!canonical_seen.insert(key).second)
                values.at(row).fail("entry duplicates another up to reordering");
            Vector value = f.evaluate_basis(std::vector<std::size_t>(key.begin(), key.end() - 1));
            value[idx[arity]] = sign > 0 ? c : Scalar(-c);
            f.set(head, idx[arity - 1], value);
            ++row;
        });
    }
    return {std::move(a), std::move(rep), std::move(f)};
}

inline void write_cochain(Json& j, const CochainDocument& c) {
    j["algebra"] = write_prelie(c.algebra);
    j["module"] = write_module(c.rep);
    j["arity"] = c.cochain.arity();
    Json values = Json::array();
    const CochainBasis& basis = c.cochain.basis();
    const std::size_t v = c.cochain.value_dim();
    for (std::size_t p = 0; p < basis.size(); ++p) {
        const auto el = basis.element(p);
        for (std::size_t b = 0; b < v; ++b) {
            const Scalar& x = c.cochain.coordinates()[p * v + b];
            if (x == 0)
                continue;
            Json row = Json::array();
            for (auto k : el)
                row.push_back(k + 1);
            row.push_back(b + 1);
            row.push_back(scalar_json(x));
            values.push_back(std::move(row));
        }
    }
    j["values"] = std::move(values);
}

} // namespace detail

inline Document document_from_json(const Json& j) {
    const detail::Node root(j, "");
    if (!j.is_object())
        root.fail("expected an object");
    const std::string kind = root.at("kind").string();
    if (root.has("format_version") && root.at("format_version").string() != kFormatVersion)
        root.at("format_version").fail("unsupported format version");
    Document doc{PreLieAlgebra{}, {}};
    if (root.has("description"))
        doc.description = root.at("description").string();
    if (kind == "prelie") {
        doc.payload = detail::read_prelie(root, true);
    } else if (kind == "lie") {
        doc.payload = detail::read_lie(root, true);
    } else if (kind == "representation") {
        root.require_object({"kind", "format_version", "description", "algebra", "module"});
        PreLieAlgebra a = detail::read_prelie(root.at("algebra"));
        Representation r = detail::read_module(root.at("module"), a.dim());
        doc.payload = RepresentationDocument{std::move(a), std::move(r)};
    } else if (kind == "crossed_module") {
        doc.payload = detail::read_crossed_module(root);
    } else if (kind == "extension") {
        doc.payload = detail::read_extension(root);
    } else if (kind == "rblie_xmod") {
        doc.payload = detail::read_rblie(root);
    } else if (kind == "dendriform_xmod") {
        doc.payload = detail::read_dendriform_xmod(root);
    } else if (kind == "cochain") {
        doc.payload = detail::read_cochain(root);
    } else if (kind == "lie_xmod") {
        doc.payload = detail::read_lie_xmod(root);
    } else {
        root.at("kind").fail("unknown kind '" + kind + "'");
    }
    return doc;
}

inline Document parse_document_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    return document_from_json(j);
}

inline Document parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document_text(ss.str());
}

inline Json document_to_json(const Document& doc) {
    Json j;
    j["kind"] = doc.kind();
    j["format_version"] = kFormatVersion;
    if (!doc.description.empty())
        j["description"] = doc.description;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PreLieAlgebra>) {
                j.update(detail::write_prelie(p));
            } else if constexpr (std::is_same_v<T, LieAlgebra>) {
                j.update(detail::write_lie(p));
            } else if constexpr (std::is_same_v<T, RepresentationDocument>) {
                j["algebra"] = detail::write_prelie(p.algebra);
                j["module"] = detail::write_module(p.rep);
            } else if constexpr (std::is_same_v<T, CrossedModule>) {
                detail::write_crossed_module(j, p);
            } else if constexpr (std::is_same_v<T, CrossedModuleExtension>) {
                detail::write_extension(j, p);
            } else if constexpr (std::is_same_v<T, RotaBaxterLieCrossedModule>) {
                detail::write_rblie(j, p);
            } else if constexpr (std::is_same_v<T, DendriformCrossedModule>) {
                detail::write_dendriform_xmod(j, p);
            } else if constexpr (std::is_same_v<T, CochainDocument>) {
                detail::write_cochain(j, p);
            } else {
                detail::write_lie_xmod(j, p);
            }
        },
        doc.payload);
    return j;
}

/// Two-space indentation; arrays of scalars such as sparse entries stay on one line.
inline std::string format_json(const Json& j, std::size_t indent = 0) {
    const std::string pad(indent + 2, ' '), close(indent, ' ');
    auto flat = [](const Json& a) {
        return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
    };
    if (j.is_object()) {
        if (j.empty())
            return "{}";
        std::string out = "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": " + format_json(value, indent + 2);
            out += (++k < j.size() ? ",\n" : "\n");
        }
        return out + close + "}";
    }
    if (j.is_array()) {
        if (j.empty())
            return "[]";
        if (flat(j)) {
            std::string out = "[";
            for (std::size_t k = 0; k < j.size(); ++k)
                out += (k ? ", " : "") + j[k].dump();
            return out + "]";
        }
        std::string out = "[\n";
        for (std::size_t k = 0; k < j.size(); ++k)
            out += pad + format_json(j[k], indent + 2) + (k + 1 < j.size() ? ",\n" : "\n");
        return out + close + "]";
    }
    return j.dump();
}

inline std::string serialize_document(const Document& doc) {
    return format_json(document_to_json(doc)) + "\n";
}

/// The verifier matching the document kind. Cochain documents check their
/// algebra and module; rblie and dendriform documents check their input axioms.
inline CheckResult check_document(const Document& doc) {
    return std::visit(
        [](const auto& p) -> CheckResult {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PreLieAlgebra>) {
                return check_prelie(p);
            } else if constexpr (std::is_same_v<T, LieAlgebra>) {
                return check_lie(p);
            } else if constexpr (std::is_same_v<T, RepresentationDocument> ||
                                 std::is_same_v<T, CochainDocument>) {
                if (auto r = check_prelie(p.algebra); !r)
                    return detail::prefixed("algebra", r.violation());
                return check_representation(p.algebra, p.rep);
            } else if constexpr (std::is_same_v<T, CrossedModule>) {
                return check_crossed_module(p);
            } else if constexpr (std::is_same_v<T, CrossedModuleExtension>) {
                return check_extension(p);
            } else if constexpr (std::is_same_v<T, RotaBaxterLieCrossedModule>) {
                return check_rblie_xmod(p);
            } else if constexpr (std::is_same_v<T, DendriformCrossedModule>) {
                return check_dendriform_xmod(p);
            } else {
                return check_lie_crossed_module(p);
            }
        },
        doc.payload);
}

/// Converts a crossed module of the given flavor ("prelie", "rblie" or
/// "dendriform") and certifies the result with its target verifier.
/// A document of the wrong kind raises ValueError; invalid input raises
/// InvalidInput; a failed output check raises OutputCheckFailed.
inline Document convert_document(const Document& doc, std::string_view from) {
    auto wrong_kind = [&] {
        return ValueError("--from " + std::string(from) + " does not accept a " + doc.kind() +
                          " document");
    };
    Document out;
    if (from == "prelie") {
        CrossedModule x;
        if (const auto* p = std::get_if<CrossedModule>(&doc.payload))
            x = *p;
        else if (const auto* e = std::get_if<CrossedModuleExtension>(&doc.payload))
            x = e->crossed_module();
        else
            throw wrong_kind();
        LieCrossedModule lie = prelie_to_lie_xmod(x);
        if (const CheckResult r = check_lie_crossed_module(lie); !r)
            throw OutputCheckFailed(r.describe());
        out.payload = std::move(lie);
    } else if (from == "rblie" || from == "dendriform") {
        CrossedModule x;
        if (from == "rblie") {
            const auto* p = std::get_if<RotaBaxterLieCrossedModule>(&doc.payload);
            if (!p)
                throw wrong_kind();
            x = rblie_to_prelie_xmod(*p);
        } else {
            const auto* p = std::get_if<DendriformCrossedModule>(&doc.payload);
            if (!p)
                throw wrong_kind();
            x = dendriform_to_prelie_xmod(*p);
        }
        if (const CheckResult r = check_crossed_module(x); !r)
            throw OutputCheckFailed(r.describe());
        out.payload = std::move(x);
    } else {
        throw ValueError("unknown flavor " + std::string(from));
    }
    if (!doc.description.empty())
        out.description = "converted from: " + doc.description;
    return out;
}

/// The flavor convert_document accepts for a document kind, or empty.
inline std::string convert_flavor(const Document& doc) {
    if (std::holds_alternative<CrossedModule>(doc.payload) ||
        std::holds_alternative<CrossedModuleExtension>(doc.payload))
        return "prelie";
    if (std::holds_alternative<RotaBaxterLieCrossedModule>(doc.payload))
        return "rblie";
    if (std::holds_alternative<DendriformCrossedModule>(doc.payload))
        return "dendriform";
    return {};
}

} // namespace prelie
