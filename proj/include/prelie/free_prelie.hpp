#pragma once

// The free pre-Lie algebra on labels a, b, c, ... as labeled rooted trees with
// the grafting product, truncated at a maximal vertex count.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace prelie {

/// A labeled rooted tree in canonical form. Trees are ordered by degree, then
/// root label, then the child sequence; children are kept in decreasing order,
/// so b with children a and c prints as b(c,a).
class Tree {
public:
    explicit Tree(std::size_t label, std::vector<Tree> children = {})
        : label_(label), children_(std::move(children)), degree_(1) {
        std::sort(children_.begin(), children_.end(), std::greater<>{});
        for (const auto& c : children_)
            degree_ += c.degree_;
    }

    std::size_t label() const noexcept { return label_; }
    const std::vector<Tree>& children() const noexcept { return children_; }
    std::size_t degree() const noexcept { return degree_; }

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0)
            return c;
        if (auto c = a.label_ <=> b.label_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                      b.children_.begin(), b.children_.end());
    }
    friend bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

private:
    std::size_t label_;
    std::vector<Tree> children_;
    std::size_t degree_;
};

inline std::string to_string(const Tree& t) {
    if (t.label() >= 26)
        throw ValueError("tree labels are limited to a..z");
    std::string out(1, static_cast<char>('a' + t.label()));
    if (!t.children().empty()) {
        out += '(';
        for (std::size_t k = 0; k < t.children().size(); ++k)
            out += (k ? "," : "") + to_string(t.children()[k]);
        out += ')';
    }
    return out;
}

/// Parses label(child,...) with single-letter labels a..z.
inline Tree parse_tree(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto fail = [&](const std::string& what) {
        return ParseError("tree '" + std::string(text) + "' at offset " + std::to_string(pos) +
                          ": " + what);
    };
    auto node = [&](auto&& self) -> Tree {
        skip();
        if (pos >= text.size() || text[pos] < 'a' || text[pos] > 'z')
            throw fail("expected a label a..z");
        const std::size_t label = static_cast<std::size_t>(text[pos++] - 'a');
        skip();
        std::vector<Tree> children;
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            children.push_back(self(self));
            skip();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                children.push_back(self(self));
                skip();
            }
            if (pos >= text.size() || text[pos] != ')')
                throw fail("expected ',' or ')'");
            ++pos;
        }
        return Tree(label, std::move(children));
    };
    Tree t = node(node);
    skip();
    if (pos != text.size())
        throw fail("trailing characters");
    return t;
}

/// A finite combination of trees of degree <= D. `truncated()` records that
/// some product dropped terms above D, so identities may fail by lost terms.
class TreePoly {
public:
    explicit TreePoly(std::size_t truncation_degree) : degree_(truncation_degree) {}

    static TreePoly basis(const Tree& t, std::size_t truncation_degree) {
        if (t.degree() > truncation_degree)
            throw InvalidInput(to_string(t) + " exceeds the truncation degree " +
                               std::to_string(truncation_degree));
        TreePoly p(truncation_degree);
        p.terms_.emplace(t, Scalar(1));
        return p;
    }

    std::size_t truncation_degree() const noexcept { return degree_; }
    bool truncated() const noexcept { return truncated_; }
    const std::map<Tree, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Tree& t, const Scalar& c) {
        if (c == 0)
            return;
        if (t.degree() > degree_) {
            truncated_ = true;
            return;
        }
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void mark_truncated() noexcept { truncated_ = true; }

    TreePoly& operator+=(const TreePoly& o) {
        require_same_degree(o);
        for (const auto& [t, c] : o.terms_)
            add(t, c);
        truncated_ = truncated_ || o.truncated_;
        return *this;
    }
    TreePoly& operator-=(const TreePoly& o) { return *this += Scalar(-1) * o; }

    friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
    friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
    friend TreePoly operator*(const Scalar& c, TreePoly p) {
        if (c == 0) {
            p.terms_.clear();
            return p;
        }
        for (auto& [t, v] : p.terms_)
            v *= c;
        return p;
    }

    /// Terms only; the truncation flag is metadata.
    friend bool operator==(const TreePoly& a, const TreePoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void require_same_degree(const TreePoly& o) const {
        if (o.degree_ != degree_)
            throw TruncationMismatch("truncation degrees " + std::to_string(degree_) + " and " +
                                     std::to_string(o.degree_));
    }

    std::size_t degree_;
    bool truncated_ = false;
    std::map<Tree, Scalar> terms_;
};

inline std::string to_string(const TreePoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : p.terms()) {
        const bool negative = c < 0;
        const Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + "*";
        out += to_string(t);
        first = false;
    }
    return out;
}

/// s attached as a new child of each vertex of t, one tree per vertex.
inline std::vector<Tree> graft_at_each_vertex(const Tree& s, const Tree& t) {
    std::vector<Tree> out;
    std::vector<Tree> at_root = t.children();
    at_root.push_back(s);
    out.emplace_back(t.label(), std::move(at_root));
    for (std::size_t k = 0; k < t.children().size(); ++k)
        for (auto& sub : graft_at_each_vertex(s, t.children()[k])) {
            std::vector<Tree> children = t.children();
            children[k] = std::move(sub);
            out.emplace_back(t.label(), std::move(children));
        }
    return out;
}

/// s o t: s grafted onto every vertex of t, extended bilinearly.
inline TreePoly graft_product(const TreePoly& s, const TreePoly& t) {
    if (s.truncation_degree() != t.truncation_degree())
        throw TruncationMismatch("truncation degrees " + std::to_string(s.truncation_degree()) +
                                 " and " + std::to_string(t.truncation_degree()));
    TreePoly out(s.truncation_degree());
    if (s.truncated() || t.truncated())
        out.mark_truncated();
    for (const auto& [a, ca] : s.terms())
        for (const auto& [b, cb] : t.terms()) {
            if (a.degree() + b.degree() > out.truncation_degree()) {
                out.mark_truncated();
                continue;
            }
            for (const auto& tree : graft_at_each_vertex(a, b))
                out.add(tree, ca * cb);
        }
    return out;
}

inline TreePoly tree_commutator(const TreePoly& s, const TreePoly& t) {
    return graft_product(s, t) - graft_product(t, s);
}

/// All canonical trees with `degree` vertices and labels 0..num_labels-1, ascending.
inline std::vector<Tree> enumerate_trees(std::size_t num_labels, std::size_t degree) {
    if (num_labels == 0 || degree == 0)
        throw ValueError("enumerate_trees needs at least one label and degree >= 1");
    // by_degree[d]: all trees of degree d, ascending
    std::vector<std::vector<Tree>> by_degree(degree + 1);
    for (std::size_t d = 1; d <= degree; ++d) {
        std::vector<Tree> smaller;
        for (std::size_t e = 1; e < d; ++e)
            smaller.insert(smaller.end(), by_degree[e].begin(), by_degree[e].end());
        // child multisets as non-increasing index sequences into `smaller`
        std::vector<std::vector<Tree>> forests;
        std::vector<Tree> current;
        auto rec = [&](auto&& self, std::size_t remaining, std::size_t bound) -> void {
            if (remaining == 0) {
                forests.push_back(current);
                return;
            }
            for (std::size_t k = bound; k-- > 0;) {
                if (smaller[k].degree() > remaining)
                    continue;
                current.push_back(smaller[k]);
                self(self, remaining - smaller[k].degree(), k + 1);
                current.pop_back();
            }
        };
        rec(rec, d - 1, smaller.size());
        for (std::size_t label = 0; label < num_labels; ++label)
            for (const auto& forest : forests)
                by_degree[d].emplace_back(label, forest);
        std::sort(by_degree[d].begin(), by_degree[d].end());
    }
    return by_degree[degree];
}

/// The homomorphism F -> A extending label l -> assign[l]. A tree with root
/// branches t1, ..., tk satisfies
///   t1 o t' = t + (t1 grafted at the non-root vertices of t'),
/// with t' the tree minus t1, so its value follows from trees of smaller degree
/// and trees of the same degree with fewer root children.
class TreeEvaluator {
public:
    TreeEvaluator(const PreLieAlgebra& a, std::vector<Vector> assign)
        : algebra_(a), assign_(std::move(assign)) {
        for (const auto& v : assign_)
            if (v.size() != a.dim())
                throw DimensionMismatch("assigned element has dimension " +
                                        std::to_string(v.size()) + ", algebra has " +
                                        std::to_string(a.dim()));
    }

    const Vector& operator()(const Tree& t) {
        if (auto it = memo_.find(t); it != memo_.end())
            return it->second;
        if (t.label() >= assign_.size())
            throw InvalidInput("no element assigned to label " + to_string(Tree(t.label())));
        Vector value;
        if (t.children().empty()) {
            value = assign_[t.label()];
        } else {
            const Tree& first = t.children().front();
            const Tree rest(t.label(), std::vector<Tree>(t.children().begin() + 1, t.children().end()));
            value = algebra_.multiply((*this)(first), (*this)(rest));
            const std::vector<Tree> grafts = graft_at_each_vertex(first, rest);
            // grafts[0] is t itself; the rest are grafts below the root
            for (std::size_t k = 1; k < grafts.size(); ++k)
                value = value - (*this)(grafts[k]);
        }
        return memo_.emplace(t, std::move(value)).first->second;
    }

    Vector operator()(const TreePoly& p) {
        if (p.truncated())
            throw NeedsHigherTruncation("cannot evaluate a polynomial whose terms were truncated");
        Vector out = zero_vector(algebra_.dim());
        for (const auto& [t, c] : p.terms())
            axpy(out, c, (*this)(t));
        return out;
    }

private:
    const PreLieAlgebra& algebra_;
    std::vector<Vector> assign_;
    std::map<Tree, Vector> memo_;
};

inline Vector evaluate(const TreePoly& p, const PreLieAlgebra& a, const std::vector<Vector>& assign) {
    TreeEvaluator eval(a, assign);
    return eval(p);
}

namespace detail {

/// F acting on V through evaluation, theta pulled back along it.
struct PullbackOps {
    const Representation& rep;
    const Cochain& theta;
    TreeEvaluator& eval;
    std::size_t value_dim;

    Vector left(const TreePoly& x, const Vector& u) const { return rep.act_left(eval(x), u); }
    Vector right(const Vector& u, const TreePoly& x) const { return rep.act_right(u, eval(x)); }
    TreePoly product(const TreePoly& x, const TreePoly& y) const { return graft_product(x, y); }
    TreePoly bracket(const TreePoly& x, const TreePoly& y) const { return tree_commutator(x, y); }
    Vector cochain(const std::vector<TreePoly>& args) const {
        std::vector<Vector> values;
        for (const auto& x : args)
            values.push_back(eval(x));
        return theta.evaluate(values);
    }
};

} // namespace detail

/// d(pi* theta) = 0 on all quadruples of basis trees (labels 0..dim g - 1) of
/// total degree <= D, where pi evaluates label l to assign[l].
inline CheckResult check_cocycle_pullback(const PreLieAlgebra& a, const Representation& rep,
                                          const Cochain& theta, const std::vector<Vector>& assign,
                                          std::size_t max_degree) {
    detail::require_cochain_shape(a, rep, theta);
    if (theta.arity() != 3)
        throw ArityMismatch("pull-back check expects a 3-cochain");
    if (max_degree < 4)
        throw NeedsHigherTruncation("quadruples of trees need D >= 4");
    if (assign.empty())
        throw InvalidInput("no labels assigned");
    TreeEvaluator eval(a, assign);
    std::vector<Tree> trees;
    for (std::size_t d = 1; d + 3 <= max_degree; ++d) {
        const auto layer = enumerate_trees(assign.size(), d);
        trees.insert(trees.end(), layer.begin(), layer.end());
    }
    const detail::PullbackOps ops{rep, theta, eval, rep.carrier_dim()};
    std::vector<std::size_t> idx(4);
    std::optional<Violation> found;
    auto rec = [&](auto&& self, std::size_t slot, std::size_t used) -> void {
        if (found)
            return;
        if (slot == 4) {
            std::vector<TreePoly> args;
            for (auto k : idx)
                args.push_back(TreePoly::basis(trees[k], max_degree));
            Vector value = coboundary_formula(args, ops);
            if (!is_zero(value)) {
                std::string where;
                for (auto k : idx)
                    where += (where.empty() ? "" : ", ") + to_string(trees[k]);
                found = Violation{"d(pi* theta) = 0 on " + where, idx, std::move(value),
                                  zero_vector(rep.carrier_dim())};
            }
            return;
        }
        for (std::size_t k = 0; k < trees.size(); ++k) {
            if (used + trees[k].degree() + (3 - slot) > max_degree)
                break;
            idx[slot] = k;
            self(self, slot + 1, used + trees[k].degree());
        }
    };
    rec(rec, 0, 0);
    if (found)
        return *found;
    return CheckResult::valid();
}

/// The default assignment label l -> e_l.
inline std::vector<Vector> basis_assignment(std::size_t dim) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k < dim; ++k)
        out.push_back(unit_vector(dim, k));
    return out;
}

} // namespace prelie
