#include "gint/expr.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gint/error.hpp"

namespace gint {

struct Expr::Node {
    Kind kind;
    GaussianInt value;           // Constant
    std::string name;            // Variable
    std::vector<Expr> children;  // Sum/Product: all; Power/Negate: exactly one
    std::uint64_t exponent = 0;  // Power
};

Expr Expr::constant(GaussianInt value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = std::move(value);
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
    if (name == "i")
        raise(ErrorCode::ReservedName, "\"i\" is the imaginary-unit literal, not a variable");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> children) {
    if (children.empty()) return constant(0);
    if (children.size() == 1) return children.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->children = std::move(children);
    return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> children) {
    if (children.empty()) return constant(1);
    if (children.size() == 1) return children.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->children = std::move(children);
    return Expr(std::move(n));
}

Expr Expr::power(Expr base, std::uint64_t exponent) {
    if (exponent == 0) return constant(1);
    if (exponent == 1) return base;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Power;
    n->children.push_back(std::move(base));
    n->exponent = exponent;
    return Expr(std::move(n));
}

Expr Expr::negate(Expr child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Negate;
    n->children.push_back(std::move(child));
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
const GaussianInt& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
const Expr& Expr::child() const { return node_->children.front(); }
std::uint64_t Expr::exponent() const { return node_->exponent; }
const void* Expr::id() const noexcept { return node_.get(); }

namespace {

int kind_rank(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Constant: return 0;
        case Expr::Kind::Variable: return 1;
        case Expr::Kind::Sum: return 2;
        case Expr::Kind::Product: return 3;
        case Expr::Kind::Power: return 4;
        case Expr::Kind::Negate: return 5;
    }
    return 6;
}

int cmp_int(const Int& a, const Int& b) {
    const int c = cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::vector<Expr> sorted_children(const std::vector<Expr>& children) {
    std::vector<Expr> s = children;
    std::sort(s.begin(), s.end(), [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
    return s;
}

}  // namespace

int compare(const Expr& a, const Expr& b) {
    if (a.id() == b.id()) return 0;
    const int ra = kind_rank(a.kind());
    const int rb = kind_rank(b.kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind()) {
        case Expr::Kind::Constant: {
            int c = cmp_int(a.value().re, b.value().re);
            if (c != 0) return c;
            return cmp_int(a.value().im, b.value().im);
        }
        case Expr::Kind::Variable: {
            int c = a.name().compare(b.name());
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        case Expr::Kind::Power: {
            int c = compare(a.child(), b.child());
            if (c != 0) return c;
            if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? -1 : 1;
            return 0;
        }
        case Expr::Kind::Negate:
            return compare(a.child(), b.child());
        case Expr::Kind::Sum:
        case Expr::Kind::Product: {
            const std::vector<Expr> sa = sorted_children(a.children());
            const std::vector<Expr> sb = sorted_children(b.children());
            const std::size_t m = std::min(sa.size(), sb.size());
            for (std::size_t i = 0; i < m; ++i) {
                int c = compare(sa[i], sb[i]);
                if (c != 0) return c;
            }
            if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

bool Expr::operator==(const Expr& other) const { return compare(*this, other) == 0; }

GaussianInt evaluate(const Expr& e, const Assignment& assignment) {
    std::unordered_map<const void*, GaussianInt> memo;

    auto rec = [&](auto&& self, const Expr& node) -> const GaussianInt& {
        auto it = memo.find(node.id());
        if (it != memo.end()) return it->second;
        GaussianInt out;
        switch (node.kind()) {
            case Expr::Kind::Constant:
                out = node.value();
                break;
            case Expr::Kind::Variable: {
                auto found = assignment.find(node.name());
                if (found == assignment.end())
                    raise(ErrorCode::UnboundVariable, "unbound variable: " + node.name());
                out = found->second;
                break;
            }
            case Expr::Kind::Sum: {
                for (const Expr& c : node.children()) out += self(self, c);
                break;
            }
            case Expr::Kind::Product: {
                out = GaussianInt(1);
                for (const Expr& c : node.children()) out *= self(self, c);
                break;
            }
            case Expr::Kind::Power:
                out = pow_ui(self(self, node.child()), node.exponent());
                break;
            case Expr::Kind::Negate:
                out = -self(self, node.child());
                break;
        }
        return memo.emplace(node.id(), std::move(out)).first->second;
    };
    return rec(rec, e);
}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings) {
    std::unordered_map<const void*, Expr> memo;

    auto rec = [&](auto&& self, const Expr& node) -> Expr {
        auto it = memo.find(node.id());
        if (it != memo.end()) return it->second;
        Expr out = node;
        switch (node.kind()) {
            case Expr::Kind::Constant:
                break;
            case Expr::Kind::Variable: {
                auto found = bindings.find(node.name());
                if (found != bindings.end()) out = found->second;
                break;
            }
            case Expr::Kind::Sum:
            case Expr::Kind::Product: {
                std::vector<Expr> mapped;
                mapped.reserve(node.children().size());
                bool changed = false;
                for (const Expr& c : node.children()) {
                    mapped.push_back(self(self, c));
                    changed = changed || mapped.back().id() != c.id();
                }
                if (changed)
                    out = node.kind() == Expr::Kind::Sum ? Expr::sum(std::move(mapped))
                                                         : Expr::product(std::move(mapped));
                break;
            }
            case Expr::Kind::Power: {
                Expr base = self(self, node.child());
                if (base.id() != node.child().id()) out = Expr::power(base, node.exponent());
                break;
            }
            case Expr::Kind::Negate: {
                Expr inner = self(self, node.child());
                if (inner.id() != node.child().id()) out = Expr::negate(inner);
                break;
            }
        }
        memo.emplace(node.id(), out);
        return out;
    };
    return rec(rec, e);
}

std::vector<std::string> free_vars(const Expr& e) {
    std::unordered_set<const void*> visited;
    std::vector<std::string> names;

    auto rec = [&](auto&& self, const Expr& node) -> void {
        if (!visited.insert(node.id()).second) return;
        if (node.kind() == Expr::Kind::Variable) {
            names.push_back(node.name());
            return;
        }
        for (const Expr& c : node.children()) self(self, c);
    };
    rec(rec, e);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

std::uint64_t degree_bound(const Expr& e) {
    std::unordered_map<const void*, std::uint64_t> memo;

    auto rec = [&](auto&& self, const Expr& node) -> std::uint64_t {
        auto it = memo.find(node.id());
        if (it != memo.end()) return it->second;
        std::uint64_t out = 0;
        switch (node.kind()) {
            case Expr::Kind::Constant:
                out = 0;
                break;
            case Expr::Kind::Variable:
                out = 1;
                break;
            case Expr::Kind::Sum:
                for (const Expr& c : node.children()) out = std::max(out, self(self, c));
                break;
            case Expr::Kind::Product:
                for (const Expr& c : node.children()) out += self(self, c);
                break;
            case Expr::Kind::Power:
                out = self(self, node.child()) * node.exponent();
                break;
            case Expr::Kind::Negate:
                out = self(self, node.child());
                break;
        }
        memo.emplace(node.id(), out);
        return out;
    };
    return rec(rec, e);
}

std::size_t dag_node_count(const Expr& e) {
    std::unordered_set<const void*> visited;
    auto rec = [&](auto&& self, const Expr& node) -> void {
        if (!visited.insert(node.id()).second) return;
        for (const Expr& c : node.children()) self(self, c);
    };
    rec(rec, e);
    return visited.size();
}

// ---- rendering -------------------------------------------------------------

namespace {

// Grammar levels, loosest first. A node rendered at level L can stand
// wherever the grammar expects level <= L; otherwise it gets parentheses.
enum Level : int { LevelExpr = 0, LevelTerm = 1, LevelFactor = 2, LevelAtom = 3 };

struct Rendered {
    std::string text;
    Level level;
};

Rendered render_node(const Expr& e);

std::string render_at(const Expr& e, Level required) {
    Rendered r = render_node(e);
    if (r.level >= required) return r.text;
    return "(" + r.text + ")";
}

Rendered render_const(const GaussianInt& g) {
    if (g.im == 0) return {g.re.get_str(), LevelAtom};  // "-5" is a '-' atom
    std::string im_part;
    Level im_level = LevelAtom;
    if (g.im == 1) {
        im_part = "i";
    } else if (g.im == -1) {
        im_part = "-i";
    } else {
        im_part = g.im.get_str() + "*i";
        im_level = LevelTerm;
    }
    if (g.re == 0) return {im_part, im_level};
    std::string text = g.re.get_str();
    if (im_part[0] != '-') text += "+";
    text += im_part;
    return {text, LevelExpr};
}

Rendered render_node(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Constant:
            return render_const(e.value());
        case Expr::Kind::Variable:
            return {e.name(), LevelAtom};
        case Expr::Kind::Sum: {
            std::string text;
            bool first = true;
            for (const Expr& c : e.children()) {
                if (c.kind() == Expr::Kind::Negate && !first) {
                    text += "-" + render_at(c.child(), LevelTerm);
                } else {
                    std::string part = render_at(c, LevelTerm);
                    if (!first) {
                        text += "+";
                        // A leading '-' would rebind across the join
                        // ("u" + "-6^2" reads as u minus 6^2), so isolate it.
                        if (part[0] == '-') part = "(" + part + ")";
                    }
                    text += part;
                }
                first = false;
            }
            return {text, LevelExpr};
        }
        case Expr::Kind::Product: {
            std::string text;
            bool first = true;
            for (const Expr& c : e.children()) {
                std::string part = render_at(c, LevelFactor);
                if (!first) {
                    text += "*";
                    if (part[0] == '-') part = "(" + part + ")";
                }
                text += part;
                first = false;
            }
            return {text, LevelTerm};
        }
        case Expr::Kind::Power:
            return {render_at(e.child(), LevelAtom) + "^" + std::to_string(e.exponent()),
                    LevelFactor};
        case Expr::Kind::Negate:
            return {"-" + render_at(e.child(), LevelAtom), LevelAtom};
    }
    return {"0", LevelAtom};
}

}  // namespace

std::string render(const Expr& e) { return render_node(e).text; }

}  // namespace gint
