#pragma once

// Propositional formulas over an arbitrary atom type.

#include <cassert>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace satforge {

template <typename A>
class Formula {
public:
    enum class Kind { Bottom, Atom, Not, And, Or };

    Formula() : node_(bottom_node()) {}

    static Formula bottom() { return Formula(); }
    static Formula top() { return negate(bottom()); }
    static Formula atom(A a) { return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}, {}})); }
    static Formula negate(Formula f) { return Formula(std::make_shared<const Node>(Node{Kind::Not, A{}, std::move(f.node_), {}})); }
    static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }

    Kind kind() const { return node_->kind; }
    const A& atom_value() const {
        assert(kind() == Kind::Atom);
        return node_->atom;
    }
    Formula child() const { return Formula(node_->lhs); }
    Formula lhs() const { return Formula(node_->lhs); }
    Formula rhs() const { return Formula(node_->rhs); }

    bool is_bottom() const { return kind() == Kind::Bottom; }
    bool is_top() const { return kind() == Kind::Not && node_->lhs->kind == Kind::Bottom; }
    bool is_literal() const {
        return kind() == Kind::Atom || (kind() == Kind::Not && node_->lhs->kind == Kind::Atom);
    }

    template <typename Valuation>
    bool evaluate(const Valuation& value) const {
        return eval(*node_, value);
    }

    template <typename Fn>
    auto map_atoms(const Fn& fn) const -> Formula<std::invoke_result_t<Fn, const A&>> {
        using Target = Formula<std::invoke_result_t<Fn, const A&>>;
        switch (kind()) {
            case Kind::Bottom: return Target::bottom();
            case Kind::Atom: return Target::atom(fn(node_->atom));
            case Kind::Not: return Target::negate(child().map_atoms(fn));
            case Kind::And: return Target::conj(lhs().map_atoms(fn), rhs().map_atoms(fn));
            case Kind::Or: return Target::disj(lhs().map_atoms(fn), rhs().map_atoms(fn));
        }
        return Target::bottom();
    }

    /// Disjunction tree whose leaves are literals, ⊥ or ¬⊥.
    bool is_clause() const {
        switch (kind()) {
            case Kind::Bottom:
            case Kind::Atom: return true;
            case Kind::Not: return is_literal() || is_top();
            case Kind::Or: return lhs().is_clause() && rhs().is_clause();
            case Kind::And: return false;
        }
        return false;
    }

    /// Conjunction tree of clauses.
    bool is_cnf() const {
        if (kind() == Kind::And) return lhs().is_cnf() && rhs().is_cnf();
        return is_clause();
    }

    /// Visits the conjuncts of a conjunction tree left to right.
    template <typename Fn>
    void for_each_conjunct(const Fn& fn) const {
        if (kind() == Kind::And) {
            lhs().for_each_conjunct(fn);
            rhs().for_each_conjunct(fn);
        } else {
            fn(*this);
        }
    }

    template <typename Fn>
    void for_each_atom(const Fn& fn) const {
        switch (kind()) {
            case Kind::Bottom: return;
            case Kind::Atom: fn(node_->atom); return;
            case Kind::Not: child().for_each_atom(fn); return;
            case Kind::And:
            case Kind::Or:
                lhs().for_each_atom(fn);
                rhs().for_each_atom(fn);
                return;
        }
    }

    friend bool operator==(const Formula& a, const Formula& b) { return equal(*a.node_, *b.node_); }

private:
    struct Node {
        Kind kind;
        A atom;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static std::shared_ptr<const Node> bottom_node() {
        static const auto node = std::make_shared<const Node>(Node{Kind::Bottom, A{}, {}, {}});
        return node;
    }

    static Formula binary(Kind k, Formula a, Formula b) {
        return Formula(std::make_shared<const Node>(Node{k, A{}, std::move(a.node_), std::move(b.node_)}));
    }

    template <typename Valuation>
    static bool eval(const Node& n, const Valuation& value) {
        switch (n.kind) {
            case Kind::Bottom: return false;
            case Kind::Atom: return static_cast<bool>(value(n.atom));
            case Kind::Not: return !eval(*n.lhs, value);
            case Kind::And: return eval(*n.lhs, value) && eval(*n.rhs, value);
            case Kind::Or: return eval(*n.lhs, value) || eval(*n.rhs, value);
        }
        return false;
    }

    static bool equal(const Node& a, const Node& b) {
        if (&a == &b) return true;
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::Bottom: return true;
            case Kind::Atom: return a.atom == b.atom;
            case Kind::Not: return equal(*a.lhs, *b.lhs);
            case Kind::And:
            case Kind::Or: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        }
        return false;
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

template <typename Atom>
Formula<Atom> fold_balanced(std::span<const Formula<Atom>> fs, bool conjunction) {
    if (fs.size() == 1) return fs.front();
    auto mid = fs.size() / 2;
    auto l = fold_balanced(fs.first(mid), conjunction);
    auto r = fold_balanced(fs.subspan(mid), conjunction);
    return conjunction ? Formula<Atom>::conj(std::move(l), std::move(r)) : Formula<Atom>::disj(std::move(l), std::move(r));
}

}  // namespace detail

/// ⋀ over a list: ¬⊥ when empty. Operands keep their left-to-right order;
/// the tree is balanced so depth stays logarithmic.
template <typename Atom>
Formula<Atom> big_and(const std::vector<Formula<Atom>>& fs) {
    if (fs.empty()) return Formula<Atom>::top();
    return detail::fold_balanced<Atom>(fs, true);
}

/// ⋁ over a list: ⊥ when empty.
template <typename Atom>
Formula<Atom> big_or(const std::vector<Formula<Atom>>& fs) {
    if (fs.empty()) return Formula<Atom>::bottom();
    return detail::fold_balanced<Atom>(fs, false);
}

}  // namespace satforge
