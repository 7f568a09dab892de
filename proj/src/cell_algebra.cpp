#include "bicat/cell_algebra.hpp"

#include <fmt/format.h>

namespace bicat {

std::vector<OneId> Word::leaves() const {
    if (is_leaf()) return {value()};
    auto out = left().leaves();
    auto r = right().leaves();
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::string Word::to_string(const FinBicat& b) const {
    if (is_leaf()) return b.name(value());
    return "(" + left().to_string(b) + "∘" + right().to_string(b) + ")";
}

bool operator==(const Word& a, const Word& b) {
    if (a.n_ == b.n_) return true;
    if (a.is_leaf() != b.is_leaf() || a.value() != b.value()) return false;
    if (a.is_leaf()) return true;
    return a.left() == b.left() && a.right() == b.right();
}

Word CellAlgebra::w(OneId f) const {
    return Word(std::make_shared<const Word::Node>(Word::Node{f, b_.src(f), b_.tgt(f), nullptr, nullptr}));
}

Word CellAlgebra::w(const Word& g, const Word& f) const {
    OneId v = b_.hcomp1(g.value(), f.value());
    return Word(std::make_shared<const Word::Node>(
        Word::Node{v, f.src(), g.tgt(), std::make_shared<const Word>(g), std::make_shared<const Word>(f)}));
}

Cell CellAlgebra::atom(TwoId a, const Word& s, const Word& t) const {
    if (b_.src1(a) != s.value() || b_.tgt1(a) != t.value())
        throw TypingError(fmt::format("{} does not have frame {} => {}", b_.name(a), s.to_string(b_), t.to_string(b_)));
    return {a, s, t};
}

Cell CellAlgebra::exact(const Cell& upper, const Cell& lower) const {
    return {b_.vcomp(upper.cell, lower.cell), lower.src, upper.tgt};
}

Cell CellAlgebra::vcomp(const Cell& upper, const Cell& lower) const {
    if (lower.tgt == upper.src) return exact(upper, lower);
    if (lower.tgt.leaves() != upper.src.leaves())
        throw TypingError(fmt::format("cannot stack {} on {}", upper.src.to_string(b_), lower.tgt.to_string(b_)));
    return exact(upper, exact(rebracket(lower.tgt, upper.src), lower));
}

Cell CellAlgebra::chain(std::initializer_list<Cell> factors) const {
    auto it = factors.begin();
    Cell acc = *it;
    for (++it; it != factors.end(); ++it) acc = vcomp(*it, acc);
    return acc;
}

Cell CellAlgebra::lwhisk(const Word& g, const Cell& a) const {
    return {b_.whisk_left(g.value(), a.cell), w(g, a.src), w(g, a.tgt)};
}

Cell CellAlgebra::rwhisk(const Cell& a, const Word& f) const {
    return {b_.whisk_right(a.cell, f.value()), w(a.src, f), w(a.tgt, f)};
}

Cell CellAlgebra::hcomp(const Cell& beta, const Cell& alpha) const {
    return exact(rwhisk(beta, alpha.tgt), lwhisk(beta.src, alpha));
}

Cell CellAlgebra::inv(const Cell& a) const {
    auto r = b_.inverse(a.cell);
    if (!r) throw InvertibilityError(fmt::format("{} is not invertible", b_.name(a.cell)));
    return {*r, a.tgt, a.src};
}

// x ⇒ ((x_n∘x_{n-1})∘…)∘x_1
Cell CellAlgebra::to_left(const Word& x) const {
    if (x.is_leaf()) return id(x);
    Cell cg = to_left(x.left());
    Cell cf = to_left(x.right());
    return exact(merge(cg.tgt, cf.tgt), hcomp(cg, cf));
}

// g∘f ⇒ left-nested form, for g and f already left-nested.
Cell CellAlgebra::merge(const Word& g, const Word& f) const {
    if (f.is_leaf()) return id(w(g, f));
    const Word& rest = f.left();
    const Word& last = f.right();
    Cell th{b_.assoc(g.value(), rest.value(), last.value()), w(g, f), w(w(g, rest), last)};
    return exact(rwhisk(merge(g, rest), last), th);
}

Cell CellAlgebra::rebracket(const Word& from, const Word& to) const {
    if (from == to) return id(from);
    if (from.leaves() != to.leaves())
        throw TypingError(fmt::format("{} and {} are not rebracketings of each other", from.to_string(b_),
                                      to.to_string(b_)));
    if (fast_) return {b_.id2(from.value()), from, to};
    return exact(inv(to_left(to)), to_left(from));
}

Cell CellAlgebra::cast(const Cell& c, const Word& s, const Word& t) const {
    return exact(rebracket(c.tgt, t), exact(c, rebracket(s, c.src)));
}

Cell CellAlgebra::runit(const Word& f) const {
    return {b_.runit(f.value()), w(f, w(b_.id1(f.src()))), f};
}

Cell CellAlgebra::lunit(const Word& f) const {
    return {b_.lunit(f.value()), w(w(b_.id1(f.tgt())), f), f};
}

}  // namespace bicat
