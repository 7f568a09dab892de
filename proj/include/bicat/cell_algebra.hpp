#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "bicat/core.hpp"

namespace bicat {

// A bracketed composite of 1-cells. Two words with the same leaves differ only
// by associators, which CellAlgebra inserts on demand.
class Word {
public:
    Word() = default;

    [[nodiscard]] OneId value() const { return n_->value; }
    [[nodiscard]] ObjId src() const { return n_->src; }
    [[nodiscard]] ObjId tgt() const { return n_->tgt; }
    [[nodiscard]] bool is_leaf() const { return !n_->left; }
    [[nodiscard]] const Word& left() const { return *n_->left; }
    [[nodiscard]] const Word& right() const { return *n_->right; }
    [[nodiscard]] std::vector<OneId> leaves() const;
    [[nodiscard]] std::string to_string(const FinBicat& b) const;

    friend bool operator==(const Word& a, const Word& b);

private:
    friend class CellAlgebra;
    struct Node {
        OneId value;
        ObjId src, tgt;
        std::shared_ptr<const Word> left, right;
    };
    explicit Word(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

struct Cell {
    TwoId cell;
    Word src;
    Word tgt;
};

// Typed 2-cell arithmetic over one FinBicat. Vertical composition accepts
// boundaries that agree up to bracketing and fills in the canonical
// associator composite. With `fast` set on a strict instance the rebracketing
// cells are identities and are not computed.
class CellAlgebra {
public:
    explicit CellAlgebra(const FinBicat& b, bool fast = false) : b_(b), fast_(fast && b.strict()) {}

    [[nodiscard]] const FinBicat& bicat() const { return b_; }

    [[nodiscard]] Word w(OneId f) const;
    // g∘f
    [[nodiscard]] Word w(const Word& g, const Word& f) const;
    [[nodiscard]] Word w(OneId g, OneId f) const { return w(w(g), w(f)); }

    [[nodiscard]] Cell id(const Word& x) const { return {b_.id2(x.value()), x, x}; }
    [[nodiscard]] Cell atom(TwoId a) const { return {a, w(b_.src1(a)), w(b_.tgt1(a))}; }
    [[nodiscard]] Cell atom(TwoId a, const Word& s, const Word& t) const;

    // upper ⊙ lower
    [[nodiscard]] Cell vcomp(const Cell& upper, const Cell& lower) const;
    // Bottom-up chain: factors are applied left to right.
    [[nodiscard]] Cell chain(std::initializer_list<Cell> factors) const;
    [[nodiscard]] Cell lwhisk(const Word& g, const Cell& a) const;
    [[nodiscard]] Cell rwhisk(const Cell& a, const Word& f) const;
    [[nodiscard]] Cell hcomp(const Cell& beta, const Cell& alpha) const;
    [[nodiscard]] Cell inv(const Cell& a) const;

    [[nodiscard]] Cell rebracket(const Word& from, const Word& to) const;
    [[nodiscard]] Cell cast(const Cell& c, const Word& s, const Word& t) const;

    // f∘id ⇒ f and id∘f ⇒ f as typed cells.
    [[nodiscard]] Cell runit(const Word& f) const;
    [[nodiscard]] Cell lunit(const Word& f) const;

private:
    Cell exact(const Cell& upper, const Cell& lower) const;
    Cell to_left(const Word& x) const;
    Cell merge(const Word& g, const Word& f) const;

    const FinBicat& b_;
    bool fast_;
};

}  // namespace bicat
