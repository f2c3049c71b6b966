#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidsep/bitvec.hpp"

namespace rigidsep {

enum class Kind { linear, tournament, relation };

const char* kind_name(Kind k);

/** A total order on {0..m-1} in one-line notation: perm[i] is the i-th
 *  smallest element. A rank array (position of each element) is kept so
 *  order queries are O(1).
 */
class LinearOrder {
public:
    explicit LinearOrder(std::vector<int> perm);

    static LinearOrder natural(int m);

    int size() const { return static_cast<int>(perm_.size()); }
    int at(int pos) const { return perm_.at(pos); }
    int rank(int x) const { return rank_.at(x); }

    /** x <= y in this order; reflexive. */
    bool leq(int x, int y) const { return rank_.at(x) <= rank_.at(y); }

    const std::vector<int>& perm() const { return perm_; }

    LinearOrder reversed() const;

    /** Rename every element x to pi[x]; pi must be a permutation of 0..m-1. */
    LinearOrder relabeled(const std::vector<int>& pi) const;

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
        return a.perm_ == b.perm_;
    }
    friend bool operator<(const LinearOrder& a, const LinearOrder& b) {
        return a.perm_ < b.perm_;
    }

private:
    std::vector<int> perm_;
    std::vector<int> rank_;
};

/** Irreflexive complete antisymmetric binary relation, one bit per
 *  unordered pair {x,y}: the bit for x < y is set iff (x,y) is an arc.
 */
class Tournament {
public:
    explicit Tournament(int m);

    static Tournament from_order(const LinearOrder& ord);

    int size() const { return m_; }

    /** (x,y) in the tournament; requires x != y. */
    bool arc(int x, int y) const;

    /** Orient the pair {x,y} as x -> y. */
    void set_arc(int x, int y);

    Tournament transposed() const;

    /** Index of the unordered pair {x,y}, x < y, in lexicographic order. */
    static int pair_index(int m, int x, int y);

    friend bool operator==(const Tournament& a, const Tournament& b) = default;

private:
    int m_ = 0;
    BitVec bits_;
};

/** General m x m 0/1 relation with a uniform diagonal (reflexive or
 *  irreflexive); the mixed case is unrepresentable by construction.
 */
class BinaryRelation {
public:
    BinaryRelation(int m, bool reflexive);

    static BinaryRelation from_order(const LinearOrder& ord);       // reflexive
    static BinaryRelation from_tournament(const Tournament& tour);  // irreflexive

    int size() const { return m_; }
    bool reflexive() const { return reflexive_; }

    bool at(int x, int y) const;

    /** Set an off-diagonal cell; diagonal cells are fixed by the flag. */
    void set(int x, int y, bool v);

    BinaryRelation transposed() const;

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) = default;

private:
    int cell(int x, int y) const;
    int m_ = 0;
    bool reflexive_ = false;
    BitVec cells_;
};

/** A unary partial function given by parallel (point, image) lists. */
struct PartialUnaryMap {
    std::vector<int> domain;
    std::vector<int> values;

    int image_of(int x) const;
};

/** An ordered list of relations of one kind over a shared ground set.
 *  Immutable after construction; all operations on it are pure.
 */
class Family {
public:
    static Family of_orders(int m, std::vector<LinearOrder> members);
    static Family of_tournaments(int m, std::vector<Tournament> members);
    static Family of_relations(int m, std::vector<BinaryRelation> members);

    Kind kind() const { return kind_; }
    int ground_size() const { return m_; }
    int size() const { return n_; }

    /** Characteristic function of member k at (x,y). Linear orders answer
     *  as reflexive total orders, tournaments as irreflexive relations.
     */
    bool holds(int member, int x, int y) const;

    const LinearOrder& order_at(int k) const;
    const Tournament& tournament_at(int k) const;
    const BinaryRelation& relation_at(int k) const;

    const std::vector<LinearOrder>& orders() const;
    const std::vector<Tournament>& tournaments() const;
    const std::vector<BinaryRelation>& relations() const;

    /** View a linear-order family as tournaments (strict parts). */
    Family as_tournaments() const;

    friend bool operator==(const Family& a, const Family& b) = default;

private:
    Family(Kind kind, int m)
        : kind_(kind), m_(m) {}

    Kind kind_ = Kind::linear;
    int m_ = 0;
    int n_ = 0;
    std::vector<LinearOrder> orders_;
    std::vector<Tournament> tournaments_;
    std::vector<BinaryRelation> relations_;
};

/** All m! linear orders on {0..m-1} in lexicographic one-line order (m <= 10). */
std::vector<LinearOrder> all_linear_orders(int m);

/** All 2^(m(m-1)/2) tournaments on {0..m-1} (m <= 6). */
std::vector<Tournament> all_tournaments(int m);

}  // namespace rigidsep
