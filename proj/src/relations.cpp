#include "rigidsep/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigidsep {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::linear: return "linear";
        case Kind::tournament: return "tournament";
        case Kind::relation: return "relation";
    }
    return "?";
}

LinearOrder::LinearOrder(std::vector<int> perm) : perm_(std::move(perm)) {
    const int m = static_cast<int>(perm_.size());
    rank_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        int x = perm_[pos];
        if (x < 0 || x >= m) throw std::invalid_argument("LinearOrder: element out of range");
        if (rank_[x] != -1) throw std::invalid_argument("LinearOrder: repeated element");
        rank_[x] = pos;
    }
}

LinearOrder LinearOrder::natural(int m) {
    if (m < 0) throw std::invalid_argument("LinearOrder::natural: negative size");
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    return LinearOrder(std::move(p));
}

LinearOrder LinearOrder::reversed() const {
    std::vector<int> p(perm_.rbegin(), perm_.rend());
    return LinearOrder(std::move(p));
}

LinearOrder LinearOrder::relabeled(const std::vector<int>& pi) const {
    if (static_cast<int>(pi.size()) != size())
        throw std::invalid_argument("LinearOrder::relabeled: size mismatch");
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = pi.at(perm_[i]);
    return LinearOrder(std::move(p));
}

Tournament::Tournament(int m) : m_(m), bits_(m >= 0 ? m * (m - 1) / 2 : 0) {
    if (m < 0) throw std::invalid_argument("Tournament: negative size");
}

int Tournament::pair_index(int m, int x, int y) {
    // x < y required; pairs enumerated (0,1),(0,2),...,(m-2,m-1)
    return x * (2 * m - x - 1) / 2 + (y - x - 1);
}

Tournament Tournament::from_order(const LinearOrder& ord) {
    Tournament t(ord.size());
    for (int x = 0; x < t.m_; ++x)
        for (int y = x + 1; y < t.m_; ++y)
            if (ord.leq(x, y)) t.bits_.set(pair_index(t.m_, x, y));
    return t;
}

bool Tournament::arc(int x, int y) const {
    if (x == y) throw std::invalid_argument("Tournament::arc: diagonal query");
    if (x < y) return bits_.test(pair_index(m_, x, y));
    return !bits_.test(pair_index(m_, y, x));
}

void Tournament::set_arc(int x, int y) {
    if (x == y) throw std::invalid_argument("Tournament::set_arc: diagonal");
    if (x < y)
        bits_.set(pair_index(m_, x, y), true);
    else
        bits_.set(pair_index(m_, y, x), false);
}

Tournament Tournament::transposed() const {
    Tournament t(m_);
    t.bits_ = bits_.complemented();
    return t;
}

BinaryRelation::BinaryRelation(int m, bool reflexive)
    : m_(m), reflexive_(reflexive), cells_(m >= 0 ? m * m : 0) {
    if (m < 0) throw std::invalid_argument("BinaryRelation: negative size");
    if (reflexive)
        for (int x = 0; x < m; ++x) cells_.set(cell(x, x));
}

int BinaryRelation::cell(int x, int y) const { return x * m_ + y; }

BinaryRelation BinaryRelation::from_order(const LinearOrder& ord) {
    BinaryRelation r(ord.size(), true);
    for (int x = 0; x < r.m_; ++x)
        for (int y = 0; y < r.m_; ++y)
            if (x != y && ord.leq(x, y)) r.cells_.set(r.cell(x, y));
    return r;
}

BinaryRelation BinaryRelation::from_tournament(const Tournament& tour) {
    BinaryRelation r(tour.size(), false);
    for (int x = 0; x < r.m_; ++x)
        for (int y = 0; y < r.m_; ++y)
            if (x != y && tour.arc(x, y)) r.cells_.set(r.cell(x, y));
    return r;
}

bool BinaryRelation::at(int x, int y) const {
    if (x < 0 || x >= m_ || y < 0 || y >= m_)
        throw std::out_of_range("BinaryRelation::at: element out of range");
    return cells_.test(cell(x, y));
}

void BinaryRelation::set(int x, int y, bool v) {
    if (x < 0 || x >= m_ || y < 0 || y >= m_)
        throw std::out_of_range("BinaryRelation::set: element out of range");
    if (x == y && v != reflexive_)
        throw std::invalid_argument("BinaryRelation::set: diagonal fixed by reflexivity flag");
    cells_.set(cell(x, y), v);
}

BinaryRelation BinaryRelation::transposed() const {
    BinaryRelation r(m_, reflexive_);
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            if (cells_.test(cell(x, y))) r.cells_.set(r.cell(y, x));
    return r;
}

int PartialUnaryMap::image_of(int x) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain[i] == x) return values[i];
    throw std::out_of_range("PartialUnaryMap: point not in domain");
}

Family Family::of_orders(int m, std::vector<LinearOrder> members) {
    Family f(Kind::linear, m);
    for (const auto& o : members)
        if (o.size() != m) throw std::invalid_argument("Family: member ground-set mismatch");
    f.orders_ = std::move(members);
    f.n_ = static_cast<int>(f.orders_.size());
    return f;
}

Family Family::of_tournaments(int m, std::vector<Tournament> members) {
    Family f(Kind::tournament, m);
    for (const auto& t : members)
        if (t.size() != m) throw std::invalid_argument("Family: member ground-set mismatch");
    f.tournaments_ = std::move(members);
    f.n_ = static_cast<int>(f.tournaments_.size());
    return f;
}

Family Family::of_relations(int m, std::vector<BinaryRelation> members) {
    Family f(Kind::relation, m);
    for (const auto& r : members)
        if (r.size() != m) throw std::invalid_argument("Family: member ground-set mismatch");
    f.relations_ = std::move(members);
    f.n_ = static_cast<int>(f.relations_.size());
    return f;
}

bool Family::holds(int member, int x, int y) const {
    if (x < 0 || x >= m_ || y < 0 || y >= m_)
        throw std::out_of_range("Family::holds: element out of range");
    switch (kind_) {
        case Kind::linear: return orders_.at(member).leq(x, y);
        case Kind::tournament: return x != y && tournaments_.at(member).arc(x, y);
        case Kind::relation: return relations_.at(member).at(x, y);
    }
    return false;
}

const LinearOrder& Family::order_at(int k) const {
    if (kind_ != Kind::linear) throw std::logic_error("Family: not a linear-order family");
    return orders_.at(k);
}

const Tournament& Family::tournament_at(int k) const {
    if (kind_ != Kind::tournament) throw std::logic_error("Family: not a tournament family");
    return tournaments_.at(k);
}

const BinaryRelation& Family::relation_at(int k) const {
    if (kind_ != Kind::relation) throw std::logic_error("Family: not a relation family");
    return relations_.at(k);
}

const std::vector<LinearOrder>& Family::orders() const {
    if (kind_ != Kind::linear) throw std::logic_error("Family: not a linear-order family");
    return orders_;
}

const std::vector<Tournament>& Family::tournaments() const {
    if (kind_ != Kind::tournament) throw std::logic_error("Family: not a tournament family");
    return tournaments_;
}

const std::vector<BinaryRelation>& Family::relations() const {
    if (kind_ != Kind::relation) throw std::logic_error("Family: not a relation family");
    return relations_;
}

Family Family::as_tournaments() const {
    switch (kind_) {
        case Kind::tournament: return *this;
        case Kind::linear: {
            std::vector<Tournament> ts;
            ts.reserve(orders_.size());
            for (const auto& o : orders_) ts.push_back(Tournament::from_order(o));
            return of_tournaments(m_, std::move(ts));
        }
        case Kind::relation:
            throw std::invalid_argument("Family::as_tournaments: general relations are not tournaments");
    }
    throw std::logic_error("Family::as_tournaments: bad kind");
}

std::vector<LinearOrder> all_linear_orders(int m) {
    if (m < 0 || m > 10) throw std::invalid_argument("all_linear_orders: m must be in 0..10");
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<LinearOrder> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Tournament> all_tournaments(int m) {
    if (m < 0 || m > 6) throw std::invalid_argument("all_tournaments: m must be in 0..6");
    const int pairs = m * (m - 1) / 2;
    std::vector<Tournament> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << pairs); ++bits) {
        Tournament t(m);
        int p = 0;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y, ++p)
                if ((bits >> p) & 1) t.set_arc(x, y);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace rigidsep
