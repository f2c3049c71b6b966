#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "rigidsep/relations.hpp"

namespace rigidsep::testing {

inline LinearOrder random_order(std::mt19937& rng, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return LinearOrder(std::move(perm));
}

inline Tournament random_tournament(std::mt19937& rng, int m) {
    Tournament t(m);
    std::bernoulli_distribution coin;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (coin(rng)) t.set_arc(x, y);
            else t.set_arc(y, x);
    return t;
}

inline BinaryRelation random_relation(std::mt19937& rng, int m) {
    std::bernoulli_distribution coin;
    BinaryRelation r(m, coin(rng));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (x != y) r.set(x, y, coin(rng));
    return r;
}

inline Family random_linear_family(std::mt19937& rng, int m, int n) {
    std::vector<LinearOrder> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) v.push_back(random_order(rng, m));
    return Family::of_orders(m, std::move(v));
}

inline Family random_tournament_family(std::mt19937& rng, int m, int n) {
    std::vector<Tournament> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) v.push_back(random_tournament(rng, m));
    return Family::of_tournaments(m, std::move(v));
}

inline Family random_relation_family(std::mt19937& rng, int m, int n) {
    std::vector<BinaryRelation> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) v.push_back(random_relation(rng, m));
    return Family::of_relations(m, std::move(v));
}

}  // namespace rigidsep::testing
