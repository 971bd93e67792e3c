#include "doctest.h"
#include "peakqsym/composition.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace peakqsym;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

// All subsets of [1, n-1] as index sets, by bitmask.
std::vector<IndexSet> all_index_sets(int n) {
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> elems;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                elems.push_back(i);
        out.emplace_back(std::move(elems), n);
    }
    return out;
}

}  // namespace

TEST_CASE("composition construction and parsing") {
    Composition a = comp({3, 2, 5, 1});
    CHECK(a.degree() == 11);
    CHECK(a.length() == 4);
    CHECK(a.part(1) == 3);
    CHECK(a.part(4) == 1);
    CHECK(a.to_text() == "3,2,5,1");
    CHECK(Composition::parse("3,2,5,1") == a);
    CHECK(Composition::parse("7") == comp({7}));

    CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(comp({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(comp({-3}), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("3,2,"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("3 2"), std::invalid_argument);
}

TEST_CASE("set_of and comp_of examples") {
    CHECK(set_of(comp({3, 2, 5, 1})) == IndexSet({3, 5, 10}, 11));
    CHECK(set_of(comp({6})) == IndexSet({}, 6));
    CHECK(set_of(comp({2, 2, 2})) == IndexSet({2, 4}, 6));

    CHECK(comp_of(IndexSet({3, 5, 10}, 11)) == comp({3, 2, 5, 1}));
    CHECK(comp_of(IndexSet({}, 6)) == comp({6}));
    CHECK(comp_of(IndexSet({2, 4}, 6)) == comp({2, 2, 2}));

    CHECK_THROWS_AS(IndexSet({3, 3}, 7), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({0}, 7), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({7}, 7), std::invalid_argument);
}

TEST_CASE("set_of/comp_of round-trips for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& alpha : compositions_of(n))
            CHECK(comp_of(set_of(alpha)) == alpha);
        for (const auto& x : all_index_sets(n))
            CHECK(set_of(comp_of(x)) == x);
    }
}

TEST_CASE("peak_set examples and properties") {
    CHECK(peak_set(IndexSet({3}, 4)) == IndexSet({3}, 4));
    CHECK(peak_set(IndexSet({1}, 5)) == IndexSet({}, 5));
    CHECK(peak_set(IndexSet({2, 3, 5}, 8)) == IndexSet({2, 5}, 8));

    CHECK(peak_of_composition(comp({3, 1})) == IndexSet({3}, 4));
    CHECK(peak_of_composition(comp({6})) == IndexSet({}, 6));
    CHECK(peak_of_composition(comp({2, 3, 1})) == IndexSet({2, 5}, 6));

    // Never contains 1, never two consecutive integers.
    for (int n = 2; n <= 9; ++n) {
        for (const auto& x : all_index_sets(n)) {
            IndexSet p = peak_set(x);
            CHECK_FALSE(p.contains(1));
            const auto& e = p.elements();
            for (size_t i = 0; i + 1 < e.size(); ++i)
                CHECK(e[i + 1] - e[i] >= 2);
        }
    }
}

TEST_CASE("refines examples and set-containment equivalence") {
    CHECK(refines(comp({2, 1, 2, 4, 1, 1}), comp({3, 2, 5, 1})));
    CHECK(refines(comp({3, 2}), comp({3, 2})));
    CHECK_FALSE(refines(comp({2, 2}), comp({3, 1})));
    CHECK_FALSE(refines(comp({2, 2}), comp({2, 2, 1})));

    for (int n = 1; n <= 8; ++n) {
        auto all = compositions_of(n);
        for (const auto& alpha : all) {
            const IndexSet sa = set_of(alpha);
            for (const auto& beta : all) {
                const IndexSet sb = set_of(beta);
                bool contained = std::includes(
                    sb.elements().begin(), sb.elements().end(),
                    sa.elements().begin(), sa.elements().end());
                CHECK(refines(beta, alpha) == contained);
            }
        }
    }
}

TEST_CASE("is_peak_composition and reverse") {
    CHECK(is_peak_composition(comp({3, 2, 5, 1})));
    CHECK(is_peak_composition(comp({9})));
    CHECK(is_peak_composition(comp({1})));
    CHECK_FALSE(is_peak_composition(comp({1, 3})));
    CHECK_FALSE(is_peak_composition(comp({2, 1, 2})));

    CHECK(reverse(comp({3, 2, 5, 1})) == comp({1, 5, 2, 3}));
    CHECK(reverse(comp({4})) == comp({4}));
    CHECK(reverse(comp({2, 3})) == comp({3, 2}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : compositions_of(n))
            CHECK(reverse(reverse(alpha)) == alpha);
}

TEST_CASE("enumeration counts and canonical order") {
    for (int n = 1; n <= 12; ++n)
        CHECK(compositions_of(n).size() == (size_t{1} << (n - 1)));

    CHECK(compositions_of(3).size() == 4);
    CHECK(peak_compositions_of(1) == std::vector<Composition>{comp({1})});

    std::vector<Composition> p5 = {comp({5}), comp({4, 1}), comp({3, 2}),
                                   comp({2, 3}), comp({2, 2, 1})};
    CHECK(peak_compositions_of(5) == p5);

    for (int n = 1; n <= 10; ++n) {
        auto all = compositions_of(n);
        CHECK(std::is_sorted(all.begin(), all.end(), CanonicalLess{}));
        std::set<std::string> texts;
        for (const auto& alpha : all) {
            CHECK(alpha.degree() == n);
            texts.insert(alpha.to_text());
        }
        CHECK(texts.size() == all.size());

        // peak_compositions_of = filter of compositions_of, same order.
        std::vector<Composition> filtered;
        for (const auto& alpha : all)
            if (is_peak_composition(alpha))
                filtered.push_back(alpha);
        CHECK(peak_compositions_of(n) == filtered);
    }
}

TEST_CASE("randomized refinement round-trips") {
    std::mt19937 rng(20260816);
    for (int iter = 0; iter < 2000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        // Random composition of n via a random subset of [1, n-1].
        unsigned mask = static_cast<unsigned>(rng()) & ((1u << (n - 1)) - 1);
        std::vector<int> elems;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                elems.push_back(i);
        IndexSet x(elems, n);
        Composition alpha = comp_of(x);
        CHECK(set_of(alpha) == x);
        CHECK(Composition::parse(alpha.to_text()) == alpha);

        // Any superset of set(alpha) yields a refinement.
        unsigned extra = static_cast<unsigned>(rng()) & ((1u << (n - 1)) - 1);
        unsigned super = mask | extra;
        std::vector<int> selems;
        for (int i = 1; i < n; ++i)
            if (super & (1u << (i - 1)))
                selems.push_back(i);
        Composition beta = comp_of(IndexSet(selems, n));
        CHECK(refines(beta, alpha));
    }
}
