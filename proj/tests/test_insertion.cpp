#include "doctest.h"

#include "peakqsym/composition.hpp"
#include "peakqsym/insertion.hpp"
#include "peakqsym/tableau.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace peakqsym;

namespace {

Tableau from_rows(const Filling& rows) {
    std::vector<int> parts;
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return Tableau::from_values(Composition(parts), rows);
}

std::vector<Composition> peak_compositions_up_to(int max_n) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_n; ++n)
        for (const Composition& alpha : peak_compositions_of(n))
            out.push_back(alpha);
    return out;
}

bool in_spyct(const Tableau& t) {
    return is_peak_composition(t.shape()) && is_spyct(t);
}

bool in_spct(const Tableau& t) {
    return is_peak_composition(t.shape()) && is_spct(t);
}

}  // namespace

TEST_CASE("satisfies_spyct124 accepts and rejects fillings") {
    CHECK(satisfies_spyct124({{3, 4}, {5, 6, 12}, {8, 9, 11}}));
    CHECK(satisfies_spyct124({{1, 2, 3}}));
    CHECK(satisfies_spyct124({}));
    CHECK(satisfies_spyct124({{1, 2}, {3, 4, 5}}));
    // Rows must increase.
    CHECK_FALSE(satisfies_spyct124({{2, 1}}));
    // First column must increase bottom to top.
    CHECK_FALSE(satisfies_spyct124({{3, 4}, {1, 2}}));
    // 2 < 3 = T(2,1) with T(2,2) absent fails the rectification condition.
    CHECK_FALSE(satisfies_spyct124({{1, 3}, {2}}));
    // 2 < 3 = T(2,1) with T(2,2) = 4 > 3 also fails it.
    CHECK_FALSE(satisfies_spyct124({{1, 3}, {2, 4}}));
    // Duplicate, empty-row, and non-positive entries are rejected.
    CHECK_FALSE(satisfies_spyct124({{1, 1}}));
    CHECK_FALSE(satisfies_spyct124({{1}, {}}));
    CHECK_FALSE(satisfies_spyct124({{0, 1}}));
}

TEST_CASE("insert_entry: bump chain across three rows") {
    const Filling start = {{3, 4}, {5, 6, 12}, {8, 9, 11}};
    std::vector<InsertStep> trace;
    auto [result, box] = insert_entry(start, 10, &trace);
    CHECK(result == Filling{{3, 4, 12}, {5, 6, 11}, {8, 9, 10}});
    CHECK(box == Box{3, 1});
    REQUIRE(trace.size() == 3);
    CHECK(trace[0] == InsertStep{10, Box{3, 3}, 11, false});
    CHECK(trace[1] == InsertStep{11, Box{3, 2}, 12, false});
    CHECK(trace[2] == InsertStep{12, Box{3, 1}, std::nullopt, false});
}

TEST_CASE("insert_entry: empty filling and new bottom row") {
    auto [single, b1] = insert_entry(Filling{}, 7);
    CHECK(single == Filling{{7}});
    CHECK(b1 == Box{1, 1});

    std::vector<InsertStep> trace;
    auto [shifted, b2] = insert_entry(Filling{{2, 3}}, 1, &trace);
    CHECK(shifted == Filling{{1}, {2, 3}});
    CHECK(b2 == Box{1, 1});
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].new_row);

    // A bumped value with no landing box opens a row above every smaller
    // first-column entry — here in the middle of the diagram.
    std::vector<InsertStep> chain;
    auto [mid, b3] = insert_entry(Filling{{1, 2, 6}, {8, 9}}, 5, &chain);
    CHECK(mid == Filling{{1, 2, 5}, {6}, {8, 9}});
    CHECK(b3 == Box{1, 2});
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == InsertStep{5, Box{3, 1}, 6, false});
    CHECK(chain[1] == InsertStep{6, Box{1, 2}, std::nullopt, true});

    // ... and at the top when the bumped value exceeds the whole first column.
    auto [top, b4] = insert_entry(Filling{{1, 9}, {7, 8}}, 2);
    CHECK(top == Filling{{1, 2}, {7, 8}, {9}});
    CHECK(b4 == Box{1, 3});
}

TEST_CASE("insert_entry rejects bad input") {
    CHECK_THROWS_AS(insert_entry(Filling{{1, 2}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(insert_entry(Filling{{2, 1}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(insert_entry(Filling{{1, 3}, {2}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(insert_entry(Filling{{1, 2}}, 0), std::invalid_argument);

    const Tableau t = from_rows({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(insert_entry(t, 3), std::invalid_argument);
    auto [grown, box] = insert_entry(t, 5);
    CHECK(grown == from_rows({{1, 2}, {3, 4, 5}}));
    CHECK(box == Box{3, 2});
}

TEST_CASE("reading insertion: the three displayed images") {
    // The standard fillings of shape (3,2) with reading words 45123, 35124,
    // and 34125.
    const Tableau t1 = from_rows({{1, 2, 3}, {4, 5}});
    const Tableau t2 = from_rows({{1, 2, 4}, {3, 5}});
    const Tableau t3 = from_rows({{1, 2, 5}, {3, 4}});
    CHECK(reading_word(t1) == std::vector<int>{4, 5, 1, 2, 3});
    CHECK(reading_word(t2) == std::vector<int>{3, 5, 1, 2, 4});
    CHECK(reading_word(t3) == std::vector<int>{3, 4, 1, 2, 5});

    InsertionResult r1 = reading_insertion(t1);
    CHECK(r1.p == from_rows({{1, 2, 3}, {4, 5}}));
    CHECK(r1.q == from_rows({{3, 4, 5}, {1, 2}}));

    InsertionResult r2 = reading_insertion(t2);
    CHECK(r2.p == from_rows({{1, 2, 4}, {3, 5}}));
    CHECK(r2.q == from_rows({{3, 4, 5}, {1, 2}}));

    InsertionResult r3 = reading_insertion(t3);
    CHECK(r3.p == from_rows({{1, 2}, {3, 4, 5}}));
    CHECK(r3.q == from_rows({{3, 4}, {1, 2, 5}}));
}

TEST_CASE("reading insertion: single row is a fixed point") {
    const Tableau t = from_rows({{1, 2, 3, 4}});
    InsertionResult r = reading_insertion(t);
    CHECK(r.p == t);
    CHECK(r.q == t);
}

TEST_CASE("reading insertion rejects non-standard input") {
    CHECK_THROWS_AS(reading_insertion(from_rows({{2, 3}, {1, 4}})),
                    std::invalid_argument);
}

TEST_CASE("generate_dirts: pinned listings") {
    const auto three = generate_dirts(Composition::parse("3,2,3"));
    REQUIRE(three.size() == 3);
    CHECK(three[0] == from_rows({{6, 7, 8}, {4, 5}, {1, 2, 3}}));
    CHECK(three[1] == from_rows({{6, 7}, {4, 5, 8}, {1, 2, 3}}));
    CHECK(three[2] == from_rows({{6, 7}, {4, 5}, {1, 2, 3, 8}}));

    const auto two = generate_dirts(Composition::parse("3,2"));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == from_rows({{3, 4, 5}, {1, 2}}));
    CHECK(two[1] == from_rows({{3, 4}, {1, 2, 5}}));

    const auto one = generate_dirts(Composition::parse("2,2,5"));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == from_rows({{8, 9}, {6, 7}, {1, 2, 3, 4, 5}}));

    CHECK(generate_dirts(Composition::parse("4")).size() == 1);
    CHECK_THROWS_AS(generate_dirts(Composition::parse("1,2")), std::invalid_argument);
}

TEST_CASE("generate_dirts matches the brute-force filter, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        // All peak-shape DIRTs of degree n, bucketed by row strip shape.
        std::map<Composition, std::vector<Tableau>, CanonicalLess> buckets;
        for (const Composition& beta : peak_compositions_of(n))
            for (const Tableau& q : oracles::brute_standard(TableauFamily::DIRT, beta))
                buckets[row_strip_shape(q)].push_back(q);

        for (const Composition& alpha : peak_compositions_of(n)) {
            std::vector<Tableau> produced = generate_dirts(alpha);
            for (const Tableau& q : produced) {
                CHECK(is_dirt(q));
                CHECK(is_peak_composition(q.shape()));
                CHECK(row_strip_shape(q) == reverse(alpha));
            }
            std::sort(produced.begin(), produced.end(), TableauCanonicalLess{});
            CHECK(std::adjacent_find(produced.begin(), produced.end()) == produced.end());

            auto it = buckets.find(reverse(alpha));
            std::vector<Tableau> expected =
                it == buckets.end() ? std::vector<Tableau>{} : it->second;
            std::sort(expected.begin(), expected.end(), TableauCanonicalLess{});
            CHECK(produced == expected);
        }
    }
}

TEST_CASE("is_single_term characterisation") {
    CHECK(is_single_term(Composition::parse("2,2,5")));
    CHECK(is_single_term(Composition::parse("2,2,3,1")));
    CHECK(is_single_term(Composition::parse("7")));
    CHECK(is_single_term(Composition::parse("3,1")));
    CHECK(is_single_term(Composition::parse("2,2,2,2")));
    CHECK(is_single_term(Composition::parse("2,1")));
    CHECK_FALSE(is_single_term(Composition::parse("3,2,3")));
    CHECK_FALSE(is_single_term(Composition::parse("4,2")));
    CHECK_FALSE(is_single_term(Composition::parse("3,2,1")));
    CHECK_THROWS_AS(is_single_term(Composition::parse("1,2")), std::invalid_argument);

    for (const Composition& alpha : peak_compositions_up_to(8))
        CHECK(is_single_term(alpha) == (generate_dirts(alpha).size() == 1));
}

TEST_CASE("reading insertion invariants over all standard fillings, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            const auto sits = enumerate(TableauFamily::SIT, alpha);
            std::set<std::pair<std::string, std::string>> images;
            for (const Tableau& t : sits) {
                InsertionResult r = reading_insertion(t);
                CHECK(is_syct(r.p));
                CHECK(is_dirt(r.q));
                CHECK(r.p.shape() == r.q.shape());
                CHECK(row_strip_shape(r.q) == reverse(alpha));
                CHECK(descent_up(t) == descent_left(r.p));
                images.emplace(r.p.to_text(), r.q.to_text());

                // The first column survives insertion.
                REQUIRE(r.p.row_count() == t.row_count());
                for (int row = 1; row <= t.row_count(); ++row)
                    CHECK(r.p.value_at(1, row) == t.value_at(1, row));

                if (in_spct(t)) {
                    CHECK(in_spyct(r.p));
                    CHECK(peak_up(t) == peak_left(r.p));
                    CHECK(is_peak_composition(r.q.shape()));
                    // The second column survives as well.
                    for (int row = 1; row <= t.row_count(); ++row) {
                        CHECK(r.p.has_box(2, row) == t.has_box(2, row));
                        if (t.has_box(2, row))
                            CHECK(r.p.value_at(2, row) == t.value_at(2, row));
                    }
                } else {
                    CHECK_FALSE(in_spyct(r.p));
                }
            }
            CHECK(images.size() == sits.size());
        }
    }
}

TEST_CASE("new boxes move weakly right of their column, strictly within a row, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            for (const Tableau& t : enumerate(TableauFamily::SIT, alpha)) {
                // Source box of each reading-word position in t.
                std::vector<Box> source;
                for (int r = t.row_count(); r >= 1; --r)
                    for (int c = 1; c <= t.shape().part(r); ++c)
                        source.push_back(Box{c, r});

                Filling p;
                int last_row = 0;
                int last_col = 0;
                for (size_t j = 0; j < source.size(); ++j) {
                    const int value = t.value_at(source[j].column, source[j].row);
                    auto [next, box] = insert_entry(p, value);
                    CHECK(box.column >= source[j].column);
                    if (source[j].row == last_row)
                        CHECK(box.column > last_col);
                    last_row = source[j].row;
                    last_col = box.column;
                    p = std::move(next);
                }
            }
        }
    }
}

TEST_CASE("pair counts match the standard enumeration, n <= 6") {
    for (const Composition& alpha : peak_compositions_up_to(6)) {
        std::map<Composition, int, CanonicalLess> dirts_by_shape;
        for (const Tableau& q : generate_dirts(alpha))
            dirts_by_shape[q.shape()] += 1;
        size_t pairs = 0;
        for (const auto& [beta, count] : dirts_by_shape)
            pairs += enumerate(TableauFamily::SPYCT, beta).size() *
                     static_cast<size_t>(count);
        CHECK(pairs == enumerate(TableauFamily::SPCT, alpha).size());
    }
}
