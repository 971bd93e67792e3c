#include "peakqsym/insertion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace peakqsym {

namespace {

bool rows_nonempty_positive_distinct(const Filling& rows) {
    std::set<int> seen;
    for (const auto& row : rows) {
        if (row.empty())
            return false;
        for (int e : row) {
            if (e <= 0)
                return false;
            if (!seen.insert(e).second)
                return false;
        }
    }
    return true;
}

Tableau tableau_from_filling(const Filling& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return Tableau::from_values(Composition(std::move(parts)), rows);
}

Filling filling_from_tableau(const Tableau& t) {
    Filling rows;
    rows.reserve(t.rows().size());
    for (const auto& row : t.rows()) {
        std::vector<int> vals;
        vals.reserve(row.size());
        for (const auto& e : row) {
            if (e.marked)
                throw std::invalid_argument("insertion requires unmarked entries");
            vals.push_back(e.value);
        }
        rows.push_back(std::move(vals));
    }
    return rows;
}

}  // namespace

bool satisfies_spyct124(const Filling& rows) {
    if (!rows_nonempty_positive_distinct(rows))
        return false;
    const int rc = static_cast<int>(rows.size());
    for (const auto& row : rows)
        for (size_t c = 1; c < row.size(); ++c)
            if (row[c] <= row[c - 1])
                return false;
    for (int r = 1; r < rc; ++r)
        if (rows[static_cast<size_t>(r)][0] <= rows[static_cast<size_t>(r) - 1][0])
            return false;
    // T(c,r) < T(c+1,r') with r' < r forces box (c+1,r) with a smaller entry.
    for (int r = 2; r <= rc; ++r) {
        const auto& upper = rows[static_cast<size_t>(r) - 1];
        for (int rp = 1; rp < r; ++rp) {
            const auto& lower = rows[static_cast<size_t>(rp) - 1];
            size_t cmax = std::min(upper.size(), lower.size() - 1);
            for (size_t c = 1; c <= cmax; ++c) {
                if (upper[c - 1] < lower[c]) {
                    if (upper.size() < c + 1 || upper[c] >= lower[c])
                        return false;
                }
            }
        }
    }
    return true;
}

std::pair<Filling, Box> insert_entry(const Filling& rows, int k,
                                     std::vector<InsertStep>* trace) {
    if (k <= 0)
        throw std::invalid_argument("inserted entry must be positive");
    for (const auto& row : rows)
        for (int e : row)
            if (e == k)
                throw std::invalid_argument("duplicate entry " + std::to_string(k));
    if (!satisfies_spyct124(rows))
        throw std::invalid_argument("filling does not satisfy the insertion conditions");

    Filling out = rows;
    const int rc = static_cast<int>(out.size());

    // Augmented boxes, rightmost column first, top to bottom within a column;
    // column 1 is never a bump target. Bumps keep row lengths fixed, so this
    // list stays valid for the whole chain.
    int cmax = 0;
    for (const auto& row : out)
        cmax = std::max(cmax, static_cast<int>(row.size()) + 1);
    std::vector<Box> scan;
    for (int c = cmax; c >= 2; --c)
        for (int r = rc; r >= 1; --r)
            if (c <= static_cast<int>(out[static_cast<size_t>(r) - 1].size()) + 1)
                scan.push_back(Box{c, r});

    int k0 = k;
    for (size_t i = 0; i < scan.size(); ++i) {
        const int c = scan[i].column;
        const int r = scan[i].row;
        auto& row = out[static_cast<size_t>(r) - 1];
        const int left = row[static_cast<size_t>(c) - 2];
        const bool augmented = c == static_cast<int>(row.size()) + 1;
        if (left > k0 || (!augmented && row[static_cast<size_t>(c) - 1] <= k0))
            continue;
        if (augmented) {
            row.push_back(k0);
            if (trace)
                trace->push_back(InsertStep{k0, Box{c, r}, std::nullopt, false});
            return {std::move(out), Box{c, r}};
        }
        const int bumped = row[static_cast<size_t>(c) - 1];
        row[static_cast<size_t>(c) - 1] = k0;
        if (trace)
            trace->push_back(InsertStep{k0, Box{c, r}, bumped, false});
        k0 = bumped;
    }

    // No box qualifies: open a new row, keeping the first column increasing.
    int rstar = 1;
    for (const auto& row : out)
        if (row[0] < k0)
            ++rstar;
    out.insert(out.begin() + (rstar - 1), std::vector<int>{k0});
    if (trace)
        trace->push_back(InsertStep{k0, Box{1, rstar}, std::nullopt, true});
    return {std::move(out), Box{1, rstar}};
}

std::pair<Tableau, Box> insert_entry(const Tableau& t, int k) {
    auto [rows, box] = insert_entry(filling_from_tableau(t), k);
    return {tableau_from_filling(rows), box};
}

InsertionResult reading_insertion(const Tableau& t) {
    if (!is_sit(t))
        throw std::invalid_argument("reading insertion requires a standard immaculate tableau");
    const std::vector<int> word = reading_word(t);
    Filling p;
    Filling q;
    for (size_t j = 0; j < word.size(); ++j) {
        auto [next, box] = insert_entry(p, word[j]);
        const int label = static_cast<int>(j) + 1;
        if (next.size() > p.size()) {
            q.insert(q.begin() + (box.row - 1), std::vector<int>{label});
        } else {
            q[static_cast<size_t>(box.row) - 1].push_back(label);
        }
        p = std::move(next);
    }
    return InsertionResult{tableau_from_filling(p), tableau_from_filling(q)};
}

namespace {

// Place entries e..last by appending to row ends, each strictly right of the
// previous placement, never completing a length that a lower row exceeds.
void extend_dirts(Filling& rows, int e, int last, int min_col,
                  std::vector<Filling>& out) {
    if (e > last) {
        out.push_back(rows);
        return;
    }
    const int rc = static_cast<int>(rows.size());
    for (int r = 1; r <= rc; ++r) {
        const int len = static_cast<int>(rows[static_cast<size_t>(r) - 1].size());
        if (len + 1 < min_col)
            continue;
        bool blocked = false;
        for (int rp = 1; rp < r && !blocked; ++rp)
            if (static_cast<int>(rows[static_cast<size_t>(rp) - 1].size()) == len + 1)
                blocked = true;
        if (blocked)
            continue;
        rows[static_cast<size_t>(r) - 1].push_back(e);
        extend_dirts(rows, e + 1, last, len + 2, out);
        rows[static_cast<size_t>(r) - 1].pop_back();
    }
}

}  // namespace

std::vector<Tableau> generate_dirts(const Composition& alpha) {
    if (!is_peak_composition(alpha))
        throw std::invalid_argument("generate_dirts requires a peak composition");
    const auto& parts = alpha.parts();
    const int k = alpha.length();

    std::vector<Filling> current;
    {
        std::vector<int> seed(static_cast<size_t>(parts[static_cast<size_t>(k) - 1]));
        for (size_t j = 0; j < seed.size(); ++j)
            seed[j] = static_cast<int>(j) + 1;
        current.push_back(Filling{std::move(seed)});
    }
    int m = parts[static_cast<size_t>(k) - 1];

    for (int i = k - 1; i >= 1; --i) {
        const int block = parts[static_cast<size_t>(i) - 1];
        std::vector<Filling> next;
        for (const auto& q : current) {
            Filling grown = q;
            grown.insert(grown.begin(), std::vector<int>{m + 1, m + 2});
            extend_dirts(grown, m + 3, m + block, 3, next);
        }
        current = std::move(next);
        m += block;
    }

    std::vector<Tableau> out;
    out.reserve(current.size());
    for (const auto& rows : current)
        out.push_back(tableau_from_filling(rows));
    return out;
}

bool is_single_term(const Composition& alpha) {
    if (!is_peak_composition(alpha))
        throw std::invalid_argument("is_single_term requires a peak composition");
    const auto& p = alpha.parts();
    const int k = alpha.length();
    bool all_two_before_last = true;
    for (int i = 0; i + 1 < k; ++i)
        if (p[static_cast<size_t>(i)] != 2)
            all_two_before_last = false;
    if (all_two_before_last)
        return true;
    if (k >= 2 && p[static_cast<size_t>(k) - 1] == 1) {
        bool all_two_before_penultimate = true;
        for (int i = 0; i + 2 < k; ++i)
            if (p[static_cast<size_t>(i)] != 2)
                all_two_before_penultimate = false;
        if (all_two_before_penultimate)
            return true;
    }
    return false;
}

}  // namespace peakqsym
