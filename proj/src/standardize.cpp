#include "peakqsym/standardize.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace peakqsym {

namespace {

std::vector<std::vector<MarkedEntry>> copy_rows(const Tableau& t) {
    return t.rows();
}

}  // namespace

Tableau standardize(const Tableau& t) {
    if (!is_mpct(t)) throw std::invalid_argument("standardize: input is not an MPCT");

    auto rows = copy_rows(t);
    int maxv = 0;
    for (const auto& row : rows)
        for (const auto& e : row) maxv = std::max(maxv, e.value);

    // Relabel occurrences of each value in turn: marked ones first, scanning
    // rows bottom to top (at most one marked occurrence per row); then
    // unmarked ones, scanning rows top to bottom, left to right within a row.
    int next = 0;
    std::vector<std::vector<MarkedEntry>> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        out[r].resize(rows[r].size(), MarkedEntry{0, false});

    for (int v = 1; v <= maxv; ++v) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c].value == v && rows[r][c].marked)
                    out[r][c] = MarkedEntry{++next, true};
        for (std::size_t ri = rows.size(); ri-- > 0;)
            for (std::size_t c = 0; c < rows[ri].size(); ++c)
                if (rows[ri][c].value == v && !rows[ri][c].marked)
                    out[ri][c] = MarkedEntry{++next, false};
    }
    return Tableau(t.shape(), out);
}

namespace detail {

Tableau destandardize_unchecked(const Tableau& s, const Composition& beta) {
    std::vector<int> bounds;  // partial sums of beta
    int acc = 0;
    for (int p : beta.parts()) bounds.push_back(acc += p);

    auto rows = copy_rows(s);
    for (auto& row : rows)
        for (auto& e : row) {
            auto it = std::lower_bound(bounds.begin(), bounds.end(), e.value);
            e.value = static_cast<int>(it - bounds.begin()) + 1;
        }
    return Tableau(s.shape(), rows);
}

}  // namespace detail

Tableau destandardize(const Tableau& s, const Composition& beta) {
    if (!is_smpct(s)) throw std::invalid_argument("destandardize: input is not an SMPCT");
    if (beta.degree() != s.n())
        throw std::invalid_argument("destandardize: weight degree does not match tableau size");
    if (!refines(beta, comp_of(descent_marked(s))))
        throw std::invalid_argument("destandardize: weight does not refine the descent composition");
    return detail::destandardize_unchecked(s, beta);
}

Tableau unmark(const Tableau& s) {
    if (!is_smpct(s)) throw std::invalid_argument("unmark: input is not an SMPCT");
    auto rows = copy_rows(s);
    for (auto& row : rows)
        for (auto& e : row) e.marked = false;
    Tableau out(s.shape(), rows);
    if (!is_spct(out)) throw std::logic_error("unmark: result is not an SPCT");
    return out;
}

std::vector<Tableau> marking_fiber(const Tableau& q, const IndexSet& d) {
    if (!is_spct(q)) throw std::invalid_argument("marking_fiber: input is not an SPCT");
    const int n = q.n();
    if (d.degree() != n) throw std::invalid_argument("marking_fiber: descent set degree mismatch");

    const IndexSet des = descent_up(q);
    const IndexSet peaks = peak_up(q);
    for (int p : peaks.elements())
        if (d.contains(p) == d.contains(p - 1))
            throw std::invalid_argument(
                "marking_fiber: peak set not contained in the symmetric difference of the "
                "descent set and its shift");

    // Each i in [1, n-1] pins one mark: an ascent in q forces the mark of
    // i itself (since then i lies in the target descent set exactly when it
    // is unmarked), while a weak descent forces the mark of i+1.  Both rules
    // can hit the same position only at a peak, where admissibility makes
    // them agree.  Unconstrained positions are free; there are exactly
    // |peaks| + 1 of them.
    std::vector<int> state(n + 1, 0);  // 0 free, +1 marked, -1 unmarked
    for (int i = 1; i <= n - 1; ++i) {
        if (des.contains(i))
            state[i] = d.contains(i) ? -1 : +1;
        else
            state[i + 1] = d.contains(i) ? +1 : -1;
    }
    std::vector<int> free_positions;
    for (int p = 1; p <= n; ++p)
        if (state[p] == 0) free_positions.push_back(p);
    assert(static_cast<int>(free_positions.size()) == peaks.size() + 1);

    const auto base = copy_rows(q);
    const auto pos = standard_positions(q);

    std::vector<Tableau> out;
    out.reserve(std::size_t{1} << free_positions.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_positions.size()); ++mask) {
        auto rows = base;
        for (int p = 1; p <= n; ++p)
            if (state[p] != 0) {
                const Box b = pos[static_cast<std::size_t>(p)];
                rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.column - 1)]
                    .marked = (state[p] > 0);
            }
        for (std::size_t k = 0; k < free_positions.size(); ++k)
            if (mask & (std::size_t{1} << k)) {
                const Box b = pos[static_cast<std::size_t>(free_positions[k])];
                rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.column - 1)]
                    .marked = true;
            }
        out.emplace_back(q.shape(), rows);
    }
    std::sort(out.begin(), out.end(), TableauCanonicalLess{});
    return out;
}

}  // namespace peakqsym
