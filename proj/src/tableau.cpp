#include "peakqsym/tableau.hpp"

#include "peakqsym/standardize.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakqsym {

std::string MarkedEntry::to_text() const {
    std::string out = std::to_string(value);
    if (marked)
        out += '\'';
    return out;
}

TableauFamily family_from_text(std::string_view name) {
    if (name == "mpct") return TableauFamily::MPCT;
    if (name == "smpct") return TableauFamily::SMPCT;
    if (name == "spct") return TableauFamily::SPCT;
    if (name == "spyct") return TableauFamily::SPYCT;
    if (name == "sit") return TableauFamily::SIT;
    if (name == "syct") return TableauFamily::SYCT;
    if (name == "dirt") return TableauFamily::DIRT;
    throw std::invalid_argument("unknown tableau family: " + std::string(name));
}

std::string family_to_text(TableauFamily family) {
    switch (family) {
        case TableauFamily::MPCT: return "mpct";
        case TableauFamily::SMPCT: return "smpct";
        case TableauFamily::SPCT: return "spct";
        case TableauFamily::SPYCT: return "spyct";
        case TableauFamily::SIT: return "sit";
        case TableauFamily::SYCT: return "syct";
        case TableauFamily::DIRT: return "dirt";
    }
    throw std::logic_error("bad family tag");
}

Tableau::Tableau(Composition shape, std::vector<std::vector<MarkedEntry>> rows)
    : m_shape(std::move(shape)), m_rows(std::move(rows)) {
    if (m_rows.size() != static_cast<size_t>(m_shape.length()))
        throw std::invalid_argument("tableau: row count does not match shape");
    for (int r = 1; r <= m_shape.length(); ++r) {
        const auto& row = m_rows[static_cast<size_t>(r) - 1];
        if (row.size() != static_cast<size_t>(m_shape.part(r)))
            throw std::invalid_argument("tableau: row length does not match shape");
        for (const MarkedEntry& e : row)
            if (e.value < 1)
                throw std::invalid_argument("tableau: entries must be positive");
    }
}

Tableau Tableau::from_values(Composition shape, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<MarkedEntry>> marked;
    marked.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<MarkedEntry> mrow;
        mrow.reserve(row.size());
        for (int v : row)
            mrow.push_back(MarkedEntry{v, false});
        marked.push_back(std::move(mrow));
    }
    return Tableau(std::move(shape), std::move(marked));
}

std::string Tableau::to_text() const {
    std::string out;
    for (size_t r = 0; r < m_rows.size(); ++r) {
        if (r)
            out += " / ";
        for (size_t c = 0; c < m_rows[r].size(); ++c) {
            if (c)
                out += ',';
            out += m_rows[r][c].to_text();
        }
    }
    return out;
}

bool canonical_less(const Tableau& a, const Tableau& b) {
    const auto& x = a.rows();
    const auto& y = b.rows();
    for (size_t r = 0; r < std::min(x.size(), y.size()); ++r) {
        for (size_t c = 0; c < std::min(x[r].size(), y[r].size()); ++c) {
            if (x[r][c] != y[r][c])
                return x[r][c] < y[r][c];
        }
        if (x[r].size() != y[r].size())
            return x[r].size() < y[r].size();
    }
    return x.size() < y.size();
}

namespace {

void require_peak_shape(const Tableau& t, const char* what) {
    if (!is_peak_composition(t.shape()))
        throw std::invalid_argument(std::string(what) + ": shape is not a peak composition");
}

// MPCT1: rows weakly increase left to right, no marked value twice in a row.
bool rows_weakly_increase_no_marked_repeat(const Tableau& t) {
    for (const auto& row : t.rows()) {
        for (size_t c = 0; c + 1 < row.size(); ++c)
            if (row[c + 1] < row[c])
                return false;
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c].marked)
                for (size_t d = c + 1; d < row.size(); ++d)
                    if (row[d].marked && row[d].value == row[c].value)
                        return false;
    }
    return true;
}

// MPCT2: first column strictly increases bottom to top (marked order).
bool first_column_strict(const Tableau& t) {
    for (int r = 1; r < t.row_count(); ++r) {
        const MarkedEntry& lo = t.at(1, r);
        const MarkedEntry& hi = t.at(1, r + 1);
        if (!(lo < hi))
            return false;
    }
    return true;
}

// MPCT3/SPCT3: for every k, the boxes with |entry| <= k form the diagram of a
// peak composition. Assumes rows weakly increase, so those boxes are row
// prefixes; it remains to check the per-row counts.
bool prefix_peak_condition(const Tableau& t) {
    int maxv = 0;
    for (const auto& row : t.rows())
        for (const MarkedEntry& e : row)
            maxv = std::max(maxv, e.value);
    const int rows = t.row_count();
    std::vector<int> count(static_cast<size_t>(rows) + 1, 0);
    for (int k = 1; k <= maxv; ++k) {
        int top = 0;
        for (int r = 1; r <= rows; ++r) {
            int c = 0;
            const auto& row = t.rows()[static_cast<size_t>(r) - 1];
            while (c < static_cast<int>(row.size()) && row[static_cast<size_t>(c)].value <= k)
                ++c;
            count[static_cast<size_t>(r)] = c;
            if (c > 0)
                top = r;
        }
        for (int r = 1; r < top; ++r)
            if (count[static_cast<size_t>(r)] < 2)
                return false;
    }
    return true;
}

// MPCT4: an unmarked i at (2,r) forbids i or i' at (1,r+1).
bool mpct4_condition(const Tableau& t) {
    for (int r = 1; r < t.row_count(); ++r) {
        if (!t.has_box(2, r))
            continue;
        const MarkedEntry& e = t.at(2, r);
        if (!e.marked && t.value_at(1, r + 1) == e.value)
            return false;
    }
    return true;
}

// Occurrence counts of 1..max absolute value form a composition (no zero
// before a nonzero).
bool weight_is_composition(const Tableau& t) {
    std::vector<int> count(static_cast<size_t>(t.n()) + 1, 0);
    int maxv = 0;
    for (const auto& row : t.rows())
        for (const MarkedEntry& e : row) {
            if (e.value > t.n())
                return false;
            ++count[static_cast<size_t>(e.value)];
            maxv = std::max(maxv, e.value);
        }
    for (int v = 1; v <= maxv; ++v)
        if (count[static_cast<size_t>(v)] == 0)
            return false;
    return true;
}

bool mpct_conditions(const Tableau& t) {
    return rows_weakly_increase_no_marked_repeat(t) && first_column_strict(t) &&
           prefix_peak_condition(t) && mpct4_condition(t) && weight_is_composition(t);
}

bool all_unmarked(const Tableau& t) {
    for (const auto& row : t.rows())
        for (const MarkedEntry& e : row)
            if (e.marked)
                return false;
    return true;
}

// Each of 1..n occurs exactly once as an absolute value.
bool standard_content(const Tableau& t) {
    std::vector<bool> seen(static_cast<size_t>(t.n()) + 1, false);
    for (const auto& row : t.rows())
        for (const MarkedEntry& e : row) {
            if (e.value > t.n() || seen[static_cast<size_t>(e.value)])
                return false;
            seen[static_cast<size_t>(e.value)] = true;
        }
    return true;
}

bool rows_strictly_increase(const Tableau& t) {
    for (const auto& row : t.rows())
        for (size_t c = 0; c + 1 < row.size(); ++c)
            if (row[c + 1].value <= row[c].value)
                return false;
    return true;
}

// SPYCT4: T(c,r) < T(c+1,r') with r' < r forces box (c+1,r) with
// T(c+1,r) < T(c+1,r').
bool spyct4_condition(const Tableau& t) {
    for (int r = 2; r <= t.row_count(); ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            for (int rp = 1; rp < r; ++rp) {
                if (!t.has_box(c + 1, rp))
                    continue;
                if (t.value_at(c, r) < t.value_at(c + 1, rp)) {
                    if (!t.has_box(c + 1, r))
                        return false;
                    if (t.value_at(c + 1, r) >= t.value_at(c + 1, rp))
                        return false;
                }
            }
    return true;
}

// DIRT3: first column increases from top to bottom.
bool first_column_increases_downward(const Tableau& t) {
    for (int r = 1; r < t.row_count(); ++r)
        if (t.value_at(1, r) <= t.value_at(1, r + 1))
            return false;
    return true;
}

// DIRT2: every row strip starts in column 1, i.e. each value is strictly
// right of its predecessor or in column 1.
bool strips_start_in_first_column(const Tableau& t, const std::vector<Box>& pos) {
    if (pos[1].column != 1)
        return false;
    for (int v = 2; v <= t.n(); ++v)
        if (pos[static_cast<size_t>(v)].column != 1 &&
            pos[static_cast<size_t>(v)].column <= pos[static_cast<size_t>(v) - 1].column)
            return false;
    return true;
}

// DIRT4: Q(c,r) > Q(c,r') with r' < r forces box (c+1,r') with
// Q(c,r) > Q(c+1,r').
bool dirt4_condition(const Tableau& t) {
    for (int r = 2; r <= t.row_count(); ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            for (int rp = 1; rp < r; ++rp) {
                if (!t.has_box(c, rp))
                    continue;
                if (t.value_at(c, r) > t.value_at(c, rp)) {
                    if (!t.has_box(c + 1, rp))
                        return false;
                    if (t.value_at(c, r) <= t.value_at(c + 1, rp))
                        return false;
                }
            }
    return true;
}

}  // namespace

bool is_mpct(const Tableau& t) {
    require_peak_shape(t, "is_mpct");
    return mpct_conditions(t);
}

bool is_smpct(const Tableau& t) {
    require_peak_shape(t, "is_smpct");
    return standard_content(t) && mpct_conditions(t);
}

bool is_spct(const Tableau& t) {
    require_peak_shape(t, "is_spct");
    return standard_content(t) && all_unmarked(t) && rows_strictly_increase(t) &&
           first_column_strict(t) && prefix_peak_condition(t);
}

bool is_spyct(const Tableau& t) {
    require_peak_shape(t, "is_spyct");
    return standard_content(t) && all_unmarked(t) && rows_strictly_increase(t) &&
           first_column_strict(t) && prefix_peak_condition(t) && spyct4_condition(t);
}

bool is_sit(const Tableau& t) {
    return standard_content(t) && all_unmarked(t) && rows_strictly_increase(t) &&
           first_column_strict(t);
}

bool is_syct(const Tableau& t) {
    return standard_content(t) && all_unmarked(t) && rows_strictly_increase(t) &&
           first_column_strict(t) && spyct4_condition(t);
}

bool is_dirt(const Tableau& t) {
    if (!(standard_content(t) && all_unmarked(t) && rows_strictly_increase(t) &&
          first_column_increases_downward(t)))
        return false;
    std::vector<Box> pos = standard_positions(t);
    return strips_start_in_first_column(t, pos) && dirt4_condition(t);
}

std::vector<Box> standard_positions(const Tableau& t) {
    if (!standard_content(t))
        throw std::invalid_argument("standard_positions: values are not 1..n each once");
    std::vector<Box> pos(static_cast<size_t>(t.n()) + 1);
    for (int r = 1; r <= t.row_count(); ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            pos[static_cast<size_t>(t.value_at(c, r))] = Box{c, r};
    return pos;
}

IndexSet descent_up(const Tableau& t) {
    if (!is_sit(t))
        throw std::invalid_argument("descent_up: not a standard immaculate tableau");
    std::vector<Box> pos = standard_positions(t);
    std::vector<int> des;
    for (int i = 1; i < t.n(); ++i)
        if (pos[static_cast<size_t>(i) + 1].row > pos[static_cast<size_t>(i)].row)
            des.push_back(i);
    return IndexSet(std::move(des), t.n());
}

IndexSet descent_left(const Tableau& t) {
    if (!is_syct(t))
        throw std::invalid_argument("descent_left: not a standard Young composition tableau");
    std::vector<Box> pos = standard_positions(t);
    std::vector<int> des;
    for (int i = 1; i < t.n(); ++i)
        if (pos[static_cast<size_t>(i) + 1].column <= pos[static_cast<size_t>(i)].column)
            des.push_back(i);
    return IndexSet(std::move(des), t.n());
}

IndexSet descent_marked(const Tableau& s) {
    if (!is_smpct(s))
        throw std::invalid_argument("descent_marked: not a standard MPCT");
    std::vector<Box> pos(static_cast<size_t>(s.n()) + 1);
    std::vector<bool> marked(static_cast<size_t>(s.n()) + 1, false);
    for (int r = 1; r <= s.row_count(); ++r)
        for (int c = 1; c <= s.shape().part(r); ++c) {
            const MarkedEntry& e = s.at(c, r);
            pos[static_cast<size_t>(e.value)] = Box{c, r};
            marked[static_cast<size_t>(e.value)] = e.marked;
        }
    std::vector<int> des;
    for (int i = 1; i < s.n(); ++i) {
        int ri = pos[static_cast<size_t>(i)].row;
        int rj = pos[static_cast<size_t>(i) + 1].row;
        bool descent = (!marked[static_cast<size_t>(i)] && ri < rj) ||
                       (marked[static_cast<size_t>(i) + 1] && rj <= ri);
        if (descent)
            des.push_back(i);
    }
    return IndexSet(std::move(des), s.n());
}

IndexSet peak_up(const Tableau& t) { return peak_set(descent_up(t)); }
IndexSet peak_left(const Tableau& t) { return peak_set(descent_left(t)); }

Composition weight(const Tableau& t) {
    std::vector<int> count(static_cast<size_t>(t.n()) + 1, 0);
    int maxv = 0;
    for (const auto& row : t.rows())
        for (const MarkedEntry& e : row) {
            if (e.value > t.n())
                throw std::invalid_argument("weight: entry value exceeds box count");
            ++count[static_cast<size_t>(e.value)];
            maxv = std::max(maxv, e.value);
        }
    std::vector<int> parts;
    for (int v = 1; v <= maxv; ++v) {
        if (count[static_cast<size_t>(v)] == 0)
            throw std::invalid_argument("weight: zero count precedes a nonzero count");
        parts.push_back(count[static_cast<size_t>(v)]);
    }
    return Composition(std::move(parts));
}

std::vector<int> reading_word(const Tableau& t) {
    if (!is_sit(t))
        throw std::invalid_argument("reading_word: not a standard immaculate tableau");
    std::vector<int> word;
    word.reserve(static_cast<size_t>(t.n()));
    for (int r = t.row_count(); r >= 1; --r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            word.push_back(t.value_at(c, r));
    return word;
}

std::vector<std::vector<int>> row_strips(const Tableau& q) {
    if (!is_dirt(q))
        throw std::invalid_argument("row_strips: not a DIRT");
    std::vector<Box> pos = standard_positions(q);
    std::vector<std::vector<int>> strips;
    for (int v = 1; v <= q.n(); ++v) {
        if (v == 1 || pos[static_cast<size_t>(v)].column <= pos[static_cast<size_t>(v) - 1].column)
            strips.emplace_back();
        strips.back().push_back(v);
    }
    return strips;
}

Composition row_strip_shape(const Tableau& q) {
    std::vector<int> parts;
    for (const auto& strip : row_strips(q))
        parts.push_back(static_cast<int>(strip.size()));
    return Composition(std::move(parts));
}

namespace {

// Places values 1..n in increasing order; filled boxes always form row
// prefixes, so rows increase automatically.
struct StandardBacktracker {
    const Composition& shape;
    TableauFamily family;
    int n;
    std::vector<int> filled;               // boxes used per row, index 0 = row 1
    std::vector<std::vector<int>> rows;
    std::vector<Box> pos;                  // pos[v] once placed
    std::vector<Tableau> out;

    explicit StandardBacktracker(const Composition& shape_, TableauFamily family_)
        : shape(shape_), family(family_), n(shape_.degree()),
          filled(static_cast<size_t>(shape_.length()), 0),
          pos(static_cast<size_t>(shape_.degree()) + 1) {
        rows.resize(static_cast<size_t>(shape_.length()));
        for (int r = 1; r <= shape.length(); ++r)
            rows[static_cast<size_t>(r) - 1].reserve(static_cast<size_t>(shape.part(r)));
    }

    bool bottom_up_first_column() const {
        return family != TableauFamily::DIRT;
    }
    bool peak_prefix() const {
        return family == TableauFamily::SPCT || family == TableauFamily::SPYCT;
    }

    bool can_place(int v, int r) const {
        int c = filled[static_cast<size_t>(r) - 1] + 1;
        if (c > shape.part(r))
            return false;
        if (c == 1) {
            if (bottom_up_first_column()) {
                // Peak-prefix families need every lower row to hold >= 2
                // boxes before a new top row starts; others just need the
                // lower rows started.
                for (int rp = 1; rp < r; ++rp)
                    if (filled[static_cast<size_t>(rp) - 1] < (peak_prefix() ? 2 : 1))
                        return false;
            } else {
                for (int rp = r + 1; rp <= shape.length(); ++rp)
                    if (filled[static_cast<size_t>(rp) - 1] < 1)
                        return false;
            }
        } else if (family == TableauFamily::DIRT) {
            // Strip continuation must move strictly right.
            if (c <= pos[static_cast<size_t>(v) - 1].column)
                return false;
        }
        return true;
    }

    void run(int v) {
        if (v > n) {
            out.push_back(Tableau::from_values(shape, rows));
            return;
        }
        for (int r = 1; r <= shape.length(); ++r) {
            if (!can_place(v, r))
                continue;
            int c = ++filled[static_cast<size_t>(r) - 1];
            rows[static_cast<size_t>(r) - 1].push_back(v);
            pos[static_cast<size_t>(v)] = Box{c, r};
            run(v + 1);
            rows[static_cast<size_t>(r) - 1].pop_back();
            --filled[static_cast<size_t>(r) - 1];
        }
    }
};

bool passes_validator(TableauFamily family, const Tableau& t) {
    switch (family) {
        case TableauFamily::MPCT: return is_mpct(t);
        case TableauFamily::SMPCT: return is_smpct(t);
        case TableauFamily::SPCT: return is_spct(t);
        case TableauFamily::SPYCT: return is_spyct(t);
        case TableauFamily::SIT: return is_sit(t);
        case TableauFamily::SYCT: return is_syct(t);
        case TableauFamily::DIRT: return is_dirt(t);
    }
    throw std::logic_error("bad family tag");
}

std::vector<Tableau> enumerate_standard(TableauFamily family, const Composition& alpha) {
    StandardBacktracker bt(alpha, family);
    bt.run(1);
    std::vector<Tableau> out;
    out.reserve(bt.out.size());
    for (Tableau& t : bt.out)
        if (passes_validator(family, t))
            out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), TableauCanonicalLess{});
    return out;
}

std::vector<Tableau> enumerate_smpct(const Composition& alpha) {
    // Every assignment of marks to an SPCT is an SMPCT: with distinct values,
    // MPCT1/2/3 depend only on absolute values and MPCT4 cannot trigger.
    std::vector<Tableau> out;
    const int n = alpha.degree();
    for (const Tableau& q : enumerate_standard(TableauFamily::SPCT, alpha)) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::vector<MarkedEntry>> rows = q.rows();
            for (auto& row : rows)
                for (MarkedEntry& e : row)
                    e.marked = (mask >> (e.value - 1)) & 1u;
            out.emplace_back(alpha, std::move(rows));
        }
    }
    std::sort(out.begin(), out.end(), TableauCanonicalLess{});
    return out;
}

std::vector<Tableau> enumerate_mpct(const Composition& alpha) {
    // MPCT(alpha) = { destandardize(S, beta) : S in SMPCT(alpha),
    //                 beta refining comp(Des(S)) }, each exactly once.
    std::vector<Tableau> out;
    for (const Tableau& s : enumerate_smpct(alpha)) {
        Composition base = comp_of(descent_marked(s));
        for (const Composition& beta : refinements_of(base))
            out.push_back(detail::destandardize_unchecked(s, beta));
    }
    std::sort(out.begin(), out.end(), TableauCanonicalLess{});
    return out;
}

}  // namespace

std::vector<Tableau> enumerate(TableauFamily family, const Composition& alpha) {
    switch (family) {
        case TableauFamily::MPCT:
        case TableauFamily::SMPCT:
        case TableauFamily::SPCT:
        case TableauFamily::SPYCT:
            if (!is_peak_composition(alpha))
                throw std::invalid_argument("enumerate: shape is not a peak composition");
            break;
        default:
            break;
    }
    switch (family) {
        case TableauFamily::MPCT: return enumerate_mpct(alpha);
        case TableauFamily::SMPCT: return enumerate_smpct(alpha);
        default: return enumerate_standard(family, alpha);
    }
}

}  // namespace peakqsym
