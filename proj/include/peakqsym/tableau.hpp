#pragma once

#include "peakqsym/composition.hpp"

#include <string>
#include <vector>

namespace peakqsym {

// One symbol of the marked alphabet 1' < 1 < 2' < 2 < ...
struct MarkedEntry {
    int value = 0;
    bool marked = false;

    bool operator==(const MarkedEntry& o) const {
        return value == o.value && marked == o.marked;
    }
    bool operator!=(const MarkedEntry& o) const { return !(*this == o); }
    bool operator<(const MarkedEntry& o) const {
        if (value != o.value)
            return value < o.value;
        return marked && !o.marked;  // i' < i
    }
    bool operator<=(const MarkedEntry& o) const { return !(o < *this); }

    std::string to_text() const;  // "5" or "5'"
};

// 1-based box coordinates; row 1 is the bottom row.
struct Box {
    int column = 0;
    int row = 0;

    bool operator==(const Box& o) const { return column == o.column && row == o.row; }
    bool operator!=(const Box& o) const { return !(*this == o); }
};

enum class TableauFamily { MPCT, SMPCT, SPCT, SPYCT, SIT, SYCT, DIRT };

TableauFamily family_from_text(std::string_view name);  // "mpct", "spct", ...
std::string family_to_text(TableauFamily family);

// A filling of the diagram of a composition shape; row r (1-based, bottom row
// first) holds exactly shape_r entries.
class Tableau {
public:
    Tableau(Composition shape, std::vector<std::vector<MarkedEntry>> rows);
    static Tableau from_values(Composition shape, const std::vector<std::vector<int>>& rows);

    const Composition& shape() const { return m_shape; }
    int n() const { return m_shape.degree(); }
    int row_count() const { return m_shape.length(); }
    const std::vector<std::vector<MarkedEntry>>& rows() const { return m_rows; }

    bool has_box(int c, int r) const {
        return r >= 1 && r <= row_count() && c >= 1 && c <= m_shape.part(r);
    }
    const MarkedEntry& at(int c, int r) const {
        return m_rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
    }
    int value_at(int c, int r) const { return at(c, r).value; }
    bool marked_at(int c, int r) const { return at(c, r).marked; }

    std::string to_text() const;  // rows bottom to top: "1',2,3 / 4,5"

    bool operator==(const Tableau& o) const {
        return m_shape == o.m_shape && m_rows == o.m_rows;
    }
    bool operator!=(const Tableau& o) const { return !(*this == o); }

private:
    Composition m_shape;
    std::vector<std::vector<MarkedEntry>> m_rows;
};

// Canonical order: lexicographic on the bottom-to-top, left-to-right entry scan.
bool canonical_less(const Tableau& a, const Tableau& b);

struct TableauCanonicalLess {
    bool operator()(const Tableau& a, const Tableau& b) const {
        return canonical_less(a, b);
    }
};

// Validators return false on a failed condition; they throw only on a non-peak
// shape for the four peak families (MPCT/SMPCT/SPCT/SPYCT).
bool is_mpct(const Tableau& t);
bool is_smpct(const Tableau& t);
bool is_spct(const Tableau& t);
bool is_spyct(const Tableau& t);
bool is_sit(const Tableau& t);
bool is_syct(const Tableau& t);
bool is_dirt(const Tableau& t);

// Every tableau of the family with shape alpha, each once, in canonical order.
std::vector<Tableau> enumerate(TableauFamily family, const Composition& alpha);

// Box of each value 1..n (index 0 unused); requires each value exactly once.
std::vector<Box> standard_positions(const Tableau& t);

IndexSet descent_up(const Tableau& t);      // pre: is_sit
IndexSet descent_left(const Tableau& t);    // pre: is_syct
IndexSet descent_marked(const Tableau& s);  // pre: is_smpct
IndexSet peak_up(const Tableau& t);
IndexSet peak_left(const Tableau& t);

Composition weight(const Tableau& t);
std::vector<int> reading_word(const Tableau& t);  // pre: is_sit; top row first

std::vector<std::vector<int>> row_strips(const Tableau& q);  // pre: is_dirt
Composition row_strip_shape(const Tableau& q);

}  // namespace peakqsym
