#pragma once

#include "peakqsym/composition.hpp"
#include "peakqsym/tableau.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace peakqsym {

// A plain integer filling, rows bottom to top. Entries are distinct positive
// integers, not necessarily contiguous. May be empty.
using Filling = std::vector<std::vector<int>>;

// Rows weakly increase left to right (strictly, for distinct entries), the
// first column increases bottom to top, and whenever T(c,r) < T(c+1,r') with
// r' < r, box (c+1,r) exists with T(c+1,r) < T(c+1,r'). These are the
// conditions preserved by insert_entry.
bool satisfies_spyct124(const Filling& rows);

// One placement made during an insertion.
struct InsertStep {
    int value = 0;              // entry set down at `box`
    Box box;                    // where it landed
    std::optional<int> bumped;  // entry displaced from `box`, if any
    bool new_row = false;       // `box` started a fresh row

    bool operator==(const InsertStep& o) const {
        return value == o.value && box == o.box && bumped == o.bumped &&
               new_row == o.new_row;
    }
};

// Insert k into a filling satisfying satisfies_spyct124; returns the updated
// filling and the box where a new box was created. Appends one step per
// placement to `trace` when given.
std::pair<Filling, Box> insert_entry(const Filling& rows, int k,
                                     std::vector<InsertStep>* trace = nullptr);
std::pair<Tableau, Box> insert_entry(const Tableau& t, int k);

// The insertion tableau together with its recording tableau.
struct InsertionResult {
    Tableau p;
    Tableau q;
};

// Insert the reading word of t entry by entry, recording where each new box
// appears; pre: is_sit(t).
InsertionResult reading_insertion(const Tableau& t);

// All DIRTs of peak shape with row strip shape reverse(alpha), in the
// deterministic generation order (bottom-most row choices first).
std::vector<Tableau> generate_dirts(const Composition& alpha);

// True iff alpha is (2,...,2,a) or (2,...,2,a,1); equivalently,
// generate_dirts(alpha) yields exactly one tableau.
bool is_single_term(const Composition& alpha);

}  // namespace peakqsym
