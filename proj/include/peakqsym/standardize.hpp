#pragma once

#include "peakqsym/composition.hpp"
#include "peakqsym/tableau.hpp"

#include <vector>

namespace peakqsym {

Tableau standardize(const Tableau& t);  // pre: is_mpct

// The unique MPCT with weight beta standardizing to s; beta must refine
// comp_of(descent_marked(s)).
Tableau destandardize(const Tableau& s, const Composition& beta);

Tableau unmark(const Tableau& s);  // pre: is_smpct; result is an SPCT

// All SMPCT markings of the SPCT q with descent set d; requires
// peak_up(q) contained in d symdiff (d+1). Count is 2^{|peak_up(q)|+1}.
std::vector<Tableau> marking_fiber(const Tableau& q, const IndexSet& d);

namespace detail {
// Block assignment without precondition checks; beta must refine
// comp_of(descent_marked(s)).
Tableau destandardize_unchecked(const Tableau& s, const Composition& beta);
}  // namespace detail

}  // namespace peakqsym
