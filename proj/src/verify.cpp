#include "peakqsym/verify.hpp"

#include "peakqsym/insertion.hpp"
#include "peakqsym/qsym.hpp"
#include "peakqsym/standardize.hpp"
#include "peakqsym/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace peakqsym {

namespace {

// Collects the first failure for one (family, alpha) check.
struct Recorder {
    bool passed = true;
    std::string detail;

    void fail(const std::string& message) {
        if (passed) {
            passed = false;
            detail = message;
        }
    }
    bool check(bool condition, const std::string& message) {
        if (!condition)
            fail(message);
        return condition;
    }
};

void push_check(std::vector<VerifyCheck>& out, const std::string& theorem,
                const Composition& alpha, const Recorder& r) {
    out.push_back({theorem, alpha.to_text(), r.passed, r.passed ? "" : r.detail});
}

bool in_spyct(const Tableau& t) {
    return is_peak_composition(t.shape()) && is_spyct(t);
}

void add_into(TermMap& target, const TermMap& source, const Integer& mult) {
    for (const auto& [alpha, c] : source) {
        Integer& slot = target[alpha];
        slot += c * mult;
        if (slot == 0)
            target.erase(alpha);
    }
}

// --- triple-agreement ------------------------------------------------------

void check_triple_agreement(const Composition& alpha, Recorder& r) {
    const QSymElement via_mpct = qsq_via_mpct(alpha);
    const QSymElement via_smpct = to_monomial(qsq_via_smpct(alpha));
    const QSymElement via_spct = to_monomial(qsq_via_spct(alpha));
    r.check(via_mpct == via_smpct,
            "fundamental-basis construction disagrees with the monomial one");
    r.check(via_mpct == via_spct,
            "peak-basis construction disagrees with the monomial one");
}

// --- unmark ----------------------------------------------------------------

bool subset_bit(unsigned mask, int i) {
    return i >= 1 && ((mask >> (i - 1)) & 1u) != 0;
}

void check_unmark(const Composition& alpha, Recorder& r) {
    const int n = alpha.degree();
    const std::vector<Tableau> spcts = enumerate(TableauFamily::SPCT, alpha);
    const std::vector<Tableau> smpcts = enumerate(TableauFamily::SMPCT, alpha);

    std::map<std::string, std::vector<const Tableau*>> groups;
    for (const Tableau& s : smpcts)
        groups[unmark(s).to_text()].push_back(&s);
    if (!r.check(groups.size() == spcts.size(),
                 "unmarking does not reach every standard peak composition tableau"))
        return;

    for (const Tableau& q : spcts) {
        const auto it = groups.find(q.to_text());
        if (!r.check(it != groups.end(), "no marking unmarks to " + q.to_text()))
            return;
        const std::vector<const Tableau*>& group = it->second;
        const IndexSet peak = peak_up(q);
        const std::size_t expected_fiber = std::size_t(1) << (peak.size() + 1);

        std::set<std::string> seen;
        const unsigned mask_end = 1u << (n - 1);
        for (unsigned mask = 0; mask < mask_end; ++mask) {
            std::vector<int> elements;
            for (int i = 1; i < n; ++i)
                if (subset_bit(mask, i))
                    elements.push_back(i);
            const IndexSet d(elements, n);

            bool admissible = true;
            for (int i : peak.elements())
                if (subset_bit(mask, i) == subset_bit(mask, i - 1)) {
                    admissible = false;
                    break;
                }

            if (!admissible) {
                bool threw = false;
                try {
                    marking_fiber(q, d);
                } catch (const std::invalid_argument&) {
                    threw = true;
                }
                r.check(threw, "marking fiber accepted inadmissible descent set " +
                                   d.to_text() + " for " + q.to_text());
                continue;
            }

            const std::vector<Tableau> fiber = marking_fiber(q, d);
            r.check(fiber.size() == expected_fiber,
                    "marking fiber of " + q.to_text() + " at " + d.to_text() +
                        " has size " + std::to_string(fiber.size()) + ", expected " +
                        std::to_string(expected_fiber));
            for (const Tableau& s : fiber) {
                r.check(is_smpct(s), "fiber member is not standard: " + s.to_text());
                r.check(unmark(s) == q, "fiber member unmarks elsewhere: " + s.to_text());
                r.check(descent_marked(s) == d,
                        "fiber member has the wrong descent set: " + s.to_text());
                r.check(seen.insert(s.to_text()).second,
                        "marking fibers of " + q.to_text() + " overlap");
            }
        }

        r.check(seen.size() == group.size(),
                "fibers of " + q.to_text() + " cover " + std::to_string(seen.size()) +
                    " of " + std::to_string(group.size()) + " markings");
        for (const Tableau* s : group)
            r.check(seen.count(s->to_text()) == 1,
                    "marking missed by every admissible fiber: " + s->to_text());

        // Sum of fundamentals over the whole unmarking class equals the
        // fundamental expansion of the peak function at Peak(q).
        TermMap fsum;
        for (const Tableau* s : group)
            fsum[comp_of(descent_marked(*s))] += 1;
        TermMap kterm;
        kterm[comp_of(peak)] = 1;
        const QSymElement expanded =
            peak_to_fundamental(QSymElement(n, Basis::Peak, std::move(kterm)));
        r.check(fsum == expanded.terms(),
                "fundamental sum over markings of " + q.to_text() +
                    " differs from the peak-function expansion");
        if (!r.passed)
            return;
    }
}

// --- bijection -------------------------------------------------------------

void check_bijection(const Composition& alpha, Recorder& r,
                     std::map<std::string, std::size_t>& spyct_counts) {
    const std::vector<Tableau> sits = enumerate(TableauFamily::SIT, alpha);
    const Composition strip_shape = reverse(alpha);
    std::set<std::pair<std::string, std::string>> images;
    std::size_t spct_count = 0;

    for (const Tableau& t : sits) {
        const InsertionResult res = reading_insertion(t);
        const Tableau& p = res.p;
        const Tableau& q = res.q;
        const std::string tag = " for reading insertion of " + t.to_text();

        images.emplace(p.to_text(), q.to_text());
        if (!r.check(is_syct(p), "insertion tableau fails the Young conditions" + tag))
            return;
        if (!r.check(is_dirt(q), "recording tableau is not a DIRT" + tag))
            return;
        r.check(p.shape() == q.shape(), "insertion and recording shapes differ" + tag);
        r.check(row_strip_shape(q) == strip_shape,
                "recording tableau has the wrong row strip shape" + tag);
        r.check(descent_up(t) == descent_left(p), "descent set not preserved" + tag);

        if (!r.check(p.row_count() == t.row_count(),
                     "first column changed height" + tag))
            return;
        for (int row = 1; row <= t.row_count(); ++row)
            r.check(p.value_at(1, row) == t.value_at(1, row),
                    "first column not preserved" + tag);

        if (is_spct(t)) {
            ++spct_count;
            r.check(in_spyct(p),
                    "insertion tableau fails the peak Young conditions" + tag);
            r.check(peak_up(t) == peak_left(p), "peak set not preserved" + tag);
            r.check(is_peak_composition(q.shape()),
                    "recording tableau has a non-peak shape" + tag);
            for (int row = 1; row <= t.row_count(); ++row) {
                if (!r.check(p.has_box(2, row) == t.has_box(2, row),
                             "second column changed" + tag))
                    break;
                if (t.has_box(2, row))
                    r.check(p.value_at(2, row) == t.value_at(2, row),
                            "second column not preserved" + tag);
            }
        } else {
            r.check(!in_spyct(p),
                    "insertion tableau of a non-SPCT landed in SPYCT" + tag);
        }
        if (!r.passed)
            return;
    }

    r.check(images.size() == sits.size(), "reading insertion is not injective");

    // |SPCT(alpha)| equals the number of (SPYCT, DIRT) pairs delivered by
    // generate_dirts, bucketed by shape.
    std::map<std::string, std::size_t> dirt_shapes;
    for (const Tableau& d : generate_dirts(alpha))
        ++dirt_shapes[d.shape().to_text()];
    std::size_t total = 0;
    for (const auto& [shape_text, count] : dirt_shapes) {
        auto it = spyct_counts.find(shape_text);
        if (it == spyct_counts.end()) {
            const std::size_t size =
                enumerate(TableauFamily::SPYCT, Composition::parse(shape_text)).size();
            it = spyct_counts.emplace(shape_text, size).first;
        }
        total += count * it->second;
    }
    r.check(total == spct_count,
            "pair count " + std::to_string(total) + " differs from the " +
                std::to_string(spct_count) + " standard peak composition tableaux");
}

// --- expansion -------------------------------------------------------------

void check_expansion(const Composition& alpha, Recorder& r,
                     std::map<std::string, TermMap>& pyqs_monomials) {
    const TermMap coeffs = expand_qsq_in_pyqs(alpha);
    TermMap acc;
    for (const auto& [beta, c] : coeffs) {
        r.check(c > 0, "coefficient of " + beta.to_text() + " is not positive");
        r.check(is_peak_composition(beta),
                "expansion indexed by the non-peak composition " + beta.to_text());
        auto it = pyqs_monomials.find(beta.to_text());
        if (it == pyqs_monomials.end())
            it = pyqs_monomials.emplace(beta.to_text(), to_monomial(pyqs(beta)).terms())
                     .first;
        add_into(acc, it->second, c);
    }
    const QSymElement direct = to_monomial(qsq_via_spct(alpha));
    r.check(acc == direct.terms(),
            "peak Young expansion does not reproduce the monomial expansion");
}

// --- dirts -----------------------------------------------------------------

// Canonical sorted listing of every DIRT of degree n, found by filling shapes
// exhaustively, bucketed by row strip shape.
std::map<std::string, std::vector<std::string>> brute_dirts_by_strip_shape(int n) {
    std::map<std::string, std::vector<std::string>> buckets;
    for (const Composition& beta : peak_compositions_of(n))
        for (const Tableau& d : enumerate(TableauFamily::DIRT, beta))
            buckets[row_strip_shape(d).to_text()].push_back(d.to_text());
    for (auto& [shape, list] : buckets)
        std::sort(list.begin(), list.end());
    return buckets;
}

void check_dirts(const Composition& alpha, Recorder& r,
                 const std::map<std::string, std::vector<std::string>>& buckets) {
    std::vector<std::string> mine;
    for (const Tableau& d : generate_dirts(alpha))
        mine.push_back(d.to_text());
    std::sort(mine.begin(), mine.end());
    r.check(std::adjacent_find(mine.begin(), mine.end()) == mine.end(),
            "generate_dirts produced a duplicate");

    static const std::vector<std::string> empty;
    const auto it = buckets.find(reverse(alpha).to_text());
    const std::vector<std::string>& expected = it == buckets.end() ? empty : it->second;
    r.check(mine == expected,
            "generate_dirts found " + std::to_string(mine.size()) +
                " fillings, brute force found " + std::to_string(expected.size()) +
                " (or the listings differ)");
}

// --- characterisation ------------------------------------------------------

void check_characterisation(const Composition& alpha, Recorder& r) {
    const bool predicted = is_single_term(alpha);
    const std::size_t count = generate_dirts(alpha).size();
    r.check(predicted == (count == 1),
            "is_single_term says " + std::string(predicted ? "yes" : "no") + " but " +
                std::to_string(count) + " DIRTs exist");
}

// --- driver ----------------------------------------------------------------

void run_family(const std::string& name, int max_n, std::vector<VerifyCheck>& out) {
    std::map<std::string, std::size_t> spyct_counts;
    std::map<std::string, TermMap> pyqs_monomials;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::string, std::vector<std::string>> dirt_buckets;
        if (name == "dirts")
            dirt_buckets = brute_dirts_by_strip_shape(n);
        for (const Composition& alpha : peak_compositions_of(n)) {
            Recorder r;
            if (name == "triple-agreement")
                check_triple_agreement(alpha, r);
            else if (name == "unmark")
                check_unmark(alpha, r);
            else if (name == "bijection")
                check_bijection(alpha, r, spyct_counts);
            else if (name == "expansion")
                check_expansion(alpha, r, pyqs_monomials);
            else if (name == "dirts")
                check_dirts(alpha, r, dirt_buckets);
            else
                check_characterisation(alpha, r);
            push_check(out, name, alpha, r);
        }
    }
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "triple-agreement", "unmark", "bijection",
        "expansion",        "dirts",  "characterisation",
    };
    return names;
}

bool VerifyReport::all_passed() const {
    for (const VerifyCheck& check : checks)
        if (!check.passed)
            return false;
    return true;
}

VerifyReport run_verification(int max_n, const std::string& which) {
    if (max_n < 1)
        throw std::invalid_argument("verification degree bound must be at least 1");
    const std::vector<std::string>& names = verify_check_names();
    std::vector<std::string> selected;
    if (which == "all") {
        selected = names;
    } else if (std::find(names.begin(), names.end(), which) != names.end()) {
        selected = {which};
    } else {
        throw std::invalid_argument("unknown check family: " + which);
    }

    VerifyReport report;
    report.max_degree = max_n;
    const auto t0 = std::chrono::steady_clock::now();
    for (const std::string& name : selected) {
        const auto f0 = std::chrono::steady_clock::now();
        run_family(name, max_n, report.checks);
        const auto f1 = std::chrono::steady_clock::now();
        report.theorem_seconds.emplace_back(
            name, std::chrono::duration<double>(f1 - f0).count());
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

}  // namespace peakqsym
