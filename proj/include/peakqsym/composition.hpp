#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace peakqsym {

// A composition of n: a nonempty sequence of positive integer parts summing to n.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    static Composition parse(std::string_view text);  // "3,2,5,1"

    const std::vector<int>& parts() const { return m_parts; }
    int degree() const { return m_degree; }  // n
    int length() const { return static_cast<int>(m_parts.size()); }
    int part(int i) const { return m_parts[static_cast<size_t>(i) - 1]; }  // 1-based

    std::string to_text() const;

    bool operator==(const Composition& o) const { return m_parts == o.m_parts; }
    bool operator!=(const Composition& o) const { return !(*this == o); }

private:
    std::vector<int> m_parts;
    int m_degree;
};

// Canonical order: descending lexicographic on parts; a proper prefix sorts first
// (the prefix case cannot arise between compositions of equal degree).
bool canonical_less(const Composition& a, const Composition& b);

struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return canonical_less(a, b);
    }
};

// A subset of [1, n-1], strictly increasing, carrying its ambient degree n.
class IndexSet {
public:
    IndexSet(std::vector<int> elements, int degree);

    const std::vector<int>& elements() const { return m_elements; }
    int degree() const { return m_degree; }
    int size() const { return static_cast<int>(m_elements.size()); }
    bool contains(int i) const;

    std::string to_text() const;  // "{3,5,10}"

    bool operator==(const IndexSet& o) const {
        return m_degree == o.m_degree && m_elements == o.m_elements;
    }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

private:
    std::vector<int> m_elements;
    int m_degree;
};

IndexSet set_of(const Composition& alpha);
Composition comp_of(const IndexSet& x);
IndexSet peak_set(const IndexSet& x);
IndexSet peak_of_composition(const Composition& alpha);
bool refines(const Composition& beta, const Composition& alpha);
std::vector<Composition> refinements_of(const Composition& alpha);
bool is_peak_composition(const Composition& alpha);
Composition reverse(const Composition& alpha);
std::vector<Composition> compositions_of(int n);
std::vector<Composition> peak_compositions_of(int n);

}  // namespace peakqsym
