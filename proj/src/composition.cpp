#include "peakqsym/composition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace peakqsym {

Composition::Composition(std::vector<int> parts)
    : m_parts(std::move(parts)), m_degree(0) {
    if (m_parts.empty())
        throw std::invalid_argument("composition: empty part list");
    for (int p : m_parts) {
        if (p < 1)
            throw std::invalid_argument("composition: parts must be positive");
        m_degree += p;
    }
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p)
            throw std::invalid_argument("composition: bad text form");
        parts.push_back(value);
        p = next;
        if (p < end) {
            if (*p != ',')
                throw std::invalid_argument("composition: bad text form");
            ++p;
            if (p == end)
                throw std::invalid_argument("composition: trailing comma");
        }
    }
    return Composition(std::move(parts));
}

std::string Composition::to_text() const {
    std::string out;
    for (size_t i = 0; i < m_parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m_parts[i]);
    }
    return out;
}

bool canonical_less(const Composition& a, const Composition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    size_t m = std::min(x.size(), y.size());
    for (size_t i = 0; i < m; ++i)
        if (x[i] != y[i])
            return x[i] > y[i];
    return x.size() < y.size();
}

IndexSet::IndexSet(std::vector<int> elements, int degree)
    : m_elements(std::move(elements)), m_degree(degree) {
    if (m_degree < 1)
        throw std::invalid_argument("index set: degree must be positive");
    int prev = 0;
    for (int e : m_elements) {
        if (e <= prev)
            throw std::invalid_argument("index set: elements must strictly increase");
        prev = e;
    }
    if (!m_elements.empty() && m_elements.back() > m_degree - 1)
        throw std::invalid_argument("index set: element outside [1, n-1]");
}

bool IndexSet::contains(int i) const {
    return std::binary_search(m_elements.begin(), m_elements.end(), i);
}

std::string IndexSet::to_text() const {
    std::string out = "{";
    for (size_t i = 0; i < m_elements.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m_elements[i]);
    }
    out += '}';
    return out;
}

IndexSet set_of(const Composition& alpha) {
    std::vector<int> sums;
    int acc = 0;
    const auto& parts = alpha.parts();
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        acc += parts[i];
        sums.push_back(acc);
    }
    return IndexSet(std::move(sums), alpha.degree());
}

Composition comp_of(const IndexSet& x) {
    std::vector<int> parts;
    int prev = 0;
    for (int e : x.elements()) {
        parts.push_back(e - prev);
        prev = e;
    }
    parts.push_back(x.degree() - prev);
    return Composition(std::move(parts));
}

IndexSet peak_set(const IndexSet& x) {
    std::vector<int> peaks;
    for (int e : x.elements())
        if (e >= 2 && !x.contains(e - 1))
            peaks.push_back(e);
    return IndexSet(std::move(peaks), x.degree());
}

IndexSet peak_of_composition(const Composition& alpha) {
    return peak_set(set_of(alpha));
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.degree() != alpha.degree())
        return false;
    const IndexSet sa = set_of(alpha);
    const IndexSet sb = set_of(beta);
    return std::includes(sb.elements().begin(), sb.elements().end(),
                         sa.elements().begin(), sa.elements().end());
}

std::vector<Composition> refinements_of(const Composition& alpha) {
    const int n = alpha.degree();
    const IndexSet base = set_of(alpha);
    std::vector<int> free;
    for (int i = 1; i < n; ++i)
        if (!base.contains(i))
            free.push_back(i);
    std::vector<Composition> out;
    out.reserve(size_t{1} << free.size());
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        std::vector<int> elems = base.elements();
        for (size_t b = 0; b < free.size(); ++b)
            if (mask & (1u << b))
                elems.push_back(free[b]);
        std::sort(elems.begin(), elems.end());
        out.push_back(comp_of(IndexSet(std::move(elems), n)));
    }
    return out;
}

bool is_peak_composition(const Composition& alpha) {
    const auto& parts = alpha.parts();
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < 2)
            return false;
    return true;
}

Composition reverse(const Composition& alpha) {
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

namespace {

// Generates compositions of n in descending lexicographic order: largest first
// part first, recursing on the remainder.
void emit_compositions(int n, bool peak_only, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    int lo = peak_only ? std::min(n, 2) : 1;
    for (int first = n; first >= lo; --first) {
        prefix.push_back(first);
        emit_compositions(n - first, peak_only, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
    if (n < 1)
        throw std::invalid_argument("compositions_of: n must be positive");
    std::vector<Composition> out;
    std::vector<int> prefix;
    emit_compositions(n, false, prefix, out);
    return out;
}

std::vector<Composition> peak_compositions_of(int n) {
    if (n < 1)
        throw std::invalid_argument("peak_compositions_of: n must be positive");
    std::vector<Composition> out;
    std::vector<int> prefix;
    emit_compositions(n, true, prefix, out);
    return out;
}

}  // namespace peakqsym
