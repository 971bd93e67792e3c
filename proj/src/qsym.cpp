#include "peakqsym/qsym.hpp"

#include "peakqsym/insertion.hpp"
#include "peakqsym/tableau.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace peakqsym {

namespace {

TermMap drop_zeros(TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    return terms;
}

void require_peak(const Composition& alpha, const char* what) {
    if (!is_peak_composition(alpha))
        throw std::invalid_argument(std::string(what) + " requires a peak composition");
}

std::uint64_t mask_of(const IndexSet& x) {
    std::uint64_t mask = 0;
    for (int i : x.elements())
        mask |= std::uint64_t{1} << i;
    return mask;
}

}  // namespace

std::string basis_to_text(Basis basis) {
    switch (basis) {
        case Basis::Monomial: return "M";
        case Basis::Fundamental: return "F";
        case Basis::Peak: return "K";
    }
    throw std::invalid_argument("unknown basis");
}

Basis basis_from_text(std::string_view name) {
    if (name == "M") return Basis::Monomial;
    if (name == "F") return Basis::Fundamental;
    if (name == "K") return Basis::Peak;
    throw std::invalid_argument("unknown basis tag: " + std::string(name));
}

QSymElement::QSymElement(int degree, Basis basis, TermMap terms)
    : m_degree(degree), m_basis(basis), m_terms(drop_zeros(std::move(terms))) {
    if (degree <= 0)
        throw std::invalid_argument("element degree must be positive");
    for (const auto& [alpha, coeff] : m_terms) {
        if (alpha.degree() != m_degree)
            throw std::invalid_argument("term degree mismatch: " + alpha.to_text());
        if (m_basis == Basis::Peak && !is_peak_composition(alpha))
            throw std::invalid_argument("peak-basis key is not a peak composition: " +
                                        alpha.to_text());
    }
}

Integer QSymElement::coeff(const Composition& alpha) const {
    auto it = m_terms.find(alpha);
    return it == m_terms.end() ? Integer(0) : it->second;
}

bool QSymElement::operator==(const QSymElement& o) const {
    if (is_zero() && o.is_zero())
        return true;
    if (m_degree != o.m_degree)
        return false;
    return to_monomial(*this).terms() == to_monomial(o).terms();
}

QSymElement fundamental_to_monomial(const QSymElement& e) {
    if (e.basis() != Basis::Fundamental)
        throw std::invalid_argument("fundamental_to_monomial requires the fundamental basis");
    TermMap out;
    for (const auto& [alpha, coeff] : e.terms())
        for (const auto& beta : refinements_of(alpha))
            out[beta] += coeff;
    return QSymElement(e.degree(), Basis::Monomial, std::move(out));
}

QSymElement peak_to_fundamental(const QSymElement& e) {
    if (e.basis() != Basis::Peak)
        throw std::invalid_argument("peak_to_fundamental requires the peak basis");
    const int n = e.degree();
    if (n >= 63)
        throw std::invalid_argument("degree too large for the peak expansion");
    TermMap out;
    const std::vector<Composition> all = compositions_of(n);
    for (const auto& [alpha, coeff] : e.terms()) {
        const IndexSet peaks = peak_of_composition(alpha);
        const Integer factor = coeff * (Integer(1) << (peaks.size() + 1));
        const std::uint64_t pmask = mask_of(peaks);
        for (const auto& beta : all) {
            const std::uint64_t sm = mask_of(set_of(beta));
            const std::uint64_t sym = sm ^ (sm << 1);
            if ((pmask & ~sym) == 0)
                out[beta] += factor;
        }
    }
    return QSymElement(n, Basis::Fundamental, std::move(out));
}

QSymElement to_monomial(const QSymElement& e) {
    switch (e.basis()) {
        case Basis::Monomial: return e;
        case Basis::Fundamental: return fundamental_to_monomial(e);
        case Basis::Peak: return fundamental_to_monomial(peak_to_fundamental(e));
    }
    throw std::invalid_argument("unknown basis");
}

QSymElement qsq_via_mpct(const Composition& alpha) {
    require_peak(alpha, "qsq_via_mpct");
    TermMap out;
    for (const auto& t : enumerate(TableauFamily::MPCT, alpha))
        out[weight(t)] += 1;
    return QSymElement(alpha.degree(), Basis::Monomial, std::move(out));
}

QSymElement qsq_via_smpct(const Composition& alpha) {
    require_peak(alpha, "qsq_via_smpct");
    TermMap out;
    for (const auto& s : enumerate(TableauFamily::SMPCT, alpha))
        out[comp_of(descent_marked(s))] += 1;
    return QSymElement(alpha.degree(), Basis::Fundamental, std::move(out));
}

QSymElement qsq_via_spct(const Composition& alpha) {
    require_peak(alpha, "qsq_via_spct");
    TermMap out;
    for (const auto& t : enumerate(TableauFamily::SPCT, alpha))
        out[comp_of(peak_up(t))] += 1;
    return QSymElement(alpha.degree(), Basis::Peak, std::move(out));
}

QSymElement pyqs(const Composition& alpha) {
    require_peak(alpha, "pyqs");
    TermMap out;
    for (const auto& t : enumerate(TableauFamily::SPYCT, alpha))
        out[comp_of(peak_left(t))] += 1;
    return QSymElement(alpha.degree(), Basis::Peak, std::move(out));
}

QSymElement dual_immaculate(const Composition& alpha) {
    TermMap out;
    for (const auto& t : enumerate(TableauFamily::SIT, alpha))
        out[comp_of(descent_up(t))] += 1;
    return QSymElement(alpha.degree(), Basis::Fundamental, std::move(out));
}

QSymElement young_qs(const Composition& alpha) {
    TermMap out;
    for (const auto& t : enumerate(TableauFamily::SYCT, alpha))
        out[comp_of(descent_left(t))] += 1;
    return QSymElement(alpha.degree(), Basis::Fundamental, std::move(out));
}

TermMap expand_qsq_in_pyqs(const Composition& alpha) {
    require_peak(alpha, "expand_qsq_in_pyqs");
    TermMap out;
    for (const auto& q : generate_dirts(alpha))
        out[q.shape()] += 1;
    return out;
}

std::string render_terms_text(const TermMap& terms, std::string_view tag) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coeff] : terms) {
        const bool negative = coeff < 0;
        const Integer mag = negative ? Integer(-coeff) : coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += mag.str() + "*";
        out += std::string(tag) + "[" + alpha.to_text() + "]";
        first = false;
    }
    return out;
}

std::string render_terms_latex(const TermMap& terms, std::string_view tag) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coeff] : terms) {
        const bool negative = coeff < 0;
        const Integer mag = negative ? Integer(-coeff) : coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (mag != 1)
            out += mag.str();
        out += std::string(tag) + "_{(" + alpha.to_text() + ")}";
        first = false;
    }
    return out;
}

std::string render_text(const QSymElement& e) {
    return render_terms_text(e.terms(), basis_to_text(e.basis()));
}

std::string render_latex(const QSymElement& e) {
    return render_terms_latex(e.terms(), basis_to_text(e.basis()));
}

}  // namespace peakqsym
