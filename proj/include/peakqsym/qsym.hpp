#pragma once

#include "peakqsym/composition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>

namespace peakqsym {

using Integer = boost::multiprecision::cpp_int;

enum class Basis { Monomial, Fundamental, Peak };

std::string basis_to_text(Basis basis);           // "M", "F", "K"
Basis basis_from_text(std::string_view name);

using TermMap = std::map<Composition, Integer, CanonicalLess>;

// A homogeneous quasisymmetric function of fixed degree, expressed in one
// basis. Immutable; zero coefficients are dropped at construction; peak-basis
// keys must be peak compositions.
class QSymElement {
public:
    QSymElement(int degree, Basis basis, TermMap terms);

    int degree() const { return m_degree; }
    Basis basis() const { return m_basis; }
    const TermMap& terms() const { return m_terms; }
    Integer coeff(const Composition& alpha) const;
    bool is_zero() const { return m_terms.empty(); }

    // Equality of the underlying functions, decided in the monomial basis.
    bool operator==(const QSymElement& o) const;
    bool operator!=(const QSymElement& o) const { return !(*this == o); }

private:
    int m_degree;
    Basis m_basis;
    TermMap m_terms;
};

// Downward basis changes; no inverses are provided.
QSymElement fundamental_to_monomial(const QSymElement& e);
QSymElement peak_to_fundamental(const QSymElement& e);
QSymElement to_monomial(const QSymElement& e);

// Named families. The first four require a peak composition.
QSymElement qsq_via_mpct(const Composition& alpha);     // monomial basis
QSymElement qsq_via_smpct(const Composition& alpha);    // fundamental basis
QSymElement qsq_via_spct(const Composition& alpha);     // peak basis
QSymElement pyqs(const Composition& alpha);             // peak basis
QSymElement dual_immaculate(const Composition& alpha);  // fundamental basis
QSymElement young_qs(const Composition& alpha);         // fundamental basis

// Multiplicity of each peak shape among generate_dirts(alpha): the
// coefficients expressing the degree-n quasisymmetric Schur Q-function at
// alpha in the peak Young quasisymmetric Schur functions.
TermMap expand_qsq_in_pyqs(const Composition& alpha);

// "K[3,3] + 4*K[2,2]" / "K_{(3,3)}+4K_{(2,2)}"; an empty map renders as "0".
std::string render_terms_text(const TermMap& terms, std::string_view tag);
std::string render_terms_latex(const TermMap& terms, std::string_view tag);
std::string render_text(const QSymElement& e);
std::string render_latex(const QSymElement& e);

}  // namespace peakqsym
