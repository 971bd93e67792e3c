#include "peakqsym/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace peakqsym {

namespace {

[[noreturn]] void bad(const std::string& message) {
    throw std::invalid_argument(message);
}

const JsonValue& member(const JsonValue& j, const char* key, const char* what) {
    if (!j.is_object())
        bad(std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string(what) + " is missing key \"" + key + "\"");
    return *it;
}

int small_int(const JsonValue& j, const char* what) {
    if (!j.is_number_integer())
        bad(std::string(what) + " must be an integer");
    const auto wide = j.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
        bad(std::string(what) + " is out of range");
    return static_cast<int>(wide);
}

}  // namespace

JsonValue composition_to_json(const Composition& alpha) {
    JsonValue j = JsonValue::array();
    for (int part : alpha.parts())
        j.push_back(part);
    return j;
}

Composition composition_from_json(const JsonValue& j) {
    if (!j.is_array())
        bad("composition must be a JSON array of integers");
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const JsonValue& part : j)
        parts.push_back(small_int(part, "composition part"));
    return Composition(parts);  // rejects non-positive parts
}

JsonValue coeff_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return JsonValue(c.convert_to<std::int64_t>());
    return JsonValue(c.str());
}

Integer coeff_from_json(const JsonValue& j) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
        if (i == text.size())
            bad("coefficient string must hold a decimal integer");
        for (; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                bad("coefficient string must hold a decimal integer");
        return Integer(text);
    }
    bad("coefficient must be a JSON integer or a decimal string");
}

JsonValue tableau_to_json(const Tableau& t) {
    JsonValue j;
    j["shape"] = composition_to_json(t.shape());
    JsonValue rows = JsonValue::array();
    for (const auto& row : t.rows()) {
        JsonValue out = JsonValue::array();
        for (const MarkedEntry& e : row) {
            if (e.marked)
                out.push_back(e.to_text());
            else
                out.push_back(e.value);
        }
        rows.push_back(std::move(out));
    }
    j["rows"] = std::move(rows);
    return j;
}

Tableau tableau_from_json(const JsonValue& j) {
    const Composition shape = composition_from_json(member(j, "shape", "tableau"));
    const JsonValue& jrows = member(j, "rows", "tableau");
    if (!jrows.is_array())
        bad("tableau rows must be a JSON array");
    std::vector<std::vector<MarkedEntry>> rows;
    rows.reserve(jrows.size());
    for (const JsonValue& jrow : jrows) {
        if (!jrow.is_array())
            bad("tableau row must be a JSON array");
        std::vector<MarkedEntry> row;
        row.reserve(jrow.size());
        for (const JsonValue& jentry : jrow) {
            if (jentry.is_number_integer()) {
                row.push_back({small_int(jentry, "tableau entry"), false});
            } else if (jentry.is_string()) {
                const std::string text = jentry.get<std::string>();
                if (text.size() < 2 || text.back() != '\'')
                    bad("marked tableau entry must look like \"5'\"");
                int value = 0;
                for (std::size_t i = 0; i + 1 < text.size(); ++i) {
                    if (text[i] < '0' || text[i] > '9')
                        bad("marked tableau entry must look like \"5'\"");
                    if (value > (std::numeric_limits<int>::max() - 9) / 10)
                        bad("tableau entry is out of range");
                    value = value * 10 + (text[i] - '0');
                }
                row.push_back({value, true});
            } else {
                bad("tableau entry must be an integer or a marked-entry string");
            }
        }
        rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));  // rejects shape/rows mismatch
}

JsonValue terms_to_json(int degree, std::string_view basis_tag, const TermMap& terms) {
    JsonValue j;
    j["degree"] = degree;
    j["basis"] = std::string(basis_tag);
    JsonValue list = JsonValue::array();
    for (const auto& [alpha, coeff] : terms) {
        JsonValue term;
        term["composition"] = composition_to_json(alpha);
        term["coeff"] = coeff_to_json(coeff);
        list.push_back(std::move(term));
    }
    j["terms"] = std::move(list);
    return j;
}

JsonValue element_to_json(const QSymElement& e) {
    return terms_to_json(e.degree(), basis_to_text(e.basis()), e.terms());
}

QSymElement element_from_json(const JsonValue& j) {
    const int degree = small_int(member(j, "degree", "element"), "element degree");
    const JsonValue& jbasis = member(j, "basis", "element");
    if (!jbasis.is_string())
        bad("element basis must be a string");
    const Basis basis = basis_from_text(jbasis.get<std::string>());
    const JsonValue& jterms = member(j, "terms", "element");
    if (!jterms.is_array())
        bad("element terms must be a JSON array");
    TermMap terms;
    for (const JsonValue& jterm : jterms) {
        Composition alpha = composition_from_json(member(jterm, "composition", "term"));
        Integer coeff = coeff_from_json(member(jterm, "coeff", "term"));
        if (!terms.emplace(std::move(alpha), std::move(coeff)).second)
            bad("element terms list a composition twice");
    }
    return QSymElement(degree, basis, std::move(terms));  // validates degrees, peak keys
}

std::string tableau_to_json_text(const Tableau& t) { return tableau_to_json(t).dump(); }

Tableau tableau_from_json_text(const std::string& text) {
    return tableau_from_json(parse_json_text(text));
}

std::string element_to_json_text(const QSymElement& e) { return element_to_json(e).dump(); }

QSymElement element_from_json_text(const std::string& text) {
    return element_from_json(parse_json_text(text));
}

JsonValue parse_json_text(const std::string& text) {
    try {
        return JsonValue::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace peakqsym
