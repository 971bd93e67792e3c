#include "peakqsym/cli.hpp"

#include "peakqsym/composition.hpp"
#include "peakqsym/insertion.hpp"
#include "peakqsym/json_io.hpp"
#include "peakqsym/qsym.hpp"
#include "peakqsym/standardize.hpp"
#include "peakqsym/tableau.hpp"
#include "peakqsym/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace peakqsym {

namespace {

[[noreturn]] void bad(const std::string& message) {
    throw std::invalid_argument(message);
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> word;
    std::size_t i = 0;
    if (text.empty())
        bad("word must be a comma-separated list of positive integers");
    while (i < text.size()) {
        std::size_t start = i;
        long long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000)
                bad("word letter is out of range");
            ++i;
        }
        if (i == start || value == 0)
            bad("word must be a comma-separated list of positive integers");
        word.push_back(static_cast<int>(value));
        if (i < text.size()) {
            if (text[i] != ',' || i + 1 == text.size())
                bad("word must be a comma-separated list of positive integers");
            ++i;
        }
    }
    return word;
}

JsonValue index_set_to_json(const IndexSet& x) {
    JsonValue j = JsonValue::array();
    for (int i : x.elements())
        j.push_back(i);
    return j;
}

// --- expand ------------------------------------------------------------------

struct KindInfo {
    const char* text_tag;
    const char* latex_tag;
};

const std::map<std::string, KindInfo>& kind_infos() {
    static const std::map<std::string, KindInfo> infos = {
        {"qsq", {"Q~", "\\tilde{Q}"}},
        {"pyqs", {"S~", "\\tilde{S}"}},
        {"dual_immaculate", {"DI", "\\mathfrak{S}"}},
        {"young_qs", {"YS", "\\mathcal{S}"}},
    };
    return infos;
}

int run_expand(const std::string& kind, const std::string& alpha_text,
               std::string into, const std::string& format, std::ostream& out) {
    const Composition alpha = Composition::parse(alpha_text);
    if (into.empty())
        into = (kind == "qsq" || kind == "pyqs") ? "peak" : "fundamental";
    if (into == "pyqs" && kind != "qsq")
        bad("target pyqs is only available for kind qsq");
    if (into == "peak" && kind != "qsq" && kind != "pyqs")
        bad("target peak is only available for kinds qsq and pyqs");

    const KindInfo& info = kind_infos().at(kind);
    const std::string lhs_text = std::string(info.text_tag) + "[" + alpha.to_text() + "]";
    const std::string lhs_latex =
        std::string(info.latex_tag) + "_{(" + alpha.to_text() + ")}";

    if (into == "pyqs") {
        const TermMap terms = expand_qsq_in_pyqs(alpha);
        if (format == "text")
            out << lhs_text << " = " << render_terms_text(terms, "S~") << "\n";
        else if (format == "latex")
            out << lhs_latex << " = " << render_terms_latex(terms, "\\tilde{S}") << "\n";
        else
            out << terms_to_json(alpha.degree(), "PYQS", terms).dump() << "\n";
        return 0;
    }

    QSymElement e = kind == "qsq"              ? qsq_via_spct(alpha)
                    : kind == "pyqs"           ? pyqs(alpha)
                    : kind == "dual_immaculate" ? dual_immaculate(alpha)
                                                : young_qs(alpha);
    if (into == "fundamental" && e.basis() == Basis::Peak)
        e = peak_to_fundamental(e);
    else if (into == "monomial")
        e = to_monomial(e);

    if (format == "text")
        out << lhs_text << " = " << render_text(e) << "\n";
    else if (format == "latex")
        out << lhs_latex << " = " << render_latex(e) << "\n";
    else
        out << element_to_json_text(e) << "\n";
    return 0;
}

// --- tableaux ----------------------------------------------------------------

std::string latex_tableau(const Tableau& t) {
    std::string body;
    for (int r = t.row_count(); r >= 1; --r) {
        const auto& row = t.rows()[static_cast<std::size_t>(r) - 1];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                body += " & ";
            body += row[c].to_text();
        }
        if (r > 1)
            body += " \\\\ ";
    }
    return "\\begin{matrix} " + body + " \\end{matrix}";
}

int run_tableaux(const std::string& family_text, const std::string& alpha_text,
                 const std::string& format, std::ostream& out) {
    const Composition alpha = Composition::parse(alpha_text);
    const TableauFamily family = family_from_text(family_text);
    const std::vector<Tableau> items = family == TableauFamily::DIRT
                                           ? generate_dirts(alpha)
                                           : enumerate(family, alpha);

    if (format == "json") {
        JsonValue list = JsonValue::array();
        for (const Tableau& t : items) {
            JsonValue j;
            j["tableau"] = tableau_to_json(t);
            switch (family) {
                case TableauFamily::MPCT:
                    j["weight"] = composition_to_json(weight(t));
                    break;
                case TableauFamily::SMPCT:
                    j["descents"] = index_set_to_json(descent_marked(t));
                    j["peaks"] = index_set_to_json(peak_set(descent_marked(t)));
                    break;
                case TableauFamily::SPCT:
                case TableauFamily::SIT:
                    j["descents"] = index_set_to_json(descent_up(t));
                    j["peaks"] = index_set_to_json(peak_up(t));
                    break;
                case TableauFamily::SPYCT:
                case TableauFamily::SYCT:
                    j["descents"] = index_set_to_json(descent_left(t));
                    j["peaks"] = index_set_to_json(peak_left(t));
                    break;
                case TableauFamily::DIRT:
                    j["strips"] = composition_to_json(row_strip_shape(t));
                    break;
            }
            list.push_back(std::move(j));
        }
        out << list.dump() << "\n";
        return 0;
    }

    int index = 0;
    for (const Tableau& t : items) {
        ++index;
        out << index << ": ";
        if (format == "latex")
            out << latex_tableau(t);
        else
            out << t.to_text();
        switch (family) {
            case TableauFamily::MPCT:
                out << "  wt " << weight(t).to_text();
                break;
            case TableauFamily::SMPCT:
                out << "  des " << descent_marked(t).to_text() << " peak "
                    << peak_set(descent_marked(t)).to_text();
                break;
            case TableauFamily::SPCT:
            case TableauFamily::SIT:
                out << "  des " << descent_up(t).to_text() << " peak "
                    << peak_up(t).to_text();
                break;
            case TableauFamily::SPYCT:
            case TableauFamily::SYCT:
                out << "  des " << descent_left(t).to_text() << " peak "
                    << peak_left(t).to_text();
                break;
            case TableauFamily::DIRT:
                out << "  shape " << t.shape().to_text() << " strips "
                    << row_strip_shape(t).to_text();
                break;
        }
        out << "\n";
    }
    return 0;
}

// --- verify ------------------------------------------------------------------

int verify_ceiling(std::ostream& err) {
    const char* env = std::getenv("PEAKQSYM_MAX_N");
    if (env == nullptr)
        return 9;
    const std::string text(env);
    int value = 0;
    std::size_t i = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        if (value > 1000)
            break;
        value = value * 10 + (text[i] - '0');
    }
    if (text.empty() || i != text.size() || value < 1) {
        err << "error: PEAKQSYM_MAX_N must be a positive integer\n";
        return -1;
    }
    return value;
}

int run_verify(int max_n, const std::string& which, const std::string& format,
               std::ostream& out, std::ostream& err) {
    const int ceiling = verify_ceiling(err);
    if (ceiling < 0)
        return 2;
    if (max_n < 1 || max_n > ceiling) {
        err << "error: --max-n must be between 1 and " << ceiling << "\n";
        return 2;
    }

    const VerifyReport report = run_verification(max_n, which);

    // Timing is inherently run-dependent, so it goes to the diagnostic stream;
    // the report on the output stream stays byte-identical across runs.
    for (const auto& [name, seconds] : report.theorem_seconds) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "timing: " << name << " " << seconds << "s";
        err << line.str() << "\n";
    }
    {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "timing: total " << report.elapsed_seconds << "s";
        err << line.str() << "\n";
    }

    std::size_t failed = 0;
    for (const VerifyCheck& check : report.checks)
        if (!check.passed)
            ++failed;

    if (format == "json") {
        JsonValue j;
        j["max_degree"] = report.max_degree;
        j["passed"] = report.all_passed();
        JsonValue theorems = JsonValue::array();
        for (const auto& [name, seconds] : report.theorem_seconds) {
            std::size_t count = 0;
            std::size_t bad_count = 0;
            for (const VerifyCheck& check : report.checks) {
                if (check.theorem == name) {
                    ++count;
                    if (!check.passed)
                        ++bad_count;
                }
            }
            JsonValue entry;
            entry["name"] = name;
            entry["checks"] = count;
            entry["failed"] = bad_count;
            theorems.push_back(std::move(entry));
        }
        j["theorems"] = std::move(theorems);
        JsonValue checks = JsonValue::array();
        for (const VerifyCheck& check : report.checks) {
            JsonValue entry;
            entry["theorem"] = check.theorem;
            entry["alpha"] = composition_to_json(Composition::parse(check.alpha));
            entry["passed"] = check.passed;
            entry["detail"] = check.detail;
            checks.push_back(std::move(entry));
        }
        j["checks"] = std::move(checks);
        out << j.dump() << "\n";
    } else {
        for (const auto& [name, seconds] : report.theorem_seconds) {
            std::size_t count = 0;
            std::size_t passed = 0;
            for (const VerifyCheck& check : report.checks) {
                if (check.theorem == name) {
                    ++count;
                    if (check.passed)
                        ++passed;
                }
            }
            out << name << ": " << passed << " of " << count << " checks passed\n";
            for (const VerifyCheck& check : report.checks)
                if (check.theorem == name && !check.passed)
                    out << "FAIL " << check.theorem << " alpha=" << check.alpha << ": "
                        << check.detail << "\n";
        }
        if (failed == 0)
            out << "all " << report.checks.size() << " checks passed (max degree "
                << report.max_degree << ")\n";
        else
            out << failed << " of " << report.checks.size()
                << " checks failed (max degree " << report.max_degree << ")\n";
    }
    return failed == 0 ? 0 : 1;
}

// --- insert ------------------------------------------------------------------

std::string describe_step(const InsertStep& step) {
    std::string text = std::to_string(step.value) + " -> ";
    if (step.new_row)
        return text + "new row " + std::to_string(step.box.row);
    text += "(" + std::to_string(step.box.column) + "," + std::to_string(step.box.row) + ")";
    if (step.bumped)
        text += " bumps " + std::to_string(*step.bumped);
    return text;
}

int run_insert(const std::string& word_text, const std::string& format,
               std::ostream& out) {
    const std::vector<int> word = parse_word(word_text);

    Filling p;
    std::vector<std::vector<int>> q;
    std::vector<std::vector<InsertStep>> traces;
    for (std::size_t j = 0; j < word.size(); ++j) {
        std::vector<InsertStep> trace;
        auto [next, box] = insert_entry(p, word[j], &trace);
        const int label = static_cast<int>(j) + 1;
        if (next.size() > p.size())
            q.insert(q.begin() + (box.row - 1), {label});
        else
            q[static_cast<std::size_t>(box.row) - 1].push_back(label);
        p = std::move(next);
        traces.push_back(std::move(trace));
    }

    std::vector<int> shape_parts;
    for (const auto& row : p)
        shape_parts.push_back(static_cast<int>(row.size()));
    const bool empty_word_result = p.empty();
    if (empty_word_result)
        bad("word must be a comma-separated list of positive integers");
    const Composition shape(shape_parts);
    const Tableau pt = Tableau::from_values(shape, p);
    const Tableau qt = Tableau::from_values(shape, q);

    if (format == "json") {
        JsonValue j;
        JsonValue jword = JsonValue::array();
        for (int k : word)
            jword.push_back(k);
        j["word"] = std::move(jword);
        JsonValue steps = JsonValue::array();
        for (std::size_t i = 0; i < word.size(); ++i) {
            JsonValue entry;
            entry["insert"] = word[i];
            JsonValue trace = JsonValue::array();
            for (const InsertStep& step : traces[i]) {
                JsonValue s;
                s["value"] = step.value;
                s["box"] = JsonValue::array({step.box.column, step.box.row});
                if (step.bumped)
                    s["bumped"] = *step.bumped;
                else
                    s["bumped"] = nullptr;
                s["new_row"] = step.new_row;
                trace.push_back(std::move(s));
            }
            entry["trace"] = std::move(trace);
            steps.push_back(std::move(entry));
        }
        j["steps"] = std::move(steps);
        j["p"] = tableau_to_json(pt);
        j["q"] = tableau_to_json(qt);
        out << j.dump() << "\n";
        return 0;
    }

    for (std::size_t i = 0; i < word.size(); ++i) {
        out << "insert " << word[i] << ": ";
        for (std::size_t s = 0; s < traces[i].size(); ++s) {
            if (s > 0)
                out << "; ";
            out << describe_step(traces[i][s]);
        }
        out << "\n";
    }
    out << "P = " << pt.to_text() << "\n";
    out << "Q = " << qt.to_text() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact expansions of quasisymmetric Schur Q-functions, peak Young "
                 "quasisymmetric Schur functions, and their tableau models"};
    app.require_subcommand(1);

    std::string kind;
    std::string alpha_text;
    std::string into;
    std::string expand_format = "text";
    CLI::App* expand = app.add_subcommand(
        "expand", "Expand a function into a chosen basis");
    expand->add_option("kind", kind, "Function family: qsq, pyqs, dual_immaculate, young_qs")
        ->required()
        ->check(CLI::IsMember({"qsq", "pyqs", "dual_immaculate", "young_qs"}));
    expand->add_option("--alpha", alpha_text, "Indexing composition, e.g. 3,2,3")
        ->required();
    expand
        ->add_option("--into", into,
                     "Target: pyqs, peak, fundamental, monomial (default: peak for "
                     "qsq/pyqs, fundamental otherwise)")
        ->check(CLI::IsMember({"pyqs", "peak", "fundamental", "monomial"}));
    expand->add_option("--format", expand_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    std::string family_text;
    std::string tab_alpha;
    std::string tab_format = "text";
    CLI::App* tableaux = app.add_subcommand(
        "tableaux", "List the tableaux of a family at a shape");
    tableaux
        ->add_option("--family", family_text,
                     "mpct, smpct, spct, spyct, sit, syct, or dirt")
        ->required()
        ->check(CLI::IsMember({"mpct", "smpct", "spct", "spyct", "sit", "syct", "dirt"}));
    tableaux->add_option("--alpha", tab_alpha, "Indexing composition")->required();
    tableaux->add_option("--format", tab_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    int max_n = 0;
    std::string which = "all";
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand(
        "verify", "Exhaustively verify the expansion theorems");
    verify->add_option("--max-n", max_n, "Largest degree to verify")->required();
    verify->add_option("--which", which, "Check family (default all)")
        ->check(CLI::IsMember({"all", "triple-agreement", "unmark", "bijection",
                               "expansion", "dirts", "characterisation"}));
    verify->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string word_text;
    std::string insert_format = "text";
    CLI::App* insert = app.add_subcommand(
        "insert", "Insert a word letter by letter, tracing every bump");
    insert->add_option("--word", word_text, "Comma-separated distinct positive integers")
        ->required();
    insert->add_option("--format", insert_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(expand))
            return run_expand(kind, alpha_text, into, expand_format, out);
        if (app.got_subcommand(tableaux))
            return run_tableaux(family_text, tab_alpha, tab_format, out);
        if (app.got_subcommand(verify))
            return run_verify(max_n, which, verify_format, out, err);
        return run_insert(word_text, insert_format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace peakqsym
