#include "nikulin/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nikulin/constructions.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/pell.hpp"
#include "nikulin/serialization.hpp"
#include "nikulin/verifiers.hpp"

namespace nikulin {

namespace {

using Grid = std::vector<std::vector<std::string>>;

// Left-aligned columns two spaces apart, no trailing blanks.
std::string render_grid(const Grid& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_csv(const Grid& grid) {
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
        out += "\n";
    }
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string fraction(std::uint64_t k, std::uint64_t n) { return std::to_string(k) + "/" + std::to_string(n); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string solution_text(const PellSolution& s) { return "(" + s.alpha.str() + ", " + s.beta.str() + ")"; }

void require_t(std::int64_t t) {
    if (t < 1) throw UsageError("t must be a positive integer");
}

// Case analysis shared by classify and scan.
struct CaseSummary {
    std::string name;     // square, odd_beta0, even_beta0
    std::string verdict;  // one line
    std::optional<SubcaseReport> subcase;
};

CaseSummary summarize(const TClassification& c) {
    CaseSummary s;
    if (c.two_t_is_square) {
        s.name = "square";
        s.verdict = c.t == 2 ? "2t square: half-fibre B-class configuration; structure equivalence unknown"
                             : "2t square: no (-2)-class beta L - alpha A1; not covered";
        return s;
    }
    if (!*c.beta0_even) {
        s.name = "odd_beta0";
        s.verdict = c.t == 4 ? "beta0 odd; configuration A1'', .., A4'', A5, .., A16; structure equivalence unknown"
                             : "beta0 odd: 1/2(A1 + A1') would put L/2 in NS, so A1' is reducible";
        return s;
    }
    s.name = "even_beta0";
    s.subcase = subcase_classify(c.t);
    if (c.neg_pell) {
        s.verdict = "beta0 even; negative Pell solvable => same Kummer structure via double-plane involution";
        return s;
    }
    s.verdict = "beta0 even; negative Pell unsolvable => C, C' are distinct Kummer structures";
    if (s.subcase->quartic) {
        s.verdict += "; quartic sub-case (d0,e0)=(" + s.subcase->d0.str() + "," + s.subcase->e0.str() + ")";
    } else {
        s.verdict += "; sub-case quotient " + s.subcase->quotient.str();
    }
    return s;
}

std::string classes_line(const std::vector<DivisorClass>& xs) {
    std::string out;
    for (const DivisorClass& x : xs) out += (out.empty() ? "" : ", ") + to_display_string(x);
    return out;
}

void identities_text(std::ostringstream& os, const std::vector<IdentityCheck>& checks) {
    os << "identities (" << checks.size() << "):\n";
    for (const IdentityCheck& c : checks) os << "  " << c.name << " = " << c.value << "\n";
}

template <class Range>
std::vector<DivisorClass> as_vector(const Range& r) {
    return {r.begin(), r.end()};
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw UsageError("unknown format '" + name + "' (expected text, csv or json)");
}

std::string TableRow::label() const {
    const std::string n = std::to_string(two_t);
    if (boxed) return "[" + n + "]";
    if (star) return n + "*";
    if (primed) return n + "'";
    return n;
}

std::vector<TableRow> table_rows(std::int64_t max_2t) {
    if (max_2t < 2 || max_2t % 2 != 0) throw UsageError("--max-2t must be an even integer >= 2");
    std::vector<TableRow> rows;
    for (std::int64_t d = 2; d <= max_2t; d += 2) {
        const TClassification c = classify_t(d / 2);
        TableRow r;
        r.two_t = d;
        const std::int64_t k = isqrt(d);
        r.star = k * (k + 1) == d;
        if (!c.two_t_is_square) {
            r.alpha0 = c.fundamental->alpha;
            r.beta0 = c.fundamental->beta;
            r.boxed = !*c.beta0_even;
            r.primed = c.neg_pell.has_value() && !r.star;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

CommandOutput cmd_table(std::int64_t max_2t, Format format) {
    const auto rows = table_rows(max_2t);
    if (format == Format::json) {
        Json arr = Json::array();
        for (const TableRow& r : rows) {
            arr.push_back({{"two_t", std::to_string(r.two_t)},
                           {"alpha0", r.alpha0 ? Json(r.alpha0->str()) : Json(nullptr)},
                           {"beta0", r.beta0 ? Json(r.beta0->str()) : Json(nullptr)},
                           {"star", r.star},
                           {"boxed", r.boxed},
                           {"primed", r.primed}});
        }
        return {dump(arr), 0};
    }
    Grid grid;
    if (format == Format::csv) {
        grid.push_back({"two_t", "alpha0", "beta0", "star", "boxed", "primed"});
        for (const TableRow& r : rows) {
            grid.push_back({std::to_string(r.two_t), r.alpha0 ? r.alpha0->str() : "", r.beta0 ? r.beta0->str() : "",
                            r.alpha0 ? yes_no(r.star) : "", r.alpha0 ? yes_no(r.boxed) : "",
                            r.alpha0 ? yes_no(r.primed) : ""});
        }
        return {render_csv(grid), 0};
    }
    grid.push_back({"2t", "alpha0", "beta0"});
    for (const TableRow& r : rows)
        grid.push_back({r.label(), r.alpha0 ? r.alpha0->str() : "-", r.beta0 ? r.beta0->str() : "-"});
    return {render_grid(grid), 0};
}

CommandOutput cmd_classify(std::int64_t t, Format format) {
    require_t(t);
    const TClassification c = classify_t(t);
    const CaseSummary s = summarize(c);

    if (format == Format::json) {
        Json j = classification_to_json(c);
        j["case"] = s.name;
        j["verdict"] = s.verdict;
        j["subcase"] = s.subcase ? construction_to_json(*s.subcase) : Json(nullptr);
        return {dump(j), 0};
    }
    const std::string fund = c.fundamental ? solution_text(*c.fundamental) : "";
    const std::string neg = c.neg_pell ? solution_text(*c.neg_pell) : "";
    if (format == Format::csv) {
        Grid grid{{"t", "two_t_square", "alpha0", "beta0", "beta0_even", "neg_pell", "t_mod_12", "nu",
                   "predicted_structures", "case", "quotient", "verdict"}};
        grid.push_back({std::to_string(t), yes_no(c.two_t_is_square),
                        c.fundamental ? c.fundamental->alpha.str() : "", c.fundamental ? c.fundamental->beta.str() : "",
                        c.beta0_even ? yes_no(*c.beta0_even) : "", neg, std::to_string(c.t_mod_12),
                        std::to_string(c.nu), std::to_string(c.predicted_structures), s.name,
                        s.subcase ? s.subcase->quotient.str() : "", s.verdict});
        return {render_csv(grid), 0};
    }
    std::ostringstream os;
    os << "t = " << t << " (2t = " << 2 * t << ")\n";
    if (c.two_t_is_square) {
        os << "2t is a square\n";
    } else {
        os << "fundamental solution: " << fund << "\n";
        os << "negative Pell: " << (c.neg_pell ? neg : "unsolvable") << "\n";
    }
    os << "t mod 12 = " << c.t_mod_12 << ", distinct primes = " << c.nu
       << ", predicted structures = " << c.predicted_structures << "\n";
    if (s.subcase) {
        os << "sub-case: d0 = " << s.subcase->d0 << ", e0 = " << s.subcase->e0
           << ", quotient = " << s.subcase->quotient << "\n";
    }
    os << s.verdict << "\n";
    return {os.str(), 0};
}

CommandOutput cmd_scan(std::int64_t t_min, std::int64_t t_max, Format format) {
    if (t_min < 1 || t_max < t_min) throw UsageError("scan range must satisfy 1 <= A <= B");
    const ParityScanReport report = scan_parity_lemmas(t_min, t_max);

    Grid grid{{"t", "alpha0", "beta0", "beta0_even", "neg_pell", "t_mod_12", "case"}};
    Json rows = Json::array();
    for (std::int64_t t = t_min; t <= t_max; ++t) {
        const TClassification c = classify_t(t);
        const std::string name = c.two_t_is_square ? "square" : *c.beta0_even ? "even_beta0" : "odd_beta0";
        grid.push_back({std::to_string(t), c.fundamental ? c.fundamental->alpha.str() : "",
                        c.fundamental ? c.fundamental->beta.str() : "", c.beta0_even ? yes_no(*c.beta0_even) : "",
                        c.two_t_is_square ? "" : yes_no(c.neg_pell.has_value()), std::to_string(c.t_mod_12), name});
        Json row = classification_to_json(c);
        row["case"] = name;
        rows.push_back(std::move(row));
    }
    const std::uint64_t violations =
        report.beta_parity_violations.size() + report.neg_pell_congruence_violations.size();
    const int exit_code = violations == 0 ? 0 : 1;

    if (format == Format::json) {
        Json j{{"range", {std::to_string(t_min), std::to_string(t_max)}},
               {"rows", rows},
               {"tested", std::to_string(report.tested)},
               {"beta0_even", fraction(report.beta0_even_count, report.tested)},
               {"neg_pell_unsolvable", fraction(report.neg_pell_unsolvable_count, report.tested)},
               {"even_and_unsolvable", fraction(report.even_and_unsolvable_count, report.tested)},
               {"beta_parity_violations", report.beta_parity_violations},
               {"neg_pell_congruence_violations", report.neg_pell_congruence_violations}};
        return {dump(j), exit_code};
    }
    if (format == Format::csv) return {render_csv(grid), exit_code};
    std::ostringstream os;
    os << render_grid(grid) << "\n";
    os << "non-square 2t tested: " << report.tested << "\n";
    os << "beta0 even: " << fraction(report.beta0_even_count, report.tested) << "\n";
    os << "negative Pell unsolvable: " << fraction(report.neg_pell_unsolvable_count, report.tested) << "\n";
    os << "beta0 even and negative Pell unsolvable: " << fraction(report.even_and_unsolvable_count, report.tested)
       << "\n";
    os << "lemma violations: " << violations << "\n";
    return {os.str(), exit_code};
}

CommandOutput cmd_construct(std::int64_t t, Format format) {
    require_t(t);
    const TClassification c = classify_t(t);
    Json j;
    std::ostringstream os;
    Grid grid{{"name", "class"}};
    auto add = [&](const std::string& name, const DivisorClass& x) {
        grid.push_back({name, to_display_string(x)});
        os << name << " = " << to_display_string(x) << "\n";
    };

    if (c.two_t_is_square) {
        if (t != 2) throw SquareCase(t);
        const T2Package p = build_t2_configuration();
        j = construction_to_json(p);
        for (int k = 0; k < 4; ++k) add("F" + std::to_string(k + 1), p.F[k]);
        for (int k = 0; k < 8; ++k) add("B" + std::to_string(k + 1), p.B[k]);
        add("L'", p.L_prime);
        os << "configuration: " << classes_line(p.configuration.classes()) << "\n";
        identities_text(os, p.identities);
    } else if (!*c.beta0_even) {
        const OddBetaObstruction o = check_odd_beta_obstruction(t);
        j = {{"obstruction", construction_to_json(o)}};
        add("A1'", o.A1_prime);
        add("1/2(A1 + A1')", o.half_sum);
        os << "1/2(A1 + A1') admissible: " << yes_no(o.half_sum_admissible) << "\n";
        if (t == 4) {
            const T4Package p = build_t4_configuration();
            j["configuration"] = construction_to_json(p);
            for (int k = 0; k < 4; ++k) add("A" + std::to_string(k + 1) + "''", p.A_double_prime[k]);
            add("L1", p.L1);
            add("L'", p.L_prime);
            os << "configuration: " << classes_line(p.configuration.classes()) << "\n";
            identities_text(os, p.identities);
        }
    } else {
        const EvenBetaConstruction e = build_even_beta(t);
        const SubcaseReport s = subcase_classify(t);
        j = construction_to_json(e);
        j["subcase"] = construction_to_json(s);
        // Scalars of the sub-case at top level as well.
        j["d0"] = s.d0.str();
        j["e0"] = s.e0.str();
        j["quotient"] = s.quotient.str();
        j["same_structure"] = s.same_structure;
        add("A1'", e.A1_prime);
        add("L'", e.L_prime);
        add("D'", s.D_prime);
        os << "d0 = " << s.d0 << ", e0 = " << s.e0 << ", quotient = " << s.quotient
           << ", same structure = " << yes_no(s.same_structure) << "\n";
        os << "configuration: " << classes_line(e.configuration.classes()) << "\n";
        identities_text(os, e.identities);
    }
    if (format == Format::json) return {dump(j), 0};
    if (format == Format::csv) return {render_csv(grid), 0};
    return {os.str(), 0};
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{"contracted-set-L",   "contracted-set-Lprime", "contracted-set-Dprime",
                                              "lemma-treize",       "quartic-degree-one",    "t4-nefness",
                                              "t2-f1-nef",          "even-propagation"};
    return ids;
}

CommandOutput cmd_verify(std::optional<std::int64_t> t, const std::string& claim, std::uint64_t node_cap,
                         Format format) {
    const auto& ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), claim) == ids.end()) throw UsageError("unknown claim '" + claim + "'");
    const VerifierOptions options{node_cap};
    auto fixed_t = [&](std::int64_t required) {
        if (t && *t != required) throw UsageError(claim + " applies to t = " + std::to_string(required) + " only");
    };
    auto need_t = [&] {
        if (!t) throw UsageError(claim + " needs t");
        require_t(*t);
        return *t;
    };

    Verdict v;
    if (claim == "t4-nefness") {
        fixed_t(4);
        v = verify_t4_nefness(options);
    } else if (claim == "t2-f1-nef") {
        fixed_t(2);
        v = verify_t2_f1_nef(options);
    } else if (claim == "contracted-set-L") {
        const std::int64_t tt = need_t();
        std::vector<DivisorClass> expected;
        for (int i = 1; i <= kExceptionalCurves; ++i) expected.push_back(A(i));
        v = verify_contracted_set(L(), std::move(expected), GramForm(tt), options);
    } else if (claim == "contracted-set-Lprime") {
        v = verify_contracted_set_L_prime(need_t(), options);
    } else if (claim == "contracted-set-Dprime") {
        v = verify_contracted_set_D_prime(need_t(), options);
    } else if (claim == "lemma-treize") {
        v = verify_lemma_treize(need_t(), 10);
    } else if (claim == "quartic-degree-one") {
        v = verify_quartic_degree_one(need_t());
    } else {
        v = verify_even_propagation(need_t(), 20);
    }
    const int code = v.pass ? 0 : 1;

    if (format == Format::json) return {dump(verdict_to_json(v)), code};
    if (format == Format::csv) {
        Grid grid{{"claim", "verdict", "zero_set_size", "witness", "nodes_visited"},
                  {v.claim, v.pass ? "PASS" : "FAIL", std::to_string(v.zero_set.size()),
                   v.witness ? to_display_string(*v.witness) : "", std::to_string(v.nodes_visited)}};
        return {render_csv(grid), code};
    }
    std::ostringstream os;
    os << "claim: " << v.claim << "\n";
    for (const auto& [k, val] : v.parameters) os << "  " << k << " = " << val << "\n";
    os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
    if (v.pass) {
        os << "zero set (" << v.zero_set.size() << "): " << classes_line(v.zero_set) << "\n";
    } else if (v.witness) {
        os << "witness: " << to_display_string(*v.witness) << "\n";
    }
    os << "nodes visited: " << v.nodes_visited << "\n";
    for (const std::string& d : v.details) os << "  " << d << "\n";
    return {os.str(), code};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like A..B");
    auto num = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw UsageError("malformed range bound '" + std::string(part) + "'");
        return v;
    };
    const std::string_view sv(text);
    const std::int64_t a = num(sv.substr(0, dots));
    const std::int64_t b = num(sv.substr(dots + 2));
    if (a < 1 || b < a) throw UsageError("range must satisfy 1 <= A <= B");
    return {a, b};
}

}  // namespace nikulin
