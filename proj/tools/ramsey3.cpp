// ramsey3 — exact upper bounds on R_n(3) and Schur numbers, with
// desk-scale search oracles and certificate checking.

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/exact.hpp"
#include "ramsey/schur.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witness_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace ramsey;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitFormat = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

struct Options {
    unsigned max_n = 6;
    bool max_n_given = false;
    std::vector<std::string> assumptions;
    unsigned k = 0;
    std::string upper;
    unsigned colors = 0;
    unsigned limit = 50;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::string format = "human";
    std::string kb_path;
    unsigned workers = 1;
    std::string emit_path;
    std::string witness_path;
};

Natural parse_natural_arg(const std::string& text, const std::string& what) {
    if (text.empty())
        throw std::domain_error(what + ": empty value");
    for (char ch : text)
        if (ch < '0' || ch > '9')
            throw std::domain_error(what + ": not a nonnegative integer: '" + text + "'");
    return Natural(text);
}

KnowledgeBase load_base(const Options& opt) {
    KnowledgeBase kb =
        opt.kb_path.empty() ? KnowledgeBase::defaults() : KnowledgeBase::load(opt.kb_path);
    for (const std::string& text : opt.assumptions) {
        auto eq = text.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
            throw std::domain_error("--assume expects k=u, got '" + text + "'");
        Natural k_value = parse_natural_arg(text.substr(0, eq), "--assume k");
        if (k_value < 2 || k_value > 1000000)
            throw std::domain_error("--assume k must be in 2..1000000");
        unsigned k = static_cast<unsigned>(k_value);
        Natural upper = parse_natural_arg(text.substr(eq + 1), "--assume u");
        if (!kb.assume(k, upper))
            std::cerr << "warning: assumption " << text
                      << " does not strengthen the stored upper bound; keeping the stored value\n";
    }
    return kb;
}

// q printed as a reduced fraction; the decimal garnish in human output is
// display-only (the engine itself never touches floating point).
std::string approx_e_minus(const ExactRational& q) {
    Natural scaled = q.numerator() * 1000000 / q.denominator();
    double value = std::numbers::e - static_cast<double>(scaled.convert_to<double>()) / 1e6;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

// ---------------------------------------------------------------- table

void table_human(const std::vector<BoundTableRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "lower", "upper", "via", "q"});
    for (const BoundTableRow& row : rows) {
        const BoundCandidate& win = row.candidates[row.winner];
        std::string via;
        std::string q = "-";
        switch (win.kind) {
        case BoundCandidate::Kind::anchor:
            via = "anchor k=" + std::to_string(win.anchor_k);
            q = win.q.str();
            break;
        case BoundCandidate::Kind::recursion:
            via = win.label;
            break;
        case BoundCandidate::Kind::stored:
            via = "stored";
            break;
        }
        cells.push_back({std::to_string(row.n), row.lower.str(), row.best_upper.str(), via, q});
    }
    std::vector<std::size_t> width(5, 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < 5; ++c)
            width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
        std::cout << std::right << std::setw(static_cast<int>(width[0])) << line[0];
        std::cout << "  " << std::setw(static_cast<int>(width[1])) << line[1];
        std::cout << "  " << std::setw(static_cast<int>(width[2])) << line[2];
        std::cout << "  " << std::left << std::setw(static_cast<int>(width[3])) << line[3];
        std::cout << "  " << line[4] << "\n";
        std::cout << std::right;
    }
}

void winner_fields(const BoundTableRow& row, unsigned& anchor_k, Natural& a, ExactRational& q) {
    const BoundCandidate& win = row.candidates[row.winner];
    if (win.kind == BoundCandidate::Kind::anchor) {
        anchor_k = win.anchor_k;
        a = win.a;
        q = win.q;
    } else {
        anchor_k = 0;
        a = 0;
        q = ExactRational();
    }
}

void table_csv(const std::vector<BoundTableRow>& rows) {
    std::cout << "n,lower,upper,anchor_k,a,q_num,q_den\n";
    for (const BoundTableRow& row : rows) {
        unsigned anchor_k = 0;
        Natural a;
        ExactRational q;
        winner_fields(row, anchor_k, a, q);
        std::cout << row.n << "," << row.lower.str() << "," << row.best_upper.str() << ","
                  << anchor_k << "," << a.str() << "," << q.numerator().str() << ","
                  << q.denominator().str() << "\n";
    }
}

void table_json(const std::vector<BoundTableRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const BoundTableRow& row : rows) {
        unsigned anchor_k = 0;
        Natural a;
        ExactRational q;
        winner_fields(row, anchor_k, a, q);
        ordered_json j;
        j["n"] = row.n;
        j["lower"] = row.lower.str();
        j["upper"] = row.best_upper.str();
        j["anchor_k"] = anchor_k;
        j["a"] = a.str();
        j["q_num"] = q.numerator().str();
        j["q_den"] = q.denominator().str();
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
}

int cmd_table(const Options& opt) {
    if (opt.max_n < 1)
        throw std::domain_error("--max-n must be at least 1");
    KnowledgeBase kb = load_base(opt);
    std::vector<BoundTableRow> rows = best_bounds_table(kb, opt.max_n);
    if (opt.format == "csv")
        table_csv(rows);
    else if (opt.format == "json")
        table_json(rows);
    else
        table_human(rows);
    return kExitOk;
}

// ---------------------------------------------------------------- adapt

int cmd_adapt(const Options& opt) {
    if (opt.k < 2)
        throw std::domain_error("--k must be at least 2");
    Natural upper = parse_natural_arg(opt.upper, "--upper");
    unsigned max_n = opt.max_n_given ? opt.max_n : opt.k + 4;
    if (max_n < opt.k)
        throw std::domain_error("--max-n must be at least --k");

    AdaptiveBound bound = adaptive_from_anchor(opt.k, upper);
    bool optimal = check_optimality_remark(opt.k, upper);
    Natural f_prime = floor_scaled(opt.k, ExactRational::fraction(bound.a + 1, factorial(opt.k))) + 1;

    std::vector<std::pair<unsigned, Natural>> values;
    for (unsigned n = opt.k; n <= max_n; ++n)
        values.emplace_back(n, closed_form_bound(bound, n));

    if (opt.format == "json") {
        ordered_json j;
        j["k"] = opt.k;
        j["anchor_upper"] = upper.str();
        j["a"] = bound.a.str();
        j["q_num"] = bound.q.numerator().str();
        j["q_den"] = bound.q.denominator().str();
        j["optimal"] = optimal;
        j["rows"] = ordered_json::array();
        for (const auto& [n, f] : values)
            j["rows"].push_back(ordered_json{{"n", n}, {"f", f.str()}});
        std::cout << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,f\n";
        for (const auto& [n, f] : values)
            std::cout << n << "," << f.str() << "\n";
    } else {
        std::cout << "anchor: R_" << opt.k << "(3) <= " << upper.str() << "\n";
        std::cout << "a = " << bound.a.str() << "\n";
        std::cout << "q = " << bound.q.str() << "\n";
        if (bound.q.is_zero())
            std::cout << "bound: R_n(3) <= n!e + 1 for n >= " << opt.k
                      << " (the unconditional bound)\n";
        else
            std::cout << "bound: R_n(3) <= n!(e - " << bound.q.str() << ") + 1 for n >= " << opt.k
                      << "   (e - " << bound.q.str() << " ≈ " << approx_e_minus(bound.q)
                      << ")\n";
        if (optimal)
            std::cout << "optimality: a' = " << Natural(bound.a + 1).str()
                      << " already fails at n = " << opt.k << " (f'(" << opt.k
                      << ") = " << f_prime.str() << " < " << upper.str() << ")\n";
        else
            std::cout << "optimality: UNEXPECTED — a' = " << Natural(bound.a + 1).str()
                      << " does not fail at n = " << opt.k << "\n";
        for (const auto& [n, f] : values)
            std::cout << "f(" << n << ") = " << f.str() << "\n";
    }
    return optimal ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& opt) {
    if (opt.max_n < 1)
        throw std::domain_error("--max-n must be at least 1");
    KnowledgeBase kb = load_base(opt);
    bool all_ok = true;

    // Euler floor identity, both sides evaluated from scratch.
    unsigned euler_bad = 0;
    for (unsigned n = 1; n <= opt.max_n; ++n)
        if (!check_euler_recursion(n))
            ++euler_bad;
    std::cout << "euler recursion n=1.." << opt.max_n << ": "
              << (euler_bad ? "FAILED (" + std::to_string(euler_bad) + " cases)" : "ok") << "\n";
    all_ok = all_ok && euler_bad == 0;

    // Closed form against step-by-step recursion, whole trajectories.
    if (opt.max_n >= 2) {
        KnowledgeBase norm = normalize_kb(kb, opt.max_n);
        unsigned checked = 0, bad = 0;
        for (const auto& [k, entry] : kb.entries()) {
            if (k < 2 || k > opt.max_n)
                continue;
            const Natural& anchor_upper = norm.find(k)->upper;
            AdaptiveBound bound = adaptive_from_anchor(k, anchor_upper);
            for (unsigned n = k; n <= opt.max_n; ++n) {
                ++checked;
                if (closed_form_bound(bound, n) != propagate_recursive(k, anchor_upper, n))
                    ++bad;
            }
        }
        std::cout << "closed form vs recursion (" << checked << " evaluations): "
                  << (bad ? "FAILED (" + std::to_string(bad) + " cases)" : "ok") << "\n";
        all_ok = all_ok && bad == 0;
    }

    // Maximality of a over every anchor's admissible interval.
    if (opt.max_n >= 2) {
        unsigned top = std::min(opt.max_n, 6u);
        KnowledgeBase norm = normalize_kb(kb, top);
        unsigned long long checked = 0, bad = 0;
        for (unsigned k = 2; k <= top; ++k) {
            const KnowledgeBaseEntry* entry = norm.find(k);
            if (!entry)
                continue;
            for (Natural u = entry->lower; u <= entry->upper; ++u) {
                ++checked;
                if (!check_optimality_remark(k, u))
                    ++bad;
            }
        }
        std::cout << "optimality of maximal a (k=2.." << top << ", " << checked
                  << " anchors): " << (bad ? "FAILED (" + std::to_string(bad) + " cases)" : "ok")
                  << "\n";
        all_ok = all_ok && bad == 0;
    }

    // The q = 1/6 bound stops exactly short of R_3(3).
    if (opt.max_n >= 3) {
        Natural f3 = floor_scaled(3, ExactRational::fraction(1, 6)) + 1;
        const KnowledgeBaseEntry* r3 = kb.find(3);
        Natural r3_upper = r3 ? r3->upper : Natural(17);
        if (f3 < r3_upper) {
            std::cout << "f(3)=" << f3.str() << " < " << r3_upper.str()
                      << ", non-extension confirmed\n";
        } else {
            std::cout << "non-extension FAILED: f(3)=" << f3.str() << " vs " << r3_upper.str()
                      << "\n";
            all_ok = false;
        }
    }

    std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILURES above") << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- oracles

struct RamseyStep {
    unsigned N = 0;
    bool witness = false;
    std::uint64_t nodes = 0;
};

int cmd_oracle_ramsey(const Options& opt) {
    SearchBudget budget{opt.budget};
    KnowledgeBase kb = load_base(opt);
    std::vector<RamseyStep> steps;
    std::optional<EdgeColoring> last_witness;
    unsigned proved = 0;

    unsigned N = 2;
    try {
        for (;; ++N) {
            ColoringSearch result = exists_good_coloring(N, opt.colors, budget, opt.workers);
            steps.push_back({N, result.witness.has_value(), result.nodes});
            if (!result.witness) {
                proved = N;
                break;
            }
            last_witness = std::move(result.witness);
        }
    } catch (const BudgetExceeded& e) {
        if (opt.format == "json") {
            ordered_json j;
            j["colors"] = opt.colors;
            j["status"] = "budget-exceeded";
            j["at_N"] = N;
            j["nodes"] = e.nodes();
            std::cout << j.dump(2) << "\n";
        } else {
            for (const RamseyStep& s : steps)
                std::cout << "N=" << s.N << ": " << (s.witness ? "witness found" : "proved absent")
                          << " (nodes=" << s.nodes << ")\n";
            std::cout << "R_" << opt.colors << "(3): budget-exceeded at N=" << N << " after "
                      << e.nodes() << " nodes\n";
        }
        return kExitBudget;
    }

    bool witness_ok =
        !last_witness || verify_witness(*last_witness, opt.colors, proved - 1);
    const KnowledgeBaseEntry* stored = kb.find(opt.colors);
    bool kb_ok = !stored || (Natural(proved) >= stored->lower && Natural(proved) <= stored->upper);

    if (!opt.emit_path.empty() && last_witness)
        save_ramsey_witness(opt.emit_path, *last_witness);

    if (opt.format == "json") {
        ordered_json j;
        j["colors"] = opt.colors;
        j["R"] = proved;
        j["status"] = "proved";
        j["steps"] = ordered_json::array();
        for (const RamseyStep& s : steps)
            j["steps"].push_back(ordered_json{
                {"N", s.N}, {"outcome", s.witness ? "witness" : "absent"}, {"nodes", s.nodes}});
        j["witness_verified"] = witness_ok;
        j["kb_consistent"] = kb_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const RamseyStep& s : steps)
            std::cout << "N=" << s.N << ": " << (s.witness ? "witness found" : "proved absent")
                      << " (nodes=" << s.nodes << ")\n";
        std::cout << "R_" << opt.colors << "(3) = " << proved << " (proved)\n";
        if (last_witness)
            std::cout << "witness at N=" << proved - 1
                      << (witness_ok ? " verified: no monochromatic triangle"
                                     : " FAILED verification")
                      << "\n";
        if (stored)
            std::cout << "kb check: " << (kb_ok ? "consistent with" : "CONTRADICTS")
                      << " stored [" << stored->lower.str() << ", " << stored->upper.str()
                      << "]\n";
        else
            std::cout << "kb check: no stored entry for n=" << opt.colors << "\n";
    }
    return witness_ok && kb_ok ? kExitOk : kExitVerification;
}

int cmd_oracle_schur(const Options& opt) {
    SearchBudget budget{opt.budget};
    KnowledgeBase kb = load_base(opt);
    SchurSearch result;
    try {
        result = schur_number(opt.colors, opt.limit, budget);
    } catch (const BudgetExceeded& e) {
        if (opt.format == "json") {
            ordered_json j;
            j["colors"] = opt.colors;
            j["limit"] = opt.limit;
            j["status"] = "budget-exceeded";
            j["nodes"] = e.nodes();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "S(" << opt.colors << "): budget-exceeded after " << e.nodes()
                      << " nodes\n";
        }
        return kExitBudget;
    }

    bool witness_ok = result.witness && !find_schur_violation(*result.witness).has_value();
    bool link_ok = true;
    bool link_checked = false;
    Natural ramsey_minus_2, euler_minus_1;
    if (!result.exceeds_limit) {
        KnowledgeBase norm = normalize_kb(kb, opt.colors);
        link_ok = check_schur_ramsey_link(opt.colors, norm, Natural(result.value));
        link_checked = true;
        ramsey_minus_2 = norm.find(opt.colors)->upper - 2;
        if (opt.colors >= 2)
            euler_minus_1 = floor_factorial_e(opt.colors) - 1;
    }

    if (!opt.emit_path.empty() && result.witness)
        save_schur_witness(opt.emit_path, *result.witness);

    if (opt.format == "json") {
        ordered_json j;
        j["colors"] = opt.colors;
        j["limit"] = opt.limit;
        if (result.exceeds_limit) {
            j["status"] = "exceeds-limit";
            j["S_at_least"] = result.value;
        } else {
            j["status"] = "proved";
            j["S"] = result.value;
        }
        j["nodes"] = result.nodes;
        j["witness_verified"] = witness_ok;
        if (link_checked)
            j["link_ok"] = link_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        if (result.exceeds_limit)
            std::cout << "S(" << opt.colors << ") >= " << result.value << " (exceeds limit)\n";
        else
            std::cout << "S(" << opt.colors << ") = " << result.value << "\n";
        std::cout << "search nodes: " << result.nodes << "\n";
        if (result.witness)
            std::cout << "witness for N=" << result.witness->bound()
                      << (witness_ok ? " verified: sum-free" : " FAILED verification") << "\n";
        if (link_checked) {
            std::cout << "link check: S <= R_" << opt.colors
                      << "(3) - 2 = " << ramsey_minus_2.str();
            if (opt.colors >= 2)
                std::cout << " and S <= floor(" << opt.colors << "!e) - 1 = "
                          << euler_minus_1.str();
            std::cout << ": " << (link_ok ? "ok" : "FAILED") << "\n";
        } else {
            std::cout << "link check skipped (only a lower bound was established)\n";
        }
    }
    return witness_ok && link_ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------- check-witness

int cmd_check_witness(const Options& opt) {
    auto witness = load_witness(opt.witness_path);
    if (std::holds_alternative<EdgeColoring>(witness)) {
        const EdgeColoring& c = std::get<EdgeColoring>(witness);
        std::optional<MonoTriangle> triangle = find_mono_triangle(c);
        if (opt.format == "json") {
            ordered_json j;
            j["kind"] = "ramsey";
            j["N"] = c.vertex_count();
            j["n"] = c.color_count();
            j["valid"] = !triangle.has_value();
            if (triangle)
                j["triangle"] = ordered_json{{"a", triangle->a},
                                             {"b", triangle->b},
                                             {"c", triangle->c},
                                             {"color", triangle->color}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "loaded ramsey-witness: N=" << c.vertex_count()
                      << " n=" << c.color_count() << " (" << c.edge_count() << " edges)\n";
            if (triangle)
                std::cout << "INVALID: monochromatic triangle {" << triangle->a << ", "
                          << triangle->b << ", " << triangle->c << "} in color "
                          << triangle->color << "\n";
            else
                std::cout << "valid: no monochromatic triangle\n";
        }
        return triangle ? kExitVerification : kExitOk;
    }
    const SchurPartition& p = std::get<SchurPartition>(witness);
    std::optional<SchurViolation> violation = find_schur_violation(p);
    if (opt.format == "json") {
        ordered_json j;
        j["kind"] = "schur";
        j["N"] = p.bound();
        j["n"] = p.block_count();
        j["valid"] = !violation.has_value();
        if (violation)
            j["violation"] = ordered_json{
                {"x", violation->x}, {"y", violation->y}, {"z", violation->z}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "loaded schur-witness: N=" << p.bound() << " n=" << p.block_count() << "\n";
        if (violation)
            std::cout << "INVALID: " << violation->x << " + " << violation->y << " = "
                      << violation->z << " all in block " << p.block(violation->z) << "\n";
        else
            std::cout << "valid: sum-free partition\n";
    }
    return violation ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact upper-bound laboratory for R_n(3) and Schur numbers"};
    app.require_subcommand(1);

    auto add_format = [&opt](CLI::App* cmd, bool with_csv) {
        auto* o = cmd->add_option("--format", opt.format, "output format");
        if (with_csv)
            o->check(CLI::IsMember({"human", "csv", "json"}));
        else
            o->check(CLI::IsMember({"human", "json"}));
    };
    auto add_kb = [&opt](CLI::App* cmd) {
        cmd->add_option("--kb", opt.kb_path, "knowledge base file (defaults built in)");
        cmd->add_option("--assume", opt.assumptions, "overlay assumption k=u (repeatable)");
    };

    CLI::App* table = app.add_subcommand("table", "best upper bounds on R_n(3) per n");
    table->add_option("--max-n", opt.max_n, "largest n in the table");
    add_kb(table);
    add_format(table, true);
    table->add_option("--workers", opt.workers,
                      "worker count for search oracles (accepted for interface "
                      "uniformity; the table runs no searches)");

    CLI::App* adapt = app.add_subcommand("adapt", "derive (a, q) from an anchor R_k(3) <= u");
    CLI::Option* adapt_max_n = adapt->add_option("--max-n", opt.max_n, "largest n to evaluate");
    adapt->add_option("--k", opt.k, "anchor color count")->required();
    adapt->add_option("--upper", opt.upper, "anchor upper bound on R_k(3)")->required();
    add_format(adapt, true);

    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
    verify->add_option("--max-n", opt.max_n, "largest n covered by the suites");
    add_kb(verify);

    CLI::App* oracle_ramsey =
        app.add_subcommand("oracle-ramsey", "establish R_n(3) by exhaustive search");
    oracle_ramsey->add_option("--colors", opt.colors, "number of colors n")->required();
    oracle_ramsey->add_option("--budget", opt.budget, "node budget per search branch");
    oracle_ramsey->add_option("--workers", opt.workers, "parallel search workers");
    oracle_ramsey->add_option("--emit", opt.emit_path, "write the last witness to this file");
    add_kb(oracle_ramsey);
    add_format(oracle_ramsey, false);

    CLI::App* oracle_schur =
        app.add_subcommand("oracle-schur", "compute S(n) by sum-free partition search");
    oracle_schur->add_option("--colors", opt.colors, "number of blocks n")->required();
    oracle_schur->add_option("--limit", opt.limit, "largest N the search may examine");
    oracle_schur->add_option("--budget", opt.budget, "node budget");
    oracle_schur->add_option("--emit", opt.emit_path, "write the witness to this file");
    add_kb(oracle_schur);
    add_format(oracle_schur, false);

    CLI::App* check = app.add_subcommand("check-witness", "verify a witness certificate file");
    check->add_option("witness", opt.witness_path, "witness file to check")->required();
    add_format(check, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    opt.max_n_given = adapt_max_n->count() > 0;

    try {
        if (app.got_subcommand(table))
            return cmd_table(opt);
        if (app.got_subcommand(adapt))
            return cmd_adapt(opt);
        if (app.got_subcommand(verify))
            return cmd_verify(opt);
        if (app.got_subcommand(oracle_ramsey))
            return cmd_oracle_ramsey(opt);
        if (app.got_subcommand(oracle_schur))
            return cmd_oracle_schur(opt);
        if (app.got_subcommand(check))
            return cmd_check_witness(opt);
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
