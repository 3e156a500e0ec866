#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "appell_expr.hpp"
#include "io.hpp"
#include "pqappell/appell.hpp"
#include "pqappell/families.hpp"
#include "pqappell/pq_core.hpp"
#include "verify_suite.hpp"

namespace pqa::cli {

namespace {

enum class Format { Text, Json, Csv, Latex };

struct Options {
    std::string p = "2";
    std::string q = "1";
    std::size_t n = 5;
    std::size_t order = 16;
    std::uint64_t seed = 42;
    std::size_t samples = 5;
    std::string contexts;
    std::string format = "text";
    std::string report;
    std::string family;
    std::string expr;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "latex") return Format::Latex;
    throw UsageError("unknown --format '" + s + "' (expected json|csv|latex|text)");
}

Rational parse_rational_arg(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

ContextPtr context_from(const Options& o) {
    Rational p = parse_rational_arg("--p", o.p);
    Rational q = parse_rational_arg("--q", o.q);
    if (p.is_zero() || q.is_zero()) throw UsageError("--p and --q must be nonzero");
    return make_context(std::move(p), std::move(q));
}

// "p:q,p:q,..." with rational p and q.
std::vector<ContextSpec> parse_contexts(const std::string& text) {
    std::vector<ContextSpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("--contexts entry '" + item + "' must look like p:q");
        ContextSpec spec{parse_rational_arg("--contexts", item.substr(0, colon)),
                         parse_rational_arg("--contexts", item.substr(colon + 1))};
        if (spec.p.is_zero() || spec.q.is_zero()) throw UsageError("--contexts: p and q must be nonzero");
        out.push_back(std::move(spec));
    }
    if (out.empty()) throw UsageError("--contexts is empty");
    return out;
}

std::string join(const std::vector<Rational>& v, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + r.abs().numerator_str() + "}{" + r.denominator_str() + "}";
}

// ---- numbers

int cmd_numbers(const Options& o, std::ostream& out) {
    if (o.n > 64) throw UsageError("--n must be at most 64 for numbers");
    const ContextPtr ctx = context_from(o);
    const PQContext& c = *ctx;
    const Format fmt = parse_format(o.format);

    struct Row {
        std::size_t n;
        Rational number, factorial, double_factorial;
        std::vector<Rational> binomials;
    };
    std::vector<Row> rows;
    for (std::size_t n = 0; n <= o.n; ++n) {
        Row r{n, c.number(n), c.factorial(n), c.double_factorial(2 * n), {}};
        for (std::size_t k = 0; k <= n; ++k) r.binomials.push_back(c.binomial(n, static_cast<long>(k)));
        rows.push_back(std::move(r));
    }

    switch (fmt) {
        case Format::Json: {
            nlohmann::json j = {{"p", c.p().str()}, {"q", c.q().str()}, {"rows", nlohmann::json::array()}};
            for (const auto& r : rows) {
                nlohmann::json b = nlohmann::json::array();
                for (const auto& v : r.binomials) b.push_back(v.str());
                j["rows"].push_back({{"n", r.n},
                                     {"number", r.number.str()},
                                     {"factorial", r.factorial.str()},
                                     {"double_factorial", r.double_factorial.str()},
                                     {"binomials", b}});
            }
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "n,number,factorial,double_factorial,binomials\n";
            for (const auto& r : rows) {
                out << r.n << "," << r.number << "," << r.factorial << "," << r.double_factorial << ","
                    << join(r.binomials, " ") << "\n";
            }
            break;
        case Format::Latex:
            out << "\\begin{tabular}{rllll}\n"
                << "$n$ & $[n]_{p,q}$ & $[n]_{p,q}!$ & $[2n]_{p,q}!!$ & $\\binom{n}{k}_{p,q}$ \\\\\n\\hline\n";
            for (const auto& r : rows) {
                std::string b;
                for (std::size_t k = 0; k < r.binomials.size(); ++k) b += (k ? ",\\ " : "") + latex_rational(r.binomials[k]);
                out << r.n << " & $" << latex_rational(r.number) << "$ & $" << latex_rational(r.factorial) << "$ & $"
                    << latex_rational(r.double_factorial) << "$ & $" << b << "$ \\\\\n";
            }
            out << "\\end{tabular}\n";
            break;
        case Format::Text:
            out << "# (p,q) = (" << c.p() << ", " << c.q() << ")\n# n: [n], [n]!, [2n]!! | binomials\n";
            for (const auto& r : rows) {
                out << r.n << ": " << r.number << ", " << r.factorial << ", " << r.double_factorial << " | "
                    << join(r.binomials, " ") << "\n";
            }
            break;
    }
    return kExitOk;
}

// ---- family / appell tables

std::string family_symbol(const std::string& name) {
    if (name == "bernoulli") return "\\mathcal{B}";
    if (name == "euler") return "\\mathcal{E}";
    if (name == "genocchi") return "\\mathcal{G}";
    if (name == "hermite") return "H";
    return "f";
}

void emit_sequence(const std::string& name, const AppellSequence& f, std::size_t n_max, Format fmt, std::ostream& out,
                   const char* numbers_label) {
    const PQContext& c = f.context();
    const std::vector<Poly> rows = components(f, n_max);
    std::vector<Rational> numbers(f.coefficients().begin(), f.coefficients().begin() + static_cast<long>(n_max) + 1);

    switch (fmt) {
        case Format::Json: {
            std::vector<io::FamilyRow> fr;
            for (std::size_t n = 0; n <= n_max; ++n) fr.push_back({n, rows[n]});
            nlohmann::json j;
            if (auto kind = parse_family(name)) {
                j = io::family_table_json(*kind, c, fr);
            } else {
                j = {{"expression", name}, {"p", c.p().str()}, {"q", c.q().str()}, {"rows", nlohmann::json::array()}};
                for (const auto& r : fr) j["rows"].push_back({{"n", r.n}, {"poly", io::to_json(r.poly)}});
            }
            j["sequence"] = io::to_json(f);
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "n,number";
            for (std::size_t k = 0; k <= n_max; ++k) out << ",x^" << k;
            out << "\n";
            for (std::size_t n = 0; n <= n_max; ++n) {
                out << n << "," << numbers[n];
                for (std::size_t k = 0; k <= n_max; ++k) out << "," << rows[n].coeff(k);
                out << "\n";
            }
            break;
        case Format::Latex: {
            const std::string sym = family_symbol(name);
            for (std::size_t n = 0; n <= n_max; ++n) {
                out << "\\[ " << sym << "_{" << n << "}(x;p,q) = " << rows[n].latex() << " \\]\n";
            }
            break;
        }
        case Format::Text:
            out << "# " << name << "  (p,q) = (" << c.p() << ", " << c.q() << ")"
                << (f.degenerate() ? "  [degenerate: a_0 = 0]" : "") << "\n";
            out << numbers_label << ": " << join(numbers) << "\n";
            for (std::size_t n = 0; n <= n_max; ++n) out << "f_" << n << "(x) = " << rows[n].str() << "\n";
            break;
    }
}

int cmd_family(const Options& o, std::ostream& out) {
    const auto kind = parse_family(o.family);
    if (!kind) throw UsageError("unknown family '" + o.family + "' (expected bernoulli|euler|genocchi|hermite)");
    const Format fmt = parse_format(o.format);
    const ContextPtr ctx = context_from(o);
    emit_sequence(o.family, family_sequence(*kind, ctx, o.n), o.n, fmt, out, "numbers");
    return kExitOk;
}

int cmd_appell(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const ContextPtr ctx = context_from(o);
    const AppellSequence f = evaluate_appell_expr(o.expr, ctx, o.n);
    emit_sequence(o.expr, f, o.n, fmt, out, "determining coefficients");
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig config;
    config.order = o.order;
    config.samples = o.samples;
    config.seed = o.seed;
    if (!o.contexts.empty()) config.contexts = parse_contexts(o.contexts);
    const Format fmt = parse_format(o.format);
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const SuiteReport report = run_verify_suite(config);
    if (fmt == Format::Json) {
        out << report_json(report).dump(2) << "\n";
    } else {
        out << report_text(report);
    }
    if (!o.report.empty()) {
        std::ofstream file(o.report);
        if (!file) throw std::runtime_error("cannot write report to '" + o.report + "'");
        file << errata_json(report).dump(2) << "\n";
    }
    return report.all_passed() ? kExitOk : kExitInvariantFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact (p,q)-calculus and (p,q)-Appell polynomial sequences", "pqappell"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", o.p, "parameter p, exact rational a/b")->capture_default_str();
    app.add_option("--q", o.q, "parameter q, exact rational a/b")->capture_default_str();
    app.add_option("--n", o.n, "largest index n to emit")->capture_default_str();
    app.add_option("--order", o.order, "series truncation order for verify")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for sampled contexts and random inputs")->capture_default_str();
    app.add_option("--samples", o.samples, "number of sampled (p,q) contexts")->capture_default_str();
    app.add_option("--contexts", o.contexts, "explicit contexts p:q,p:q,... (replaces sampling)");
    app.add_option("--format", o.format, "json|csv|latex|text")->capture_default_str();
    app.add_option("--report", o.report, "write the theorem-audit errata JSON to this path");

    auto* numbers = app.add_subcommand("numbers", "(p,q)-numbers, factorials, double factorials, binomials");
    auto* family = app.add_subcommand("family", "components and numbers of a named family");
    family->add_option("kind", o.family, "bernoulli|euler|genocchi|hermite")->required();
    auto* verify = app.add_subcommand("verify", "run the identity suite and theorem audits");
    auto* appell = app.add_subcommand("appell", "evaluate an expression in the Appell group");
    appell->add_option("expr", o.expr, "e.g. \"bernoulli * inv(bernoulli)\", \"hermite ^ 2\"")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (numbers->parsed()) return cmd_numbers(o, out);
        if (family->parsed()) return cmd_family(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (appell->parsed()) return cmd_appell(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ExprError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pqa::cli
