// Command-line surface over the coefficient engine: exact coefficients,
// Hurwitz numbers, brute-force path counts, truncated expansions, character
// tables and the self-verification sweep. Output goes to stdout, diagnostics
// to stderr. Exit status: 0 success, 1 computational refusal (caps, poles,
// under-truncation, selftest failure), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/cayley.hpp"
#include "hurwitz/coefficients.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/selftest.hpp"
#include "hurwitz/series.hpp"

namespace {

using nlohmann::json;
using namespace hurwitz;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("malformed integer list: " + text);
        out.push_back(v);
    }
    return out;
}

std::vector<Partition> parse_profiles(const std::string& text) {
    std::vector<Partition> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ';')) out.push_back(Partition::parse(token));
    return out;
}

void emit(const json& payload, const std::string& format) {
    if (format == "csv") {
        if (!payload.is_object() || !std::all_of(payload.begin(), payload.end(), [](auto& v) {
                return v.is_primitive();
            }))
        {
            throw std::invalid_argument("csv output is only available for flat reports");
        }
        std::string header, row;
        for (auto it = payload.begin(); it != payload.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += it.key();
            row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact composite signed Hurwitz numbers and multimonotonic path counts"};
    app.require_subcommand(1);

    std::string mu_text, nu_text, c_text, d_text, profiles_text;
    std::string format = "json";
    std::string cache_dir;
    int brute_cap = kDefaultBruteCap;
    int table_cap = kDefaultTableCap;
    int n_max = 3;
    int caps = 3;
    int n_table = 0;
    std::string scope = "quick";

    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", cache_dir, "Character table cache directory");
    app.add_option("--brute-cap", brute_cap, "Brute-force enumeration cap on n");
    app.add_option("--table-cap", table_cap, "Character table cap on n");

    auto* coeff = app.add_subcommand("coeff", "Expansion coefficient F^c_d(mu, nu)");
    coeff->add_option("--mu", mu_text, "Partition over 0, e.g. 2,1")->required();
    coeff->add_option("--nu", nu_text, "Partition over infinity")->required();
    coeff->add_option("--c", c_text, "Strict colengths c_1,...,c_l");
    coeff->add_option("--d", d_text, "Coloured colength sums d_1,...,d_m");

    auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Frobenius Hurwitz number");
    hurwitz_cmd->add_option("--profiles", profiles_text, "Profiles, e.g. \"2,1;3;1,1,1\"")
        ->required();

    auto* paths = app.add_subcommand("paths", "Brute-force multimonotonic path count");
    paths->add_option("--mu", mu_text)->required();
    paths->add_option("--nu", nu_text)->required();
    paths->add_option("--c", c_text, "Strict band lengths");
    paths->add_option("--d", d_text, "Weak band lengths");

    auto* expand = app.add_subcommand("expand", "Truncated tau expansion tables");
    int expand_l = 0, expand_m = 0;
    expand->add_option("--l", expand_l, "Number of w parameters");
    expand->add_option("--m", expand_m, "Number of z parameters");
    expand->add_option("--n-max", n_max, "Maximum weight");
    expand->add_option("--caps", caps, "Per-variable degree cap on w and z");

    auto* table_cmd = app.add_subcommand("table", "Character table of S_n");
    table_cmd->add_option("--n", n_table, "Symmetric group degree")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
    selftest_cmd->add_option("--scope", scope, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!cache_dir.empty()) setenv("HURWITZ_CACHE_DIR", cache_dir.c_str(), 1);

    try {
        if (coeff->parsed()) {
            CoefficientKey key{Partition::parse(mu_text), Partition::parse(nu_text),
                               parse_int_list(c_text), parse_int_list(d_text)};
            key.validate();
            Rational f = f_coefficient(key);
            Rational scaled = Rational(factorial(key.mu.weight())) * f;
            Integer nf;
            if (!as_integer(scaled, nf))
                throw std::logic_error("n! * F is not an integer: " + to_string(scaled));
            json out;
            out["F"] = to_string(f);
            out["nF"] = nf.str();
            out["genus2"] = double_genus(key);
            emit(out, format);
        } else if (hurwitz_cmd->parsed()) {
            auto profiles = parse_profiles(profiles_text);
            json out;
            out["H"] = to_string(frobenius_hurwitz(profiles, 0));
            emit(out, format);
        } else if (paths->parsed()) {
            Partition mu = Partition::parse(mu_text), nu = Partition::parse(nu_text);
            auto spec = BandSpec::from_key(parse_int_list(c_text), parse_int_list(d_text));
            json out;
            out["count"] = count_monotone_pairs(mu, nu, spec, brute_cap);
            emit(out, format);
        } else if (expand->parsed()) {
            auto tables = tau_expand(expand_l, expand_m, n_max, caps);
            json out = json::array();
            for (auto& t : tables) out.push_back(power_sum_table_to_json(t));
            emit(out, format);
        } else if (table_cmd->parsed()) {
            const auto& table = character_table(n_table, table_cap);
            json out;
            out["version"] = 1;
            out["n"] = table.n();
            std::vector<std::string> names;
            for (auto& p : table.partitions()) names.push_back(p.to_string());
            out["partitions"] = names;
            out["table"] = table.entries();
            emit(out, format);
        } else if (selftest_cmd->parsed()) {
            auto results =
                run_selftest(scope == "full" ? SelftestScope::full : SelftestScope::quick);
            json out = json::array();
            bool all_passed = true;
            for (auto& r : results) {
                json row;
                row["suite"] = r.name;
                row["instances"] = r.instances;
                row["failures"] = r.failures;
                row["passed"] = r.passed();
                if (!r.first_counterexample.empty())
                    row["counterexample"] = r.first_counterexample;
                out.push_back(row);
                all_passed = all_passed && r.passed();
                std::cerr << (r.passed() ? "pass " : "FAIL ") << r.name << " ("
                          << r.instances << " instances)\n";
            }
            emit(out, format);
            return all_passed ? 0 : 1;
        }
    } catch (const CapExceededError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const SingularParameterError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const UnderTruncationError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
