// Command-line driver: factor, analyze, verify, search.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "conjucode/analysis.hpp"
#include "conjucode/descriptor.hpp"
#include "conjucode/errors.hpp"
#include "conjucode/fixtures.hpp"
#include "conjucode/search.hpp"

#ifndef CONJUCODE_DEFAULT_FIXTURES
#define CONJUCODE_DEFAULT_FIXTURES "data/fixtures.txt"
#endif

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

using namespace conjucode;

int cmd_factor(std::size_t n) {
    const auto& f = factor_xn_plus_1(n);
    std::cout << to_expanded_string(BinPoly::x_n_plus_1(n)) << " = " << to_factored_string(f) << '\n';
    std::cout << "irreducible factors: " << f.size() << '\n';
    const std::size_t count = divisor_count(f);
    std::cout << "divisors: " << (count > kMaxDivisors ? "more than " + std::to_string(kMaxDivisors)
                                                       : std::to_string(count))
              << '\n';
    return kOk;
}

int cmd_analyze(std::size_t n, const std::string& g, const std::string& v, std::size_t max_dim,
                std::uint64_t samples, bool machine) {
    std::string text = "n=" + std::to_string(n) + " " + (g.empty() ? "v=" + v : "g=" + g);
    const Descriptor d = parse_descriptor(text);
    const Analysis a = analyze(d, {.max_dim = max_dim, .samples = samples});
    if (machine)
        std::cout << render_machine(to_record(a)) << '\n';
    else
        std::cout << render_human(a);
    return kOk;
}

int cmd_verify(const std::string& tier_text, const std::string& path, const std::string& filter,
               std::uint64_t samples) {
    const auto tier = parse_tier(tier_text);
    if (!tier) {
        std::cerr << "error: unknown tier '" << tier_text << "'\n";
        return kUsage;
    }
    const auto fixtures = load_fixtures(path);
    const auto summary = verify(fixtures, {.tier = *tier, .filter = filter, .samples = samples}, std::cout);
    if (summary.passed + summary.failed == 0) {
        // An empty selection must not read as success.
        std::cerr << "error: no fixture selected (tier " << tier_name(*tier) << ", filter '" << filter << "')\n";
        return kMismatch;
    }
    return summary.ok() ? kOk : kMismatch;
}

int cmd_search(const SearchOptions& options, bool machine) {
    const auto records = search(options);
    for (const auto& r : records) {
        if (machine) {
            std::cout << render_machine(to_record(r)) << '\n';
        } else {
            std::cout << format_brackets(r.eaqec) << "  trace [" << r.trace.n() << ',' << r.trace.dim() << ','
                      << (r.d.exact() ? std::to_string(r.d.value) : "?") << "]  ACC dim " << r.acc_dim
                      << "  g = " << to_factored_string(r.g)
                      << (is_maximal_entanglement(r.eaqec) ? "  maximal" : "") << '\n';
        }
    }
    if (!machine) std::cout << records.size() << " records\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive conjucyclic codes over GF(4), their trace codes and EAQEC parameters"};
    app.require_subcommand(1);

    std::size_t factor_n = 0;
    auto* factor = app.add_subcommand("factor", "Factor x^n+1 over GF(2)");
    factor->add_option("n", factor_n, "Exponent")->required()->check(CLI::PositiveNumber);

    std::size_t an_n = 0, an_max_dim = kDefaultMaxDim;
    std::uint64_t an_samples = 0;
    std::string an_g, an_v;
    bool an_machine = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one ACC code");
    analyze_cmd->add_option("--n", an_n, "Length over GF(4)")->required()->check(CLI::PositiveNumber);
    auto* g_opt = analyze_cmd->add_option("--g", an_g, "Generator of the binary image, e.g. (1+x)^2*(1+x+x^3)");
    auto* v_opt = analyze_cmd->add_option("--v", an_v, "Generator vector, e.g. W,w,0");
    g_opt->excludes(v_opt);
    analyze_cmd->add_option("--max-dim", an_max_dim, "Largest dimension enumerated exhaustively")
        ->capture_default_str();
    analyze_cmd->add_option("--samples", an_samples, "Random codewords used beyond --max-dim (0 = none)")
        ->capture_default_str();
    analyze_cmd->add_flag("--machine", an_machine, "Single key=value record");

    std::string tier = "fast", fixtures_path = CONJUCODE_DEFAULT_FIXTURES, filter;
    std::uint64_t verify_samples = 1'000'000;
    auto* verify_cmd = app.add_subcommand("verify", "Check the bundled fixtures");
    verify_cmd->add_option("--tier", tier, "fast | dims-only | extended")->capture_default_str();
    verify_cmd->add_option("--fixtures", fixtures_path, "Fixture file")->capture_default_str();
    verify_cmd->add_option("--filter", filter, "Only ids containing this text");
    verify_cmd->add_option("--samples", verify_samples, "Random codewords for distances beyond the bound")
        ->capture_default_str();

    SearchOptions search_opts;
    bool search_machine = false;
    auto* search_cmd = app.add_subcommand("search", "Sweep all divisors of x^{2n}+1");
    search_cmd->add_option("--n", search_opts.n, "Length over GF(4)")->required()->check(CLI::PositiveNumber);
    search_cmd->add_flag("--maximal", search_opts.maximal_only, "Only maximal-entanglement codes");
    search_cmd->add_option("--min-d", search_opts.min_d, "Minimum trace-code distance");
    search_cmd->add_option("--min-k", search_opts.min_k, "Minimum trace-code dimension");
    search_cmd->add_option("--max-dim", search_opts.max_dim, "Largest dimension enumerated exhaustively")
        ->capture_default_str();
    search_cmd->add_flag("--machine", search_machine, "One key=value record per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*factor) return cmd_factor(factor_n);
        if (*analyze_cmd) {
            if (an_g.empty() == an_v.empty()) {
                std::cerr << "error: exactly one of --g and --v is required\n";
                return kUsage;
            }
            return cmd_analyze(an_n, an_g, an_v, an_max_dim, an_samples, an_machine);
        }
        if (*verify_cmd) return cmd_verify(tier, fixtures_path, filter, verify_samples);
        if (*search_cmd) return cmd_search(search_opts, search_machine);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DivisibilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
