#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nikulin/errors.hpp"
#include "nikulin/report.hpp"

namespace {

constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pell-Fermat classification and Nikulin configuration checks for Kummer surfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    std::int64_t max_2t = 60;
    auto* table = app.add_subcommand("table", "Fundamental solutions for even 2t up to a bound");
    table->add_option("--max-2t", max_2t, "Largest 2t (even)")->capture_default_str();

    std::int64_t t = 0;
    auto* classify = app.add_subcommand("classify", "Arithmetic case and sub-case of one t");
    classify->add_option("t", t, "Polarization parameter")->required();

    std::string range;
    auto* scan = app.add_subcommand("scan", "Classification rows and lemma checks over a range of t");
    scan->add_option("--range", range, "A..B")->required();

    auto* construct = app.add_subcommand("construct", "Explicit classes and configurations for one t");
    construct->add_option("t", t, "Polarization parameter")->required();

    std::optional<std::int64_t> verify_t;
    std::string claim;
    std::uint64_t bound = 1'000'000;
    auto* verify = app.add_subcommand("verify", "Run one verifier");
    verify->add_option("t", verify_t, "Polarization parameter");
    verify->add_option("--claim", claim, "Claim id")->required();
    verify->add_option("--bound", bound, "Enumeration node cap")->capture_default_str();

    for (auto* sub : {table, classify, scan, construct, verify}) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        const nikulin::Format fmt = nikulin::parse_format(format);
        nikulin::CommandOutput out;
        if (*table) {
            out = nikulin::cmd_table(max_2t, fmt);
        } else if (*classify) {
            out = nikulin::cmd_classify(t, fmt);
        } else if (*scan) {
            const auto [a, b] = nikulin::parse_range(range);
            out = nikulin::cmd_scan(a, b, fmt);
        } else if (*construct) {
            out = nikulin::cmd_construct(t, fmt);
        } else {
            out = nikulin::cmd_verify(verify_t, claim, bound, fmt);
        }
        std::cout << out.text;
        return out.exit_code;
    } catch (const nikulin::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const nikulin::BoundOverflow& e) {
        std::cerr << "bound error: " << e.what() << "\n";
    } catch (const nikulin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    }
    return kUsage;
}
