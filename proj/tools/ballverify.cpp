// ballverify: runs the exact identity suites and writes a JSON Lines report,
// or exports one degree of a ball basis.
//
//   ballverify run --dim 2 --mu 1/2 --lambda 1/4 --max-degree 4 --suites all
//   ballverify --dim 2 --lambda 1/2 --export-basis 2,lambda --out basis.json
//
// Exit status: 0 all checks pass, 1 some check failed, 2 bad configuration.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <ballkrall/verify.hpp>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

ballkrall::Rational rational_arg(const std::string& flag, const std::string& text) {
    try {
        return ballkrall::parse_rational(text);
    } catch (const std::exception&) {
        throw ballkrall::ConfigError(flag + ": not a rational number: '" + text + "'");
    }
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of orthogonal bases on the unit ball"};
    app.set_version_flag("--version", "ballverify 0.1.0");

    std::size_t dim = 2;
    std::string mu = "1/2", lambda, M, suites = "all", out_path, export_spec, corrupt;
    unsigned max_degree = 4;
    std::uint64_t seed = 0;
    bool timing = false;

    app.add_option("--dim", dim, "number of variables d (>= 2)");
    app.add_option("--mu", mu, "ball weight exponent mu as p/q (> -1/2)");
    auto* lambda_opt = app.add_option("--lambda", lambda, "sphere mass lambda as p/q (> 0)");
    app.add_option("--M", M, "M = d/(2 lambda); give this or --lambda")->excludes(lambda_opt);
    app.add_option("--max-degree", max_degree, "highest total degree checked");
    app.add_option("--suites", suites, "comma list of suites, or all");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--export-basis", export_spec, "export one basis degree instead: n,classical|lambda");
    app.add_flag("--timing", timing, "add elapsed_ms to every record (breaks determinism)");
    // Test hook; shifts every fourth-order eigenvalue by the given amount.
    app.add_option("--corrupt-eigenvalue", corrupt)->group("");
    app.add_subcommand("run", "run the verification suites (the default)")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    ballkrall::SuiteConfig config;
    try {
        config.dim = dim;
        config.mu = rational_arg("--mu", mu);
        if (!lambda.empty()) config.lambda = rational_arg("--lambda", lambda);
        if (!M.empty()) config.M = rational_arg("--M", M);
        config.max_degree = max_degree;
        config.suites = ballkrall::parse_suite_list(suites);
        config.seed = seed;
        config.timing = timing;
        if (!corrupt.empty()) config.corrupt_eigenvalue = rational_arg("--corrupt-eigenvalue", corrupt);
        config.resolve();
    } catch (const std::exception& e) {
        std::cerr << "ballverify: " << e.what() << "\n";
        return kExitConfig;
    }

    if (!export_spec.empty()) {
        const auto comma = export_spec.find(',');
        std::string kind = comma == std::string::npos ? "" : export_spec.substr(comma + 1);
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(export_spec.substr(0, comma)));
        } catch (const std::exception&) {
            kind.clear();
        }
        if (kind != "classical" && kind != "lambda") {
            std::cerr << "ballverify: --export-basis expects n,classical or n,lambda\n";
            return kExitConfig;
        }
        try {
            const auto json = ballkrall::export_basis(
                config, n,
                kind == "lambda" ? ballkrall::BasisKind::lambda_modified
                                 : ballkrall::BasisKind::classical);
            if (!write_output(out_path, json.dump(2) + "\n")) {
                std::cerr << "ballverify: cannot write " << out_path << "\n";
                return kExitConfig;
            }
        } catch (const ballkrall::UnsupportedExact& e) {
            std::cerr << "ballverify: unsupported exact path: " << e.what() << "\n";
            return kExitConfig;
        }
        return 0;
    }

    const ballkrall::Report report = ballkrall::run(config);
    if (!write_output(out_path, ballkrall::to_jsonl(report))) {
        std::cerr << "ballverify: cannot write " << out_path << "\n";
        return kExitConfig;
    }
    std::cerr << "ballverify: " << report.summary.total << " checks, " << report.summary.passed
              << " passed, " << report.summary.failed << " failed, " << report.summary.skipped
              << " skipped\n";
    return report.all_passed() ? 0 : kExitFail;
}
