#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/cli.hpp"

int main(int argc, char** argv) {
    cli::RunSpec spec;
    CLI::App app{"Exact checks for orthogonal oscillator representations of sl(n)"};
    app.set_version_flag("--version", std::string(cli::kToolVersion));

    std::string commands;
    for (const auto& c : cli::commands()) commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", spec.command, "One of: " + commands)->required();
    app.add_option("--n", spec.cfg.n, "rank + 1");
    app.add_option("--n1", spec.cfg.n1);
    app.add_option("--n2", spec.cfg.n2);
    app.add_option("--l1", spec.cfg.l1);
    app.add_option("--l2", spec.cfg.l2);
    app.add_option("--kmax", spec.kmax, "highest filtration level");
    app.add_option("--max-degree", spec.max_degree, "polynomial degree bound");
    app.add_option("--seed", spec.seed, "seed for randomized trials");
    const std::map<std::string, cli::Format> formats{
        {"json", cli::Format::Json}, {"csv", cli::Format::Csv}, {"text", cli::Format::Text}};
    app.add_option("--out", spec.out, "json, csv or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--budget-seconds", spec.budget_seconds, "stop starting new checks after this many seconds");
    app.add_flag("--timing", spec.timing, "include elapsed times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cli::validate(spec);
        auto report = cli::run(spec, [](const std::string& msg) { std::cerr << msg << std::endl; });
        std::cout << cli::serialize(report, spec.out);
        return cli::exit_code(report);
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
