// fltk: Fermat-equation criteria over imaginary quadratic fields.
//
//   fltk check --d -1 --p 5 [--n-max N] [--format text|json]
//   fltk scan  --d -1 --p-max 100 [--n-max N] [--jobs J] --out scan.jsonl
//   fltk wn    --n 8

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "fltk/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Fermat's equation over imaginary quadratic fields: K-regularity and auxiliary-prime criteria"};
    app.require_subcommand(1);

    std::int64_t d = -1;
    std::uint64_t p = 0;
    std::uint64_t p_max = 0;
    std::uint64_t n_max = fltk::kDefaultNMax;
    std::uint64_t n = 0;
    unsigned jobs = 1;
    std::string out_path;
    fltk::OutputFormat format = fltk::OutputFormat::Text;
    const std::map<std::string, fltk::OutputFormat> formats{{"text", fltk::OutputFormat::Text},
                                                            {"json", fltk::OutputFormat::Json}};

    auto* check = app.add_subcommand("check", "decide a single exponent p");
    check->add_option("--d", d, "squarefree d < 0, K = Q(sqrt(d))")->required();
    check->add_option("--p", p, "prime exponent >= 5")->required();
    check->add_option("--n-max", n_max, "largest n tried for q = n p + 1")->capture_default_str();
    check->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* scan = app.add_subcommand("scan", "evaluate every prime 5 <= p <= p-max");
    scan->add_option("--d", d, "squarefree d < 0, K = Q(sqrt(d))")->required();
    scan->add_option("--p-max", p_max, "upper end of the range")->required();
    scan->add_option("--n-max", n_max, "largest n tried for q = n p + 1")->capture_default_str();
    scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    scan->add_option("--out", out_path, "JSON-lines output file")->required();

    auto* wn = app.add_subcommand("wn", "print the exact resultant W_n");
    wn->add_option("--n", n, "1 <= n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : fltk::exit_code::kUsage;
    }

    if (*check) {
        return fltk::cmd_check(d, p, n_max, format, std::cout, std::cerr);
    }
    if (*scan) {
        return fltk::cmd_scan(d, p_max, n_max, jobs, out_path, std::cout, std::cerr);
    }
    return fltk::cmd_wn(n, std::cout, std::cerr);
}
