// wrightkit: command-line front end for the Wright function toolkit.
//
//   wrightkit eval      --a -1/2 --b 1 --z 1 [--tol 1e-12] [--route auto|series|decomposition|reference]
//   wrightkit decompose --a 1/3 --b 1/2 [--format text|json]
//   wrightkit table     --a -1/3 --b 2/3 --zmin -5 --zmax 5 --steps 101 [--out file.csv]
//   wrightkit reduce    --a -2 --b 3 [--format text|json]
//   wrightkit verify    --suite all [--tol 1e-9] [--out report.json]
//
// Exit status: 0 ok, 1 verification failures, 2 domain error, 3 convergence error, 64 usage error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wrightkit/wrightkit.hpp"

namespace wk = wrightkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitUsage = 64;

std::string fmt16(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

wk::Rational parse_param(const std::string& text, const char* name) {
    try {
        return wk::parse_rational(text);
    } catch (const wk::Error& e) {
        throw wk::UsageError(std::string("--") + name + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wk::UsageError("cannot open '" + path + "' for writing");
    out << payload;
}

double eval_route(const std::string& route, const wk::Rational& a, const wk::Rational& b, double z, double tol) {
    if (route == "auto") return wk::wright(a, b, z, tol);
    if (route == "series") return wk::wright_series(a, b, z, std::min(tol, 1e-14));
    if (route == "decomposition") return wk::eval_decomposition(wk::decompose(a, b), z, tol);
    if (route == "reference") {
        const wk::ReferenceCase* rc = wk::find_reference_case(a, b);
        if (!rc) throw wk::DomainError("no closed form for a = " + a.str() + ", b = " + b.str());
        return wk::reference_eval(rc->id, rc->arg_sign * z);
    }
    throw wk::UsageError("unknown route '" + route + "'");
}

std::string table_csv(const wk::Rational& a, const wk::Rational& b, double zmin, double zmax, int steps, double tol) {
    std::string out = "z,W\n";
    std::string failures;
    for (int i = 0; i < steps; ++i) {
        const double z = i == steps - 1 ? zmax : zmin + (zmax - zmin) * i / (steps - 1);
        out += fmt16(z) + ",";
        try {
            out += fmt16(wk::wright(a, b, z, tol));
        } catch (const wk::Error& e) {
            failures += (failures.empty() ? "" : "; ") + ("z=" + fmt16(z) + ": " + e.what());
        }
        out += "\n";
    }
    if (!failures.empty()) out += "# failures: " + failures + "\n";
    return out;
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wright function W(a, b | z) toolkit"};
    app.require_subcommand(1);

    std::string a_text, b_text, route = "auto", format = "text", suite = "all", out_path;
    double z = 0.0, tol = 1e-12, zmin = 0.0, zmax = 0.0;
    std::optional<double> verify_tol;
    int steps = 0;

    auto add_ab = [&](CLI::App* sub) {
        sub->add_option("--a", a_text, "rational a, \"p\" or \"p/q\"")->required();
        sub->add_option("--b", b_text, "rational b, \"p\" or \"p/q\"")->required();
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate W(a, b | z)");
    add_ab(eval);
    eval->add_option("--z", z, "real argument")->required();
    eval->add_option("--tol", tol, "relative tolerance")->capture_default_str();
    eval->add_option("--route", route, "evaluation route")
        ->check(CLI::IsMember({"auto", "series", "decomposition", "reference"}))
        ->capture_default_str();

    CLI::App* decompose = app.add_subcommand("decompose", "print the hypergeometric decomposition");
    add_ab(decompose);
    decompose->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    CLI::App* table = app.add_subcommand("table", "tabulate W on a uniform z grid as CSV");
    add_ab(table);
    table->add_option("--zmin", zmin)->required();
    table->add_option("--zmax", zmax)->required();
    table->add_option("--steps", steps)->required();
    table->add_option("--tol", tol)->capture_default_str();
    table->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* reduce = app.add_subcommand("reduce", "polynomial form for negative integer a");
    add_ab(reduce);
    reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    verify->add_option("--suite", suite)->capture_default_str();
    verify->add_option("--tol", verify_tol, "route-comparison tolerance");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) {
            const wk::Rational a = parse_param(a_text, "a"), b = parse_param(b_text, "b");
            if (!(tol > 0.0)) throw wk::UsageError("--tol must be positive");
            std::cout << fmt16(eval_route(route, a, b, z, tol)) << "\n";
        } else if (*decompose) {
            const wk::Decomposition d = wk::decompose(parse_param(a_text, "a"), parse_param(b_text, "b"));
            if (format == "json")
                std::cout << wk::to_json(d).dump() << "\n";
            else
                std::cout << wk::render_text(d);
        } else if (*table) {
            const wk::Rational a = parse_param(a_text, "a"), b = parse_param(b_text, "b");
            if (steps < 2) throw wk::UsageError("--steps must be at least 2");
            if (!(zmin < zmax)) throw wk::UsageError("--zmin must be below --zmax");
            if (wk::classify(a, b).kind == wk::WrightKind::Unsupported)
                throw wk::DomainError(wk::unsupported_reason(wk::classify(a, b)));
            write_output(out_path, table_csv(a, b, zmin, zmax, steps, tol));
        } else if (*reduce) {
            const wk::QPolynomial p = wk::bell_reduce(parse_param(a_text, "a"), parse_param(b_text, "b"));
            if (format == "json")
                std::cout << wk::to_json(p).dump() << "\n";
            else
                std::cout << p.str() << "\n";
        } else if (*verify) {
            const wk::VerifyReport report = wk::run_suite(suite, verify_tol);
            const wk::ordered_json envelope = {{"generated_at", timestamp()}, {"report", wk::to_json(report)}};
            write_output(out_path, envelope.dump(2) + "\n");
            const wk::VerifySummary s = report.summary();
            std::cerr << "suite " << suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
                      << " skipped\n";
            return s.failed > 0 ? kExitFailed : kExitOk;
        }
    } catch (const wk::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wk::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const wk::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
