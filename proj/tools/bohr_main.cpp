#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "bohr/json_io.hpp"

namespace {

using namespace bohr;
using nlohmann::json;

// Exit codes: 0 success, 2 invalid parameters, 3 no root found,
// 4 unwritable output, 5 a checked property failed.
enum ExitCode { kOk = 0, kBadParams = 2, kNoRoot = 3, kBadOutput = 4, kPropertyFailed = 5 };

FunctionalKind::Tag tag_from(const std::string& name) {
    if (name == "majorant") return FunctionalKind::Tag::majorant;
    if (name == "zero-omitted") return FunctionalKind::Tag::zero_omitted_sum;
    if (name == "rogosinski") return FunctionalKind::Tag::rogosinski_sum;
    if (name == "bohr-rogosinski-i") return FunctionalKind::Tag::bohr_rogosinski_i;
    if (name == "refined-j") return FunctionalKind::Tag::refined_j;
    if (name == "refined-l") return FunctionalKind::Tag::refined_l;
    if (name == "refined-a") return FunctionalKind::Tag::refined_a;
    throw std::invalid_argument("unknown functional: " + name);
}

ClosedForm::Kind closed_kind_from(const std::string& name) {
    if (name == "bohr-third") return ClosedForm::Kind::bohr_third;
    if (name == "bombieri") return ClosedForm::Kind::bombieri;
    if (name == "refined-three-fifths") return ClosedForm::Kind::refined_three_fifths;
    if (name == "rogosinski") return ClosedForm::Kind::rogosinski;
    if (name == "power-p") return ClosedForm::Kind::power_p;
    throw std::invalid_argument("unknown closed form: " + name);
}

TheoremCheck::Kind theorem_from(const std::string& token) {
    if (token == "2.1" || token == "majorant") return TheoremCheck::Kind::majorant;
    if (token == "2.2" || token == "zero-omitted") return TheoremCheck::Kind::zero_omitted;
    if (token == "2.3" || token == "bohr-rogosinski") return TheoremCheck::Kind::bohr_rogosinski;
    if (token == "2.4" || token == "refined") return TheoremCheck::Kind::refined_bohr_rogosinski;
    if (token == "2.5" || token == "zero-coeff") return TheoremCheck::Kind::refined_zero_coeff;
    throw std::invalid_argument("unknown theorem selector: " + token);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct RadiusArgs {
    std::string family;
    std::string which = "bohr-third";
    double p = 1.0;
    double a = 0.5;
    int k = 1;
    int n = 1;
    int m0 = 1;
    double tol = 1e-10;
};

int cmd_radius(const RadiusArgs& args) {
    RadiusProblem prob = YEquation{1.0};
    if (args.family == "y") {
        prob = YEquation{args.p, args.k, args.n, args.m0};
    } else if (args.family == "rn") {
        prob = RNEquation{args.n};
    } else if (args.family == "rnprime") {
        prob = RNPrimeEquation{args.n};
    } else if (args.family == "rap") {
        prob = RapEquation{args.a, args.p};
    } else if (args.family == "closed") {
        prob = ClosedForm{closed_kind_from(args.which), args.k, args.p};
    } else {
        throw std::invalid_argument("unknown family: " + args.family);
    }
    print_json(json(solve_radius(prob, args.tol)));
    return kOk;
}

int cmd_table1(const std::string& format, double tol) {
    const std::vector<Table1Row> rows = table1(tol);
    if (format == "json") {
        print_json(json(rows));
        return kOk;
    }
    std::printf("k,m0,N,p,root\n");
    for (const auto& row : rows)
        std::printf("%d,%d,%d,%.9g,%.9g\n", row.k, row.m0, row.N, row.p, row.root);
    return kOk;
}

int cmd_figure1(int grid, const std::string& out) {
    const auto points = figure1_data(table1_problems(), grid);
    std::ofstream file;
    if (!out.empty() && out != "-") {
        file.open(out);
        if (!file) {
            std::fprintf(stderr, "cannot write to %s\n", out.c_str());
            return kBadOutput;
        }
    }
    std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    os << "label,r,y\n";
    char line[256];
    for (const auto& pt : points) {
        std::snprintf(line, sizeof(line), "%s,%.9g,%.9g\n", pt.label.c_str(), pt.r, pt.y);
        os << line;
    }
    os.flush();
    if (file.is_open() && !file) {
        std::fprintf(stderr, "write to %s failed\n", out.c_str());
        return kBadOutput;
    }
    return kOk;
}

struct VerifyArgs {
    std::string functional;
    int k = 1;
    int m0 = 1;
    int n = 1;
    double p = 1.0;
    long trials = 10000;
    std::uint64_t seed = 0;
    double margin = 1e-3;
    int truncation = 64;
    int threads = 1;
    std::string format = "json";
};

int cmd_verify(const VerifyArgs& args) {
    VerificationConfig cfg;
    cfg.functional = make_kind(tag_from(args.functional), args.p, args.n);
    cfg.k = args.k;
    cfg.m0 = args.m0;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.margin = args.margin;
    cfg.truncation = args.truncation;
    const VerificationReport report = run_trials(cfg, args.threads);
    if (args.format == "json") {
        print_json(json(report));
    } else {
        std::printf("trials_run,max_value,violations,seed\n");
        std::printf("%ld,%.9g,%zu,%llu\n", report.trials_run, report.max_value,
                    report.violations.size(), static_cast<unsigned long long>(report.seed));
    }
    return report.violations.empty() ? kOk : kPropertyFailed;
}

struct SharpnessArgs {
    std::string functional;
    int k = 1;
    int m0 = 1;
    int n = 1;
    double p = 1.0;
    double probe_offset = 0.01;
    double a_step = 1e-4;
    int truncation = 64;
};

int cmd_sharpness(const SharpnessArgs& args) {
    const FunctionalKind kind = make_kind(tag_from(args.functional), args.p, args.n);
    const RadiusProblem prob = canonical_problem(kind, args.k, args.m0);
    const auto witness = find_witness(kind, prob, args.probe_offset, args.a_step, args.truncation);
    json j;
    if (witness) {
        j = json(*witness);
        j["found"] = true;
    } else {
        j = json{{"found", false}, {"radius", solve_radius(prob).root}};
    }
    print_json(j);
    const bool expect_witness = args.probe_offset > 0.0;
    return witness.has_value() == expect_witness ? kOk : kPropertyFailed;
}

struct MultidimArgs {
    int n = 2;
    std::string theorem;
    int k = 1;
    long lines = 1000;
    std::uint64_t seed = 0;
    double margin = 1e-3;
    double p = 1.0;
    int series_n = 1;
    int m0 = 1;
    double a = 0.9;
    std::string format = "json";
};

int cmd_multidim(const MultidimArgs& args) {
    TheoremCheck thm;
    thm.kind = theorem_from(args.theorem);
    thm.p = args.p;
    thm.N = args.series_n;
    thm.m0 = args.m0;

    const bool zero_constant = thm.kind == TheoremCheck::Kind::zero_omitted ||
                               thm.kind == TheoremCheck::Kind::refined_zero_coeff;
    const BoundedFunction f = zero_constant ? BoundedFunction::extremal_fa_star(args.a)
                                            : BoundedFunction::extremal_fa(args.a);
    const double w = 1.0 / args.n;
    const LineDirection b = LineDirection::raw(std::vector<Complex>(static_cast<size_t>(args.n), Complex{w, 0.0}));
    const HomogeneousExpansion e = compose_line(f, b, args.k);

    const VerificationReport report = verify_theorem(e, thm, args.k, args.lines, args.seed, args.margin);
    if (args.format == "json") {
        print_json(json(report));
    } else {
        std::printf("lines,max_value,violations,seed\n");
        std::printf("%ld,%.9g,%zu,%llu\n", report.trials_run, report.max_value,
                    report.violations.size(), static_cast<unsigned long long>(report.seed));
    }
    return report.violations.empty() ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp Bohr-type radii: certified roots, inequality checks, sharpness witnesses"};
    app.require_subcommand(1);

    RadiusArgs radius_args;
    auto* radius = app.add_subcommand("radius", "Solve one radius equation");
    radius->add_option("--family", radius_args.family, "Equation family")
        ->required()
        ->check(CLI::IsMember({"y", "rn", "rnprime", "rap", "closed"}));
    radius->add_option("--which", radius_args.which, "Closed form name")
        ->check(CLI::IsMember({"bohr-third", "bombieri", "refined-three-fifths", "rogosinski", "power-p"}));
    radius->add_option("--p", radius_args.p, "Exponent p");
    radius->add_option("--a", radius_args.a, "Center modulus a");
    radius->add_option("--k", radius_args.k, "Schwarz order k");
    radius->add_option("--n", radius_args.n, "Series start index N");
    radius->add_option("--m0", radius_args.m0, "First-map order m0");
    radius->add_option("--tol", radius_args.tol, "Bisection tolerance");

    std::string table1_format = "csv";
    double table1_tol = 1e-10;
    auto* table1_cmd = app.add_subcommand("table1", "Print the bundled reference radii");
    table1_cmd->add_option("--format", table1_format)->check(CLI::IsMember({"csv", "json"}));
    table1_cmd->add_option("--tol", table1_tol, "Bisection tolerance");

    int figure1_grid = 200;
    std::string figure1_out = "-";
    auto* figure1_cmd = app.add_subcommand("figure1", "Sample the radius equations on an r-grid (CSV)");
    figure1_cmd->add_option("--grid", figure1_grid, "Grid cells")->check(CLI::Range(2, 100000000));
    figure1_cmd->add_option("--out", figure1_out, "Output path or - for stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Monte-Carlo check that a functional stays <= 1 below its radius");
    verify->add_option("--functional", verify_args.functional)
        ->required()
        ->check(CLI::IsMember({"majorant", "zero-omitted", "rogosinski", "bohr-rogosinski-i",
                               "refined-j", "refined-l", "refined-a"}));
    verify->add_option("--k", verify_args.k, "Schwarz order k");
    verify->add_option("--m0", verify_args.m0, "First-map order m0");
    verify->add_option("--n", verify_args.n, "Series start index N");
    verify->add_option("--p", verify_args.p, "Exponent p");
    verify->add_option("--trials", verify_args.trials)->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed)->envname("BOHR_SEED");
    verify->add_option("--margin", verify_args.margin, "Distance below the radius");
    verify->add_option("--truncation", verify_args.truncation, "Series truncation order");
    verify->add_option("--threads", verify_args.threads)->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"csv", "json"}));

    SharpnessArgs sharp_args;
    auto* sharp = app.add_subcommand("sharpness", "Search the extremal family for a value above 1 near the radius");
    sharp->add_option("--functional", sharp_args.functional)
        ->required()
        ->check(CLI::IsMember({"majorant", "zero-omitted", "rogosinski", "bohr-rogosinski-i",
                               "refined-j", "refined-l", "refined-a"}));
    sharp->add_option("--k", sharp_args.k, "Schwarz order k");
    sharp->add_option("--m0", sharp_args.m0, "First-map order m0");
    sharp->add_option("--n", sharp_args.n, "Series start index N");
    sharp->add_option("--p", sharp_args.p, "Exponent p");
    sharp->add_option("--probe-offset", sharp_args.probe_offset, "Probe distance from the radius");
    sharp->add_option("--a-step", sharp_args.a_step, "Extremal parameter grid step");
    sharp->add_option("--truncation", sharp_args.truncation, "Series truncation order");

    MultidimArgs multi_args;
    auto* multi = app.add_subcommand("multidim", "Check a homothety bound along random complex lines");
    multi->add_option("--n", multi_args.n, "Number of variables")->check(CLI::Range(1, 16));
    multi->add_option("--theorem", multi_args.theorem,
                      "Bound selector: majorant|zero-omitted|bohr-rogosinski|refined|zero-coeff "
                      "(shorthands 2.1..2.5)")
        ->required();
    multi->add_option("--k", multi_args.k, "Schwarz order k");
    multi->add_option("--lines", multi_args.lines)->check(CLI::PositiveNumber);
    multi->add_option("--seed", multi_args.seed)->envname("BOHR_SEED");
    multi->add_option("--margin", multi_args.margin, "Distance below the homothety radius");
    multi->add_option("--p", multi_args.p, "Exponent p");
    multi->add_option("--series-n", multi_args.series_n, "Series start index N");
    multi->add_option("--m0", multi_args.m0, "First-map order m0");
    multi->add_option("--a", multi_args.a, "Extremal parameter of the composed function");
    multi->add_option("--format", multi_args.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadParams;
    }

    try {
        if (radius->parsed()) return cmd_radius(radius_args);
        if (table1_cmd->parsed()) return cmd_table1(table1_format, table1_tol);
        if (figure1_cmd->parsed()) return cmd_figure1(figure1_grid, figure1_out);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (sharp->parsed()) return cmd_sharpness(sharp_args);
        if (multi->parsed()) return cmd_multidim(multi_args);
    } catch (const NoRootFound& e) {
        std::fprintf(stderr, "no root: %s\n", e.what());
        return kNoRoot;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid parameters: %s\n", e.what());
        return kBadParams;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadParams;
    }
    return kBadParams;
}
