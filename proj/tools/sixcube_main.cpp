// Command-line front end: problem files in, curves/points/identities out.
// All arithmetic is exact; no floating point anywhere.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 mathematical degeneracy (zero denominator / non-square constant /
// singular curve).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sixcube/oracle.hpp"
#include "sixcube/pipeline.hpp"
#include "sixcube/problem_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDegenerate = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sixcube::ParseError("input", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sixcube::Problem load_problem(const std::string& path) {
    return sixcube::parse_problem(read_file(path));
}

void print_quartic(const sixcube::QuarticModel& model) {
    std::cout << "A4=" << model.A4 << "\n"
              << "A3=" << model.A3 << "\n"
              << "A2=" << model.A2 << "\n"
              << "A1=" << model.A1 << "\n"
              << "constant=" << model.constant() << "\n"
              << "q=" << model.q << "\n";
}

int cmd_build(const std::string& input) {
    const auto problem = load_problem(input);
    try {
        print_quartic(sixcube::build_quartic(problem.family, problem.par));
    } catch (const sixcube::NotASquare& e) {
        std::cout << "NotASquare L=" << e.value() << "\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

int cmd_transform(const std::string& input) {
    const auto problem = load_problem(input);
    const auto model = sixcube::build_quartic(problem.family, problem.par);
    const auto ctx = sixcube::to_weierstrass(model);
    std::cout << "a1=" << ctx.curve.a1 << "\n"
              << "a2=" << ctx.curve.a2 << "\n"
              << "a3=" << ctx.curve.a3 << "\n"
              << "a4=" << ctx.curve.a4 << "\n"
              << "a6=" << ctx.curve.a6 << "\n"
              << "discriminant=" << ctx.discriminant << "\n";
    return kExitOk;
}

int cmd_search_h(const std::string& input, long bound) {
    const auto problem = load_problem(input);
    const auto found =
        sixcube::search_h(problem.family, problem.par.B, problem.par.C, problem.par.D, bound);
    for (const auto& cand : found)
        std::cout << "h=" << cand.h << " q=" << cand.model.q << "\n";
    return kExitOk;
}

int cmd_points(const std::string& input, long bound) {
    const auto problem = load_problem(input);
    const auto ctx = sixcube::to_weierstrass(sixcube::build_quartic(problem.family, problem.par));
    for (const auto& P : sixcube::point_search(ctx, bound)) std::cout << P << "\n";
    return kExitOk;
}

std::string solution_field(const sixcube::IntegerSolution& sol) {
    std::ostringstream os;
    auto group = [&](const std::vector<sixcube::Integer>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) os << ",";
            os << values[i];
        }
    };
    group(sol.x);
    os << ";";
    group(sol.y);
    os << ";";
    group(sol.X);
    os << ";";
    group(sol.Y);
    return os.str();
}

int cmd_solve(const std::string& input, long nmax_override, bool combine, bool keep_trivial,
              bool primitive, long search_bound) {
    auto problem = load_problem(input);
    const auto ctx = sixcube::to_weierstrass(sixcube::build_quartic(problem.family, problem.par));

    std::vector<sixcube::CurvePoint> generators = problem.generators;
    if (generators.empty()) {
        generators = sixcube::point_search(ctx, search_bound);
        std::cout << "# generators: point_search(bound=" << search_bound << "), found "
                  << generators.size() << "\n";
    } else {
        std::cout << "# generators: user-supplied, " << generators.size() << "\n";
    }

    sixcube::GenerateOptions options;
    options.nmax = nmax_override > 0 ? nmax_override : problem.nmax;
    options.combine = combine;
    options.keep_trivial = keep_trivial;
    options.primitive = primitive;

    sixcube::generate(problem.family, problem.par, ctx, generators, options,
                      [&](const sixcube::Emission& e) {
                          std::cout << "k=" << e.coeffs_string() << "  P=" << e.point
                                    << "  t=" << e.solution.scale
                                    << "  sol=" << solution_field(e.solution) << "  "
                                    << e.identity << "\n";
                      });
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution_text) {
    const auto problem = load_problem(input);
    const auto sol = sixcube::parse_solution(solution_text, problem.family);
    const auto r = sixcube::residual(problem.family, sol);
    if (r.is_zero()) {
        std::cout << "OK residual=0\n";
        return kExitOk;
    }
    std::cout << "FAIL residual=" << r << "\n";
    return kExitVerifyFailed;
}

int cmd_oracle(const std::string& input, long sextic_bound, long cubic_bound) {
    const auto problem = load_problem(input);
    for (const auto& sol : sixcube::brute_force(problem.family, sextic_bound, cubic_bound))
        std::cout << "sol=" << solution_field(sol) << "  "
                  << sixcube::display_identity(problem.family, sol) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for sum a_i x_i^6 + sum b_i y_i^3 = sum a_i X_i^6 +/- sum b_i Y_i^3"};
    app.require_subcommand(1);

    std::string input;
    long bound = 8;
    long nmax = 0;
    bool combine = false, keep_trivial = false, primitive = false;
    long search_bound = 8;
    std::string solution_text;
    long sextic_bound = 4, cubic_bound = 13;

    auto* build = app.add_subcommand("build", "build the quartic model and its square constant");
    build->add_option("--input", input, "problem file (JSON)")->required();

    auto* transform = app.add_subcommand("transform", "derive the Weierstrass curve");
    transform->add_option("--input", input, "problem file (JSON)")->required();

    auto* searchh = app.add_subcommand("search-h", "find h values whose constant is a square");
    searchh->add_option("--input", input, "problem file (JSON)")->required();
    searchh->add_option("--bound", bound, "height bound for h = p/s")->required();

    auto* points = app.add_subcommand("points", "search the quartic for rational points");
    points->add_option("--input", input, "problem file (JSON)")->required();
    points->add_option("--bound", bound, "height bound for u = p/s")->required();

    auto* solve = app.add_subcommand("solve", "stream verified integer identities");
    solve->add_option("--input", input, "problem file (JSON)")->required();
    solve->add_option("--nmax", nmax, "multiples per generator (overrides the file)")
        ->check(CLI::PositiveNumber);
    solve->add_flag("--combine", combine, "also emit k1*P_i + k2*P_j combinations");
    solve->add_flag("--keep-trivial", keep_trivial, "emit termwise-cancelling solutions too");
    solve->add_flag("--primitive", primitive, "divide out common t^6 content");
    solve->add_option("--search-bound", search_bound,
                      "point_search bound when the file has no generators");

    auto* verify = app.add_subcommand("verify", "check a solution tuple exactly");
    verify->add_option("--input", input, "problem file (JSON)")->required();
    verify->add_option("--solution", solution_text, "tuple \"x;y;X;Y\" (',' within groups)")
        ->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force solutions in a box");
    oracle->add_option("--input", input, "problem file (JSON)")->required();
    oracle->add_option("--sextic-bound", sextic_bound, "bound on |x_i|, |X_i|")->required();
    oracle->add_option("--cubic-bound", cubic_bound, "bound on |y_i|, |Y_i|")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (build->parsed()) return cmd_build(input);
        if (transform->parsed()) return cmd_transform(input);
        if (searchh->parsed()) return cmd_search_h(input, bound);
        if (points->parsed()) return cmd_points(input, bound);
        if (solve->parsed())
            return cmd_solve(input, nmax, combine, keep_trivial, primitive, search_bound);
        if (verify->parsed()) return cmd_verify(input, solution_text);
        if (oracle->parsed()) return cmd_oracle(input, sextic_bound, cubic_bound);
    } catch (const sixcube::NotASquare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const sixcube::ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const sixcube::DegenerateH& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const sixcube::SingularCurve& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const sixcube::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
