// Command-line front end: analyze relation files, run the factorization
// checks and solvers, and drive the randomized verification harness.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "linrel/factorization.hpp"
#include "linrel/format.hpp"
#include "linrel/verify.hpp"

using namespace linrel;

namespace {

LinearRelation load_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_relation(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

int run_analyze(const std::string& path) {
    LinearRelation r = load_relation(path);
    std::cout << "field " << r.field().name() << "\n"
              << "dims " << r.dom_dim() << " " << r.cod_dim() << "\n"
              << "dim graph " << r.graph().dim() << "\n"
              << "dim dom " << r.dom().dim() << "\n"
              << "dim ran " << r.ran().dim() << "\n"
              << "dim ker " << r.ker().dim() << "\n"
              << "dim mul " << r.mul().dim() << "\n"
              << "operator " << (r.is_operator() ? "yes" : "no") << "\n"
              << "injective " << (r.is_injective_operator() ? "yes" : "no") << "\n";
    return 0;
}

DecisionReport candidate_report(const std::string& problem, const LinearRelation& a,
                                const LinearRelation& b, const LinearRelation& c) {
    if (problem == "right-relation")
        return make_report("t1 candidate", {{"A contained in BC", contains(compose(b, c), a), ""}});
    if (problem == "right-operator")
        return make_report("t5 candidate", {{"mul C = {0}", c.is_operator(), ""},
                                            {"A contained in BC", contains(compose(b, c), a), ""}});
    if (problem == "left-relation")
        return make_report("c2 candidate", {{"A contained in CB", contains(compose(c, b), a), ""}});
    if (problem == "left-operator")
        return make_report("t21 candidate", {{"mul C = {0}", c.is_operator(), ""},
                                             {"A contained in CB", contains(compose(c, b), a), ""}});
    if (problem == "left-injective")
        return make_report("c20 candidate",
                           {{"mul C = {0}", c.is_operator(), ""},
                            {"ker C = {0}", c.ker().is_zero(), ""},
                            {"A contained in CB", contains(compose(c, b), a), ""}});
    throw Error("unknown problem '" + problem + "'");
}

int run_check(const std::string& problem, const std::vector<std::string>& files) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (files.size() < lo || files.size() > hi)
            throw CLI::ValidationError("check " + problem + ": wrong number of files");
    };

    DecisionReport rep;
    if (problem == "operator-part") {
        need(1, 2);
        LinearRelation r = load_relation(files[0]);
        if (files.size() == 2) {
            LinearRelation c = load_relation(files[1]);
            rep = make_report("c24 candidate",
                              {{"mul C = {0}", c.is_operator(), ""},
                               {"C contained in R", contains(r, c), ""},
                               {"ran C = ran R", c.ran() == r.ran(), ""}});
        } else {
            rep = operator_part_criterion(r);
        }
    } else if (problem == "contains") {
        need(2, 2);
        rep = contained_c12(load_relation(files[0]), load_relation(files[1]));
    } else if (problem == "exact-right") {
        need(2, 2);
        rep = exact_right_check(load_relation(files[0]), load_relation(files[1]));
    } else if (problem == "exact-left") {
        need(2, 2);
        rep = exact_left_check(load_relation(files[0]), load_relation(files[1]));
    } else {
        need(2, 3);
        LinearRelation a = load_relation(files[0]);
        LinearRelation b = load_relation(files[1]);
        if (files.size() == 3) {
            rep = candidate_report(problem, a, b, load_relation(files[2]));
        } else if (problem == "right-relation") {
            rep = right_relation_criterion(a, b);
        } else if (problem == "right-operator") {
            rep = right_operator_criterion(a, b);
        } else if (problem == "left-relation") {
            rep = left_relation_criterion(a, b);
        } else if (problem == "left-operator") {
            rep = left_criterion(a, b);
        } else if (problem == "left-injective") {
            rep = left_injective_criterion(a, b);
        } else {
            throw Error("unknown problem '" + problem + "'");
        }
    }
    std::cout << rep.to_string();
    return rep.verdict ? 0 : 1;
}

int run_solve(const std::string& problem, const std::vector<std::string>& files,
              const std::string& out_path) {
    auto need = [&](std::size_t count) {
        if (files.size() != count)
            throw CLI::ValidationError("solve " + problem + ": wrong number of files");
    };

    std::optional<LinearRelation> solution;
    DecisionReport criterion;
    if (problem == "operator-part") {
        need(1);
        LinearRelation r = load_relation(files[0]);
        criterion = operator_part_criterion(r);
        if (auto sol = operator_part(r)) solution = sol->C;
    } else {
        need(2);
        LinearRelation a = load_relation(files[0]);
        LinearRelation b = load_relation(files[1]);
        if (problem == "right-relation") {
            criterion = right_relation_criterion(a, b);
            solution = solve_right_relation(a, b);
        } else if (problem == "right-operator") {
            criterion = right_operator_criterion(a, b);
            if (auto sol = solve_right_operator(a, b)) solution = sol->C;
        } else if (problem == "left-relation") {
            criterion = left_relation_criterion(a, b);
            solution = solve_left_relation(a, b);
        } else if (problem == "left-operator") {
            criterion = left_criterion(a, b);
            if (auto sol = solve_left_operator(a, b)) solution = sol->C;
        } else if (problem == "left-injective") {
            criterion = left_injective_criterion(a, b);
            if (auto sol = solve_left_operator_injective(a, b)) solution = sol->C;
        } else {
            throw Error("'" + problem + "' is a check-only problem, nothing to solve");
        }
    }

    if (!solution) {
        std::cout << "no solution: obstruction is '" << criterion.first_failure() << "'\n"
                  << criterion.to_string();
        return 1;
    }
    write_file(out_path, serialize_relation(*solution));
    std::cout << "solution written to " << out_path << "\n" << criterion.to_string();
    return 0;
}

int run_verify(const RunConfig& cfg) {
    std::vector<SuiteResult> results = run_verification(cfg);
    std::cout << render_report(cfg, results);
    for (const SuiteResult& r : results)
        if (!r.ok()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear relation algebra and factorization toolkit"};
    app.require_subcommand(1);

    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "print the parts of a relation");
    analyze->add_option("file", analyze_file, "relation file")->required();

    static const std::vector<std::string> check_problems = {
        "contains",      "right-relation", "right-operator", "left-relation", "left-operator",
        "left-injective", "operator-part",  "exact-right",    "exact-left"};
    std::string check_problem;
    std::vector<std::string> check_files;
    CLI::App* check = app.add_subcommand("check", "evaluate an existence criterion");
    check->add_option("problem", check_problem, "one of: contains right-relation right-operator "
                                                "left-relation left-operator left-injective "
                                                "operator-part exact-right exact-left")
        ->required()
        ->check(CLI::IsMember(check_problems));
    check->add_option("files", check_files, "relation files (append a candidate to validate it)")
        ->required();

    std::string solve_problem, solve_out;
    std::vector<std::string> solve_files;
    CLI::App* solve = app.add_subcommand("solve", "construct a solution or print the obstruction");
    solve->add_option("problem", solve_problem, "one of: right-relation right-operator "
                                                "left-relation left-operator left-injective "
                                                "operator-part")
        ->required()
        ->check(CLI::IsMember(check_problems));
    solve->add_option("files", solve_files, "relation files")->required();
    solve->add_option("-o,--output", solve_out, "output relation file")->required();

    RunConfig cfg;
    std::vector<std::string> field_names;
    CLI::App* verify = app.add_subcommand("verify", "run the randomized property suites");
    verify->add_option("--seed", cfg.seed, "rng seed");
    verify->add_option("--trials", cfg.trials, "trials per suite and field");
    verify->add_option("--max-dim", cfg.max_dim, "maximum dimension per space");
    verify->add_option("--field", field_names, "gf2 gf3 gf5 q (repeatable; default all)")
        ->check(CLI::IsMember(std::vector<std::string>{"gf2", "gf3", "gf5", "q"}));
    verify->add_flag("--oracle", cfg.with_oracle, "cross-check against exhaustive enumeration");
    verify->add_option("--suite", cfg.suites, "restrict to named suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(analyze_file);
        if (check->parsed()) return run_check(check_problem, check_files);
        if (solve->parsed()) return run_solve(solve_problem, solve_files, solve_out);
        if (verify->parsed()) {
            if (!field_names.empty()) {
                cfg.fields.clear();
                for (const std::string& name : field_names) {
                    if (name == "q")
                        cfg.fields.push_back(FieldSpec::rationals());
                    else
                        cfg.fields.push_back(FieldSpec::prime(
                            static_cast<std::uint32_t>(std::stoul(name.substr(2)))));
                }
            }
            return run_verify(cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
