// p5hom: command-line front end for the P5-free partial list H-coloring solver.

#include <p5hom/blob.hpp>
#include <p5hom/connected_solver.hpp>
#include <p5hom/generators.hpp>
#include <p5hom/io.hpp>
#include <p5hom/oracle.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

using namespace p5hom;

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_not_p5_free = 3;

std::string ids(const VertexSet & s)
{
    std::string out;
    s.for_each([&](Vertex v) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v + 1);
    });
    return out;
}

Instance load(const std::string & path) { return parse_instance(read_file(path)); }

SolverOptions solver_options(std::size_t budget, int parallel, const std::string & subproblems)
{
    SolverOptions opts;
    opts.budget = budget;
    opts.parallel = std::max(1, parallel);
    opts.subproblems = subproblems == "connected" ? SubproblemSolver::connected : SubproblemSolver::full;
    return opts;
}

std::pair<PatternKind, int> parse_pattern(const std::string & text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--pattern", "expected complete:K or path:K");
    auto kind = text.substr(0, colon);
    int k = 0;
    try {
        k = std::stoi(text.substr(colon + 1));
    } catch (const std::exception &) {
        throw CLI::ValidationError("--pattern", "bad pattern size in '" + text + "'");
    }
    if (k < 1 || k > max_colors)
        throw CLI::ValidationError("--pattern", "pattern size out of range");
    if (kind == "complete")
        return {PatternKind::complete, k};
    if (kind == "path")
        return {PatternKind::path, k};
    throw CLI::ValidationError("--pattern", "unknown pattern kind '" + kind + "'");
}

struct SolveArgs {
    std::string file;
    std::string algorithm = "paper";
    std::string subproblems = "full";
    bool force_connected = false;
    bool check = false;
    bool force = false;
    int parallel = 1;
    std::size_t budget = 0;
};

int run_solve(const SolveArgs & a)
{
    auto inst = load(a.file);
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    std::string name;
    if (a.algorithm == "oracle") {
        name = "oracle";
        result.solution = oracle_solve(inst, {.force = a.force});
    } else {
        require_p5_free(inst.graph);
        auto opts = solver_options(a.budget, a.parallel, a.subproblems);
        name = a.algorithm + (a.force_connected ? "-connected" : "");
        result = a.force_connected ? solve_connected_case(inst, opts) : solve_full(inst, opts);
    }
    std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

    if (a.check) {
        if (auto bad = verify_solution(inst, result.solution)) {
            std::cerr << "self-check failed: " << bad->message << '\n';
            return exit_mismatch;
        }
    }
    std::cout << "# algorithm " << name << '\n'
              << "# digest " << instance_digest(inst) << '\n'
              << "# exhaustive " << (result.exhaustive ? "true" : "false") << '\n'
              << "# time_ms " << elapsed.count() << '\n'
              << serialize_solution(result.solution);
    return 0;
}

int run_verify(const std::string & inst_file, const std::string & sol_file)
{
    auto inst = load(inst_file);
    auto sol = parse_solution(read_file(sol_file), inst);
    if (auto bad = verify_solution(inst, sol)) {
        std::cout << "invalid: " << bad->message << '\n';
        return exit_mismatch;
    }
    std::cout << "valid weight " << format_fraction(sol.weight) << '\n';
    return 0;
}

int run_family(const std::string & file, std::size_t budget, int parallel)
{
    auto inst = load(file);
    auto family = build_family(inst, solver_options(budget, parallel, "full"));
    std::cout << "# members " << family.members.size() << '\n'
              << "# exhaustive " << (family.exhaustive ? "true" : "false") << '\n';
    for (const auto & m : family.members)
        std::cout << ids(m) << '\n';
    return 0;
}

int run_blob(const std::string & file, std::size_t budget, int parallel)
{
    auto inst = load(file);
    auto out = run_pipeline(inst, solver_options(budget, parallel, "full"));
    const auto & g = out.blob.weighted.graph;
    auto p5 = find_induced_p5(g);
    std::cout << "# blob_vertices " << g.order() << '\n'
              << "# blob_edges " << g.edge_count() << '\n'
              << "# blob_p5_free " << (p5 ? "false" : "true") << '\n'
              << "# packing_weight " << format_fraction(out.result.solution.weight) << '\n';
    for (int b = 0; b < g.order(); ++b)
        std::cout << "member " << b + 1 << ' ' << format_compact(out.blob.weighted.weight[b]) << " : "
                  << ids(out.blob.member_of[b]) << '\n';
    for (auto [a, b] : g.edges())
        std::cout << "edge " << a + 1 << ' ' << b + 1 << '\n';
    std::cout << "picked " << ids(out.picked) << '\n';
    return 0;
}

struct GenArgs {
    std::string family = "cograph";
    int n = 6;
    int k = 2;
    std::string pattern = "complete";
    std::string density = "1/2";
    std::string list_density = "1";
    std::uint64_t seed = 1;
    int weight_lo = 1;
    int weight_hi = 1;
    int max_den = 1;
    std::string output;
};

int run_gen(const GenArgs & a)
{
    GenSpec spec;
    try {
        spec.density = parse_rational(a.density);
        spec.list_density = parse_rational(a.list_density);
    } catch (const std::invalid_argument & e) {
        throw CLI::ValidationError("--density", e.what());
    }
    spec.family = parse_graph_family(a.family);
    spec.n = a.n;
    spec.k = a.k;
    spec.pattern = a.pattern == "path" ? PatternKind::path : PatternKind::complete;
    spec.seed = a.seed;
    spec.weight_lo = a.weight_lo;
    spec.weight_hi = a.weight_hi;
    spec.max_denominator = a.max_den;
    auto text = serialize_instance(generate(spec));
    if (a.output.empty())
        std::cout << text;
    else
        write_file(a.output, text);
    return 0;
}

struct DiffArgs {
    int trials = 10;
    int max_n = 6;
    std::string pattern = "complete:2";
    std::uint64_t seed = 1;
    int parallel = 1;
    std::string findings;
    std::size_t budget = 0;
    bool force = false;
    std::string subproblems = "full";
};

enum class Outcome { equal, gap, mismatch };

struct Trial {
    Outcome outcome = Outcome::equal;
    Instance inst;
    Solution pipeline;
    Solution oracle;
    std::string note;
};

Trial run_trial(const DiffArgs & a, PatternKind kind, int k, int index)
{
    Trial t;
    t.inst = generate(trial_spec(a.seed, index, a.max_n, kind, k));
    t.pipeline = solve_full(t.inst, solver_options(a.budget, 1, a.subproblems)).solution;
    t.oracle = oracle_solve(t.inst, {.force = a.force});
    if (auto bad = verify_solution(t.inst, t.pipeline)) {
        t.outcome = Outcome::mismatch;
        t.note = "infeasible output: " + bad->message;
    } else if (t.pipeline.weight > t.oracle.weight) {
        t.outcome = Outcome::mismatch;
        t.note = "exceeds the oracle";
    } else if (t.pipeline.weight < t.oracle.weight) {
        bool complete = t.inst.pattern.is_complete();
        t.outcome = complete ? Outcome::mismatch : Outcome::gap;
        t.note = "below the oracle";
    }
    return t;
}

int run_difftest(const DiffArgs & a)
{
    auto [kind, k] = parse_pattern(a.pattern);
    std::vector<Trial> trials(static_cast<std::size_t>(std::max(0, a.trials)));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (int i = next++; i < a.trials; i = next++) {
            try {
                trials[i] = run_trial(a, kind, k, i);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < a.parallel; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);

    int mismatches = 0;
    int gaps = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto & t = trials[i];
        if (t.outcome == Outcome::equal)
            continue;
        std::cout << (t.outcome == Outcome::gap ? "gap" : "MISMATCH") << " trial " << i << " pipeline "
                  << format_fraction(t.pipeline.weight) << " oracle " << format_fraction(t.oracle.weight) << " ("
                  << t.note << ")\n";
        if (t.outcome == Outcome::gap) {
            ++gaps;
            if (!a.findings.empty()) {
                namespace fs = std::filesystem;
                fs::create_directories(a.findings);
                auto stem = (fs::path(a.findings) / ("trial-" + std::to_string(i))).string();
                write_file(stem + ".inst", serialize_instance(t.inst));
                write_file(stem + ".pipeline.sol", serialize_solution(t.pipeline));
                write_file(stem + ".oracle.sol", serialize_solution(t.oracle));
            }
        } else {
            ++mismatches;
        }
    }
    std::cout << "trials " << trials.size() << " mismatches " << mismatches << " gaps " << gaps << '\n';
    return mismatches ? exit_mismatch : 0;
}

int run_check_p5free(const std::string & file)
{
    auto inst = load(file);
    if (auto p5 = find_induced_p5(inst.graph)) {
        std::cout << "induced P5:";
        for (auto v : *p5)
            std::cout << ' ' << v + 1;
        std::cout << '\n';
        return exit_not_p5_free;
    }
    std::cout << "P5-free\n";
    return 0;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact maximum partial list H-coloring on P5-free graphs"};
    app.require_subcommand(1);
    int code = 0;

    SolveArgs solve;
    auto * s = app.add_subcommand("solve", "solve an instance and print a run report");
    s->add_option("file", solve.file, "instance file")->required()->check(CLI::ExistingFile);
    s->add_option("--algorithm", solve.algorithm)->check(CLI::IsMember({"paper", "pipeline", "oracle"}));
    s->add_flag("--force-connected", solve.force_connected, "run only the connected-case solver");
    s->add_flag("--check", solve.check, "verify the output before printing it");
    s->add_option("--parallel", solve.parallel)->check(CLI::Range(1, 256));
    s->add_option("--budget", solve.budget, "cap on branches per enumeration loop, 0 = none")
        ->envname("P5HOM_BUDGET");
    s->add_option("--subproblems", solve.subproblems, "how the connected solver handles its parts")
        ->check(CLI::IsMember({"full", "connected"}));
    s->add_flag("--force", solve.force, "let the oracle exceed its size cap");
    s->callback([&] { code = run_solve(solve); });

    std::string inst_file, sol_file;
    auto * v = app.add_subcommand("verify", "check a solution file against an instance");
    v->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);
    v->add_option("solution", sol_file)->required()->check(CLI::ExistingFile);
    v->callback([&] { code = run_verify(inst_file, sol_file); });

    std::string file;
    std::size_t budget = 0;
    int parallel = 1;
    auto * f = app.add_subcommand("family", "print the component family, one sorted member per line");
    f->add_option("file", file)->required()->check(CLI::ExistingFile);
    f->add_option("--budget", budget)->envname("P5HOM_BUDGET");
    f->add_option("--parallel", parallel)->check(CLI::Range(1, 256));
    f->callback([&] { code = run_family(file, budget, parallel); });

    auto * b = app.add_subcommand("blob", "print the blob graph and the chosen packing");
    b->add_option("file", file)->required()->check(CLI::ExistingFile);
    b->add_option("--budget", budget)->envname("P5HOM_BUDGET");
    b->add_option("--parallel", parallel)->check(CLI::Range(1, 256));
    b->callback([&] { code = run_blob(file, budget, parallel); });

    GenArgs gen;
    auto * g = app.add_subcommand("gen", "generate a random P5-free instance");
    g->add_option("--family", gen.family)->check(CLI::IsMember({"cograph", "split", "random", "random-p5free"}));
    g->add_option("--n", gen.n)->required()->check(CLI::Range(0, 64));
    g->add_option("--k", gen.k)->required()->check(CLI::Range(1, max_colors));
    g->add_option("--pattern", gen.pattern)->check(CLI::IsMember({"complete", "path"}));
    g->add_option("--density", gen.density, "edge or join probability, e.g. 1/2");
    g->add_option("--list-density", gen.list_density);
    g->add_option("--seed", gen.seed)->required();
    g->add_option("--weight-lo", gen.weight_lo)->check(CLI::NonNegativeNumber);
    g->add_option("--weight-hi", gen.weight_hi)->check(CLI::NonNegativeNumber);
    g->add_option("--max-den", gen.max_den)->check(CLI::PositiveNumber);
    g->add_option("-o,--output", gen.output);
    g->callback([&] { code = run_gen(gen); });

    DiffArgs diff;
    auto * d = app.add_subcommand("difftest", "compare the pipeline with the oracle on seeded trials");
    d->add_option("--trials", diff.trials)->required()->check(CLI::NonNegativeNumber);
    d->add_option("--max-n", diff.max_n)->required()->check(CLI::Range(1, 64));
    d->add_option("--pattern", diff.pattern, "complete:K or path:K")->required();
    d->add_option("--seed", diff.seed)->required();
    d->add_option("--parallel", diff.parallel)->check(CLI::Range(1, 256));
    d->add_option("--findings", diff.findings, "directory for non-complete-H gap instances");
    d->add_option("--budget", diff.budget)->envname("P5HOM_BUDGET");
    d->add_option("--subproblems", diff.subproblems)->check(CLI::IsMember({"full", "connected"}));
    d->add_flag("--force", diff.force, "let the oracle exceed its size cap");
    d->callback([&] { code = run_difftest(diff); });

    auto * c = app.add_subcommand("check-p5free", "report an induced P5 if there is one");
    c->add_option("file", file)->required()->check(CLI::ExistingFile);
    c->callback([&] { code = run_check_p5free(file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    } catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NotP5FreeError & e) {
        std::cerr << "input is not P5-free; induced P5:";
        for (auto x : e.witness())
            std::cerr << ' ' << x + 1;
        std::cerr << '\n';
        return exit_not_p5_free;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_mismatch;
    }
    return code;
}
