// Command line front end: every subcommand wraps one library operation and
// speaks JSON on stdout. Exit codes: 0 success, 2 validation error, 3
// capacity/budget error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rado/errors.hpp"
#include "rado/json_io.hpp"

using namespace rado;

namespace {

json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw validation_error("cannot open file '" + arg.substr(1) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("bad JSON argument: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
    std::uint64_t seed = 0;
    std::uint64_t oracle_bound = kDefaultOracleBound;
    std::uint64_t budget = 1'000'000;
    unsigned threads = 1;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_budget = false) {
    cmd->add_option("--seed", c.seed, "Seed for all randomized choices");
    cmd->add_option("--oracle-bound", c.oracle_bound, "Iteration cap for enumeration backends");
    cmd->add_option("--threads", c.threads, "Worker cap for parallel searches")
        ->check(CLI::Range(1u, 256u));
    if (with_budget) cmd->add_option("--budget", c.budget, "Max candidates for searches");
}

Coloring parse_coloring_arg(const GroupSpec& g, const std::string& arg, int colors,
                            std::uint64_t seed) {
    if (arg == "by_order") return coloring_by_order(g);
    if (arg == "random") {
        if (colors < 1) throw validation_error("random coloring needs --colors >= 1");
        return coloring_random(g, colors, seed);
    }
    json j = read_json_arg(arg);
    if (j.is_array()) return coloring_explicit(g, j.get<std::vector<int>>());
    return coloring_from_json(j);
}

CountBackend parse_backend(const std::string& s) {
    if (s == "auto") return CountBackend::Auto;
    if (s == "bruteforce") return CountBackend::BruteForce;
    if (s == "fourier") return CountBackend::Fourier;
    throw validation_error("backend must be auto, bruteforce or fourier");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact toolkit for columns conditions, subgroup counting and "
                 "monochromatic solution counts over finite abelian groups"};
    app.require_subcommand(1);

    // check-columns
    auto* cc = app.add_subcommand("check-columns", "Certify the columns condition over a ring");
    std::string cc_matrix, cc_ring = "Z";
    std::size_t cc_bound = kColumnsSearchBound;
    cc->add_option("--matrix", cc_matrix, "Matrix as JSON rows or @file")->required();
    cc->add_option("--ring", cc_ring, "Ring: Z, Q or Z<n>");
    cc->add_option("--search-bound", cc_bound, "Max columns for the partition search");
    cc->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(cc_matrix));
        auto cert = check_columns_condition(a, ring_from_string(cc_ring), cc_bound);
        json out;
        out["satisfies"] = cert.has_value();
        out["certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
        emit(out);
    });

    // reduce
    auto* rd = app.add_subcommand("reduce", "Reduce to a matrix with d_k = 1 preserving solutions");
    std::string rd_matrix;
    std::int64_t rd_n = 0;
    std::size_t rd_bound = kColumnsSearchBound;
    rd->add_option("--matrix", rd_matrix)->required();
    rd->add_option("--n", rd_n, "Columns-condition modulus")->required();
    rd->add_option("--search-bound", rd_bound);
    rd->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(rd_matrix));
        emit(reduce_report_to_json(reduce_matrix(a, Int(rd_n), rd_bound)));
    });

    // count
    auto* ct = app.add_subcommand("count", "Count solutions of A x = 0 with constrained coordinates");
    std::string ct_matrix, ct_group, ct_sets, ct_backend = "auto";
    CommonOpts ct_c;
    ct->add_option("--matrix", ct_matrix)->required();
    ct->add_option("--group", ct_group, "Group as ZaxZb or @file/JSON factors")->required();
    ct->add_option("--sets", ct_sets, "Per-column element sets (JSON list of lists); default all of G");
    ct->add_option("--backend", ct_backend, "auto | bruteforce | fourier");
    add_common(ct, ct_c);
    ct->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(ct_matrix));
        GroupSpec g = GroupSpec::parse(ct_group);
        std::vector<ElementSet> sets;
        if (ct_sets.empty()) {
            sets.assign(a.cols(), full_set(g));
        } else {
            json js = read_json_arg(ct_sets);
            if (!js.is_array()) throw validation_error("--sets must be a JSON array");
            for (const auto& s : js) sets.push_back(element_set_from_json(g, s));
        }
        Int c = count_solutions(a, g, sets, parse_backend(ct_backend), ct_c.oracle_bound);
        std::cout << c.get_str() << "\n";
    });

    // count-mono
    auto* cm = app.add_subcommand("count-mono", "Monochromatic solution counts under a coloring");
    std::string cm_matrix, cm_group, cm_coloring = "by_order", cm_backend = "auto";
    int cm_colors = 0;
    CommonOpts cm_c;
    cm->add_option("--matrix", cm_matrix)->required();
    cm->add_option("--group", cm_group)->required();
    cm->add_option("--coloring", cm_coloring, "by_order | random | explicit JSON | @file");
    cm->add_option("--colors", cm_colors, "Color count for random colorings");
    cm->add_option("--backend", cm_backend);
    add_common(cm, cm_c);
    cm->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(cm_matrix));
        GroupSpec g = GroupSpec::parse(cm_group);
        Coloring chi = parse_coloring_arg(g, cm_coloring, cm_colors, cm_c.seed);
        SolutionCount sc = count_monochromatic(a, g, chi, parse_backend(cm_backend), cm_c.oracle_bound);
        json out = solution_count_to_json(sc);
        out["coloring"] = coloring_to_json(chi);
        emit(out);
    });

    // subgroups
    auto* sb = app.add_subcommand("subgroups", "Count (or list) subgroups isomorphic to Z_d^M");
    std::string sb_group;
    std::int64_t sb_d = 0;
    unsigned sb_m = 1;
    bool sb_enumerate = false;
    std::uint64_t sb_bound = 512;
    sb->add_option("--group", sb_group)->required();
    sb->add_option("--d", sb_d, "Cyclic order d")->required();
    sb->add_option("--M", sb_m, "Number of Z_d factors")->required();
    sb->add_flag("--enumerate", sb_enumerate, "Also list the subgroups by brute force");
    sb->add_option("--oracle-bound", sb_bound, "Max group order for enumeration");
    sb->callback([&]() {
        GroupSpec g = GroupSpec::parse(sb_group);
        json out;
        out["count"] = count_subgroups_iso(g, sb_d, sb_m).get_str();
        if (sb_enumerate) {
            json subs = json::array();
            for (const auto& h : enumerate_subgroups(g, sb_d, sb_m, sb_bound)) subs.push_back(h);
            out["subgroups"] = std::move(subs);
        }
        emit(out);
    });

    // gaussian
    auto* ga = app.add_subcommand("gaussian", "Gaussian binomial (N choose M)_q");
    unsigned ga_n = 0, ga_m = 0;
    std::int64_t ga_q = 2;
    ga->add_option("--N", ga_n)->required();
    ga->add_option("--M", ga_m)->required();
    ga->add_option("--q", ga_q)->required();
    ga->callback([&]() { std::cout << gaussian_binomial(ga_n, ga_m, Int(ga_q)).get_str() << "\n"; });

    // skeleton
    auto* sk = app.add_subcommand("skeleton", "Solution of A x = 0 inside F(x_1..x_t)");
    std::string sk_matrix, sk_basis;
    std::int64_t sk_n = 0;
    sk->add_option("--matrix", sk_matrix)->required();
    sk->add_option("--n", sk_n, "Columns-condition modulus = ambient exponent")->required();
    sk->add_option("--basis", sk_basis, "JSON {ambient, vectors}")->required();
    sk->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(sk_matrix));
        SkeletonBasis basis = basis_from_json(read_json_arg(sk_basis));
        auto cert = check_columns_condition(a, Ring::mod(Int(sk_n)));
        if (!cert) throw validation_error("matrix does not satisfy the n-columns condition");
        auto sol = skeleton_solution(a, *cert, basis);
        json out;
        out["certificate"] = certificate_to_json(*cert);
        json ys = json::array(), orders = json::array();
        for (const auto& e : sol) {
            ys.push_back(e.coords);
            orders.push_back(element_order(e));
        }
        out["solution"] = std::move(ys);
        out["orders"] = std::move(orders);
        emit(out);
    });

    // classify
    auto* cl = app.add_subcommand("classify", "Classify a 1-translate under a coordinate projection");
    std::string cl_ambient, cl_translate, cl_within;
    std::size_t cl_u = 1;
    cl->add_option("--ambient", cl_ambient, "Ambient Z_n^M")->required();
    cl->add_option("--translate", cl_translate, "JSON {base, generators}")->required();
    cl->add_option("--within", cl_within, "Enclosing translate; defaults to the whole group");
    cl->add_option("--u", cl_u, "Project onto the first u coordinates")->required();
    cl->callback([&]() {
        GroupSpec ambient = GroupSpec::parse(cl_ambient);
        Translate t = translate_from_json(ambient, read_json_arg(cl_translate));
        Translate b = cl_within.empty() ? full_group_translate(ambient)
                                        : translate_from_json(ambient, read_json_arg(cl_within));
        const char* name = "degenerate";
        switch (classify_translate(t, b, cl_u)) {
            case TranslateClass::Transverse: name = "transverse"; break;
            case TranslateClass::Vertical: name = "vertical"; break;
            case TranslateClass::Degenerate: break;
        }
        emit(json{{"class", name}});
    });

    // search-colorings
    auto* se = app.add_subcommand("search-colorings", "Minimize the monochromatic count over colorings");
    std::string se_matrix, se_mode = "exhaustive", se_backend = "bruteforce";
    std::vector<std::string> se_groups;
    int se_colors = 2;
    bool se_nosym = false;
    CommonOpts se_c;
    se->add_option("--matrix", se_matrix)->required();
    se->add_option("--group", se_groups, "Group(s); repeat for a sweep")->required();
    se->add_option("--colors", se_colors)->required();
    se->add_option("--mode", se_mode, "exhaustive | randomized");
    se->add_option("--backend", se_backend);
    se->add_flag("--no-symmetry", se_nosym, "Disable color-permutation pruning");
    se->add_option("--format", se_c.format, "json | csv");
    add_common(se, se_c, /*with_budget=*/true);
    se->callback([&]() {
        IntMatrix a = matrix_from_json(read_json_arg(se_matrix));
        SearchBudget budget;
        budget.mode = se_mode == "randomized" ? SearchBudget::Mode::Randomized
                                              : SearchBudget::Mode::Exhaustive;
        if (se_mode != "exhaustive" && se_mode != "randomized")
            throw validation_error("mode must be exhaustive or randomized");
        budget.max_candidates = se_c.budget;
        budget.seed = se_c.seed;
        std::vector<std::pair<GroupSpec, MinColoringReport>> rows;
        for (const auto& gs : se_groups) {
            GroupSpec g = GroupSpec::parse(gs);
            rows.emplace_back(g, min_monochromatic(a, g, se_colors, budget,
                                                   parse_backend(se_backend), se_c.oracle_bound,
                                                   se_c.threads, !se_nosym));
        }
        auto annotate = [&](const GroupSpec& g, const MinColoringReport& rep) {
            json row = min_coloring_report_to_json(rep);
            row["group"] = group_to_json(g);
            row["instance"] = matrix_to_json(a);
            row["mode"] = se_mode;
            return row;
        };
        if (se_c.format == "csv") {
            std::cout << "group,min,normalizer,empirical_c,exact,candidates\n";
            for (const auto& [g, rep] : rows)
                std::cout << g.to_string() << "," << rep.min_count.get_str() << ","
                          << rep.normalizer.get_str() << "," << to_decimal(rep.empirical_c) << ","
                          << (rep.exact ? "true" : "false") << "," << rep.candidates_examined
                          << "\n";
        } else if (rows.size() == 1) {
            emit(annotate(rows[0].first, rows[0].second));
        } else {
            json out = json::array();
            for (const auto& [g, rep] : rows) out.push_back(annotate(g, rep));
            emit(out);
        }
    });

    // density-cex
    auto* dc = app.add_subcommand("density-cex", "Dense solution-free set for a nonzero-sum equation");
    std::string dc_coeffs;
    std::int64_t dc_n = 0;
    CommonOpts dc_c;
    dc->add_option("--coeffs", dc_coeffs, "Equation coefficients as a JSON array")->required();
    dc->add_option("--n", dc_n, "Cyclic group order")->required();
    add_common(dc, dc_c);
    dc->callback([&]() {
        json cj = read_json_arg(dc_coeffs);
        std::vector<Int> coeffs;
        for (const auto& e : cj) coeffs.push_back(int_from_json(e));
        emit(density_witness_to_json(density_counterexample(coeffs, dc_n, dc_c.oracle_bound)));
    });

    // fixture6
    auto* fx = app.add_subcommand("fixture6", "Counterexample fixture over Z_4^N");
    int fx_n = 1;
    fx->add_option("--N", fx_n, "1 or 2")->required();
    fx->callback([&]() { emit(fixture6_report_to_json(run_fixture6(fx_n))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const capacity_error& e) {
        json err{{"error", {{"type", "capacity"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        json err{{"error", {{"type", "validation"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "validation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
