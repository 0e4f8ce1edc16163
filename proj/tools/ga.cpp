// ga: Groebner-basis toolkit for binary polynomial optimization, QUBO
// compilation, minor embedding, toric ideals, and spectral anti-crossing
// analysis. One subcommand per pipeline; all numeric output is exact "p/q"
// unless --float is given.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ga/binopt.hpp"
#include "ga/embed.hpp"
#include "ga/groebner.hpp"
#include "ga/poly_io.hpp"
#include "ga/quboc.hpp"
#include "ga/solvers.hpp"
#include "ga/spectra.hpp"
#include "ga/toric.hpp"

using namespace ga;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::domain, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> poly_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back(line);
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Variables in order of first appearance across all lines.
std::vector<std::string> infer_vars(const std::vector<std::string>& lines) {
    std::vector<std::string> vars;
    for (const auto& line : lines) {
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isalpha(static_cast<unsigned char>(line[i]))) {
                std::string name;
                while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                                           line[i] == '_'))
                    name.push_back(line[i++]);
                if (std::find(vars.begin(), vars.end(), name) == vars.end())
                    vars.push_back(name);
            } else {
                ++i;
            }
        }
    }
    return vars;
}

Ring ring_from(const std::string& vars_flag, const std::vector<std::string>& lines) {
    std::vector<std::string> names =
        vars_flag.empty() ? infer_vars(lines) : split_csv(vars_flag);
    if (names.empty()) fail(errc::domain, "no variables found; pass --vars");
    return Ring(names);
}

std::vector<std::vector<long>> integer_matrix(const RatMatrix& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& e = m.at(i, j);
            if (e.get_den() != 1) fail(errc::domain, "matrix entry is not an integer");
            out[i][j] = static_cast<long>(e.get_num().get_si());
        }
    return out;
}

BuchbergerOptions gb_options() {
    BuchbergerOptions opts;
    if (const char* env = std::getenv("GA_PAIR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.pair_budget = v;
    }
    return opts;
}

bool g_float = false;

std::string num(const Rat& q) {
    if (!g_float) return rat_str(q);
    std::ostringstream ss;
    ss.precision(12);
    ss << rat_double(q);
    return ss.str();
}

Order order_from_flag(const std::string& flag, const Ring& ring) {
    if (flag == "lex" || flag.empty()) return Order::lex(ring);
    if (flag == "grlex") return Order::grlex();
    if (flag == "grevlex") return Order::grevlex();
    if (flag.rfind("matrix:", 0) == 0) {
        auto m = parse_matrix_text(read_file(flag.substr(7)));
        return Order::matrix(integer_matrix(m));
    }
    fail(errc::domain, "unknown order '" + flag + "'");
}

int cmd_gb(const std::string& file, const std::string& vars, const std::string& order_flag,
           long eliminate_k) {
    auto lines = poly_lines(read_file(file));
    Ring ring = ring_from(vars, lines);
    std::vector<Poly> gens;
    for (const auto& l : lines) gens.push_back(parse_poly(l, ring));
    auto gb = buchberger(gens, order_from_flag(order_flag, ring), gb_options());
    if (eliminate_k >= 0) gb = eliminate(gb, static_cast<std::size_t>(eliminate_k));
    for (const auto& g : gb.elements) std::cout << format_poly(g, gb.order) << "\n";
    return 0;
}

int cmd_binopt(const std::string& file, const std::string& constraints_file,
               const std::string& vars, const std::string& method) {
    auto lines = poly_lines(read_file(file));
    if (lines.size() != 1) fail(errc::domain, "objective file must hold exactly one polynomial");
    std::vector<std::string> all_lines = lines;
    std::vector<std::string> cons_lines;
    if (!constraints_file.empty()) {
        cons_lines = poly_lines(read_file(constraints_file));
        all_lines.insert(all_lines.end(), cons_lines.begin(), cons_lines.end());
    }
    Ring ring = ring_from(vars, all_lines);

    BinoptOptions opts;
    opts.gb = gb_options();
    Optimum opt;
    if (method == "elim") {
        BinaryProblem p;
        p.objective = parse_poly(lines[0], ring);
        for (const auto& c : cons_lines) p.equality_constraints.push_back(parse_poly(c, ring));
        opt = solve_by_elimination(p, opts);
    } else if (method == "eigen") {
        if (!cons_lines.empty())
            fail(errc::unsupported, "the eigenvalue method handles unconstrained objectives");
        auto rep = solve_by_eigenvalues_report(parse_poly(lines[0], ring), opts);
        std::cout << "standard_monomials " << rep.quotient.standard_monomials.size() << "\n";
        std::cout << "eigenvalues";
        for (const auto& ev : rep.eigenvalues) std::cout << " " << num(ev);
        std::cout << "\n";
        opt = rep.optimum;
    } else {
        fail(errc::domain, "unknown method '" + method + "'");
    }
    std::cout << "value " << num(opt.value) << "\n";
    for (const auto& m : opt.minimizers) {
        std::cout << "minimizer ";
        for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
        std::cout << "\n";
    }
    if (!opt.value_spectrum.empty()) {
        std::cout << "spectrum";
        for (const auto& v : opt.value_spectrum) std::cout << " " << num(v);
        std::cout << "\n";
    }
    return 0;
}

int cmd_feas(const std::string& file, const std::string& vars, const std::string& params) {
    auto lines = poly_lines(read_file(file));
    Ring ring = ring_from(vars, lines);
    auto param_names = split_csv(params);
    std::vector<std::size_t> param_idx, binary_idx;
    for (const auto& p : param_names) {
        int idx = ring.index_of(p);
        if (idx < 0) fail(errc::domain, "unknown parameter '" + p + "'");
        param_idx.push_back(static_cast<std::size_t>(idx));
    }
    for (std::size_t v = 0; v < ring.arity(); ++v)
        if (std::find(param_idx.begin(), param_idx.end(), v) == param_idx.end())
            binary_idx.push_back(v);
    std::vector<Poly> system;
    for (const auto& l : lines) system.push_back(parse_poly(l, ring));
    BinoptOptions opts;
    opts.gb = gb_options();
    auto gb = feasibility_conditions(ring, system, binary_idx, param_idx, opts);
    for (const auto& g : gb.elements) std::cout << format_poly(g) << "\n";
    return 0;
}

int cmd_qubo_reduce(const std::string& file, const std::string& vars, const std::string& eps,
                    const std::string& margin) {
    auto lines = poly_lines(read_file(file));
    if (lines.size() != 1) fail(errc::domain, "constraint file must hold exactly one polynomial");
    Ring ring = ring_from(vars, lines);
    Poly H = parse_poly(lines[0], ring);
    DynamicRange range;
    range.epsilon = rat_parse(eps);
    range.margin = rat_parse(margin);
    ReduceOptions opts;
    opts.gb = gb_options();
    auto r = reduce_to_qubo(H, range, opts);

    nlohmann::json j;
    j["h_plus"] = format_poly(r.h_plus);
    j["combination"] = nlohmann::json::array();
    for (const auto& [t, a] : r.combination)
        j["combination"].push_back({{"t", format_poly(t)}, {"a", rat_str(a)}});
    j["qubo"] = qubo_to_json(r.qubo);
    j["verified"] = verify_reduction(H, r, opts.gb);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_embed(const std::string& logical, const std::string& hardware, const std::string& fold) {
    Graph Y = graph_from_json(nlohmann::json::parse(read_file(logical)));
    Graph X = graph_from_json(nlohmann::json::parse(read_file(hardware)));
    EmbedOptions opts;
    opts.gb = gb_options();
    auto res = enumerate_embeddings(X, Y, {}, opts);

    nlohmann::json out;
    out["count"] = res.solutions.size();
    out["solutions"] = nlohmann::json::array();
    for (const auto& sol : res.solutions) {
        nlohmann::json s;
        s["fibers"] = nlohmann::json::object();
        for (const auto& [y, fib] : sol.fibers) s["fibers"][y] = fib;
        nlohmann::json beta = nlohmann::json::array();
        for (std::size_t i = 0; i < X.size(); ++i)
            beta.push_back(sol.used.count(X.name(i)) ? 1 : 0);
        s["support"] = std::move(beta);
        out["solutions"].push_back(std::move(s));
    }

    if (fold == "auto") {
        auto auts = find_automorphisms(X);
        std::vector<std::size_t> chosen;
        for (const auto& a : auts) {
            bool identity = true;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != i) identity = false;
            if (!identity) {
                chosen = a;
                break;
            }
        }
        if (!chosen.empty()) {
            auto f = fold_by_symmetry(X, chosen);
            auto fres = enumerate_embeddings_folded(X, Y, f, opts);
            nlohmann::json fj;
            fj["orbits"] = f.invariant_names;
            fj["variables"] = fres.variable_count;
            fj["count"] = fres.solutions.size();
            fj["classes"] = nlohmann::json::array();
            for (const auto& fs : fres.solutions) {
                nlohmann::json c;
                for (const auto& [y, fib] : fs.orbit_fibers) {
                    nlohmann::json lst = nlohmann::json::array();
                    for (const auto& [orbit, mult] : fib)
                        lst.push_back({{"orbit", orbit}, {"count", mult}});
                    c[y] = std::move(lst);
                }
                fj["classes"].push_back(std::move(c));
            }
            out["fold"] = std::move(fj);
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_toric_gb(const std::string& matrix_file, const std::string& order_matrix_file,
                 const std::string& backend, std::size_t bits, std::uint64_t seed,
                 std::size_t sweeps, std::size_t restarts) {
    auto A_rows = integer_matrix(parse_matrix_text(read_file(matrix_file)));
    ConfigurationMatrix A{A_rows};
    A.validate();
    const std::size_t n = A.cols();

    std::vector<std::vector<long>> M;
    if (!order_matrix_file.empty()) {
        M = integer_matrix(parse_matrix_text(read_file(order_matrix_file)));
    } else {
        M.assign(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
    }
    Order order = Order::matrix(M);

    DigitEncoding enc;
    enc.bits_per_coefficient = bits;
    ToricSolverConfig cfg;
    cfg.backend = backend == "anneal" ? Backend::Anneal : Backend::Exhaustive;
    cfg.schedule.sweeps = sweeps;
    cfg.schedule.restarts = restarts;
    cfg.schedule.base_seed = seed;

    auto res = toric_gb_annealed(A, order, M, enc, cfg, gb_options());
    for (const auto& g : res.gb.elements) std::cout << format_poly(g, order) << "\n";
    nlohmann::json prov = nlohmann::json::array();
    for (std::size_t i = 0; i < res.gb.elements.size(); ++i)
        prov.push_back({{"binomial", format_poly(res.gb.elements[i], order)},
                        {"source", res.sampled[i] ? "sampled" : "completed"}});
    std::cout << prov.dump() << "\n";
    return 0;
}

int cmd_toric_ip(const std::string& matrix_file, const std::string& rhs_file,
                 const std::string& order_matrix_file) {
    auto A_rows = integer_matrix(parse_matrix_text(read_file(matrix_file)));
    ConfigurationMatrix A{A_rows};
    A.validate();
    auto rhs_m = integer_matrix(parse_matrix_text(read_file(rhs_file)));
    std::vector<long> b;
    for (const auto& row : rhs_m)
        for (auto e : row) b.push_back(e);

    Order order = Order::lex(toric_ring(A.cols()));
    if (!order_matrix_file.empty())
        order = Order::matrix(integer_matrix(parse_matrix_text(read_file(order_matrix_file))));
    auto v = conti_traverso_ip(A, b, order, gb_options());
    for (std::size_t j = 0; j < v.size(); ++j) std::cout << (j ? " " : "") << v[j].get_str();
    std::cout << "\n";
    return 0;
}

int cmd_anticross(const std::string& hinit, const std::string& hfinal, const std::string& tol,
                  bool widen) {
    HamiltonianPair pair{parse_matrix_text(read_file(hinit)),
                         parse_matrix_text(read_file(hfinal))};
    auto surf = char_surface(pair);
    SpectraOptions opts;
    opts.widen_domain = widen;
    opts.gb = gb_options();
    auto pts = find_critical_points(surf, rat_parse(tol), opts);

    nlohmann::json out;
    out["surface"] = format_poly(surf.f);
    out["critical_points"] = critical_points_to_json(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (auto gap = gap_estimate(surf, pts[i].s_box.mid()))
            out["critical_points"][i]["gap_estimate"] = *gap;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_qubo_solve(const std::string& file, const std::string& method, std::size_t sweeps,
                   std::size_t restarts, std::uint64_t seed, std::size_t jobs) {
    Qubo q = qubo_from_json(nlohmann::json::parse(read_file(file)));
    SampleSet set;
    if (method == "exhaustive") {
        set = solve_exhaustive(q);
    } else if (method == "anneal") {
        AnnealSchedule sched;
        sched.sweeps = sweeps;
        sched.restarts = restarts;
        sched.base_seed = seed;
        set = simulated_anneal(q, sched, jobs);
    } else {
        fail(errc::domain, "unknown method '" + method + "'");
    }
    std::cout << sampleset_to_json(set).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-basis toolkit for annealing-style optimization"};
    app.require_subcommand(1);
    app.add_flag("--float", g_float, "render numbers as decimals instead of p/q");

    std::string file, vars, order_flag = "lex", constraints, method = "elim", params;
    std::string eps = "0", margin = "1", logical, hardware, fold = "none";
    std::string matrix_file, order_matrix_file, rhs_file, backend = "exhaustive";
    std::string hinit, hfinal, tol = "1/1000000000", qmethod = "exhaustive";
    long eliminate_k = -1;
    std::size_t bits = 3, sweeps = 2000, restarts = 100, jobs = 1;
    std::uint64_t seed = 0;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a polynomial system");
    gb->add_option("file", file, "polynomial system, one per line")->required();
    gb->add_option("--vars", vars, "comma-separated variables (inferred if omitted)");
    gb->add_option("--order", order_flag, "lex|grlex|grevlex|matrix:FILE");
    gb->add_option("--eliminate", eliminate_k, "keep only the last K variables");

    auto* bo = app.add_subcommand("binopt", "binary polynomial optimization");
    bo->add_option("file", file, "objective polynomial")->required();
    bo->add_option("--method", method, "elim|eigen");
    bo->add_option("--constraints", constraints, "equality constraints, one per line");
    bo->add_option("--vars", vars, "comma-separated variables");

    auto* fe = app.add_subcommand("feas", "parametric feasibility conditions");
    fe->add_option("file", file, "polynomial system")->required();
    fe->add_option("--params", params, "comma-separated parameter variables")->required();
    fe->add_option("--vars", vars, "comma-separated variables");

    auto* qr = app.add_subcommand("qubo-reduce", "positive quadratic reduction of a constraint");
    qr->add_option("file", file, "constraint polynomial")->required();
    qr->add_option("--epsilon", eps, "coupling window half-width (rational)");
    qr->add_option("--margin", margin, "separation of non-zeros (rational)");
    qr->add_option("--vars", vars, "comma-separated variables");

    auto* em = app.add_subcommand("embed", "minor embeddings of a logical graph");
    em->add_option("--logical", logical, "logical graph JSON")->required();
    em->add_option("--hardware", hardware, "hardware graph JSON")->required();
    em->add_option("--fold", fold, "auto|none");

    auto* tg = app.add_subcommand("toric-gb", "toric Groebner basis from a configuration matrix");
    tg->add_option("--matrix", matrix_file, "configuration matrix file")->required();
    tg->add_option("--order-matrix", order_matrix_file, "monomial order matrix file");
    tg->add_option("--backend", backend, "exhaustive|anneal");
    tg->add_option("--bits", bits, "digit bits per kernel coefficient");
    tg->add_option("--seed", seed, "annealer base seed");
    tg->add_option("--sweeps", sweeps, "annealer sweeps");
    tg->add_option("--restarts", restarts, "annealer restarts");

    auto* ti = app.add_subcommand("toric-ip", "integer program via normal-form reduction");
    ti->add_option("--matrix", matrix_file, "configuration matrix file")->required();
    ti->add_option("--rhs", rhs_file, "right-hand side file")->required();
    ti->add_option("--order-matrix", order_matrix_file, "cost order matrix file");

    auto* ac = app.add_subcommand("anticross", "anti-crossing analysis of an interpolation");
    ac->add_option("--hinit", hinit, "initial Hamiltonian matrix file")->required();
    ac->add_option("--hfinal", hfinal, "final Hamiltonian matrix file")->required();
    ac->add_option("--tol", tol, "isolation tolerance (rational)");
    ac->add_flag("--widen", "report critical points outside s in [0,1]");

    auto* qs = app.add_subcommand("qubo-solve", "solve a QUBO exactly or by annealing");
    qs->add_option("file", file, "qubo JSON")->required();
    qs->add_option("--method", qmethod, "exhaustive|anneal");
    qs->add_option("--sweeps", sweeps, "annealer sweeps");
    qs->add_option("--restarts", restarts, "annealer restarts");
    qs->add_option("--seed", seed, "annealer base seed");
    qs->add_option("--jobs", jobs, "restart parallelism");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return cmd_gb(file, vars, order_flag, eliminate_k);
        if (bo->parsed()) return cmd_binopt(file, constraints, vars, method);
        if (fe->parsed()) return cmd_feas(file, vars, params);
        if (qr->parsed()) return cmd_qubo_reduce(file, vars, eps, margin);
        if (em->parsed()) return cmd_embed(logical, hardware, fold);
        if (tg->parsed())
            return cmd_toric_gb(matrix_file, order_matrix_file, backend, bits, seed, sweeps,
                                restarts);
        if (ti->parsed()) return cmd_toric_ip(matrix_file, rhs_file, order_matrix_file);
        if (ac->parsed()) return cmd_anticross(hinit, hfinal, tol, ac->count("--widen") > 0);
        if (qs->parsed()) return cmd_qubo_solve(file, qmethod, sweeps, restarts, seed, jobs);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case errc::infeasible:
        case errc::resource_limit:
        case errc::infinite:
            return 1;
        default:
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
