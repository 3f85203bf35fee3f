#include "g31/bounds.hpp"
#include "g31/combinat.hpp"
#include "g31/construction.hpp"
#include "g31/graph.hpp"
#include "g31/independence.hpp"
#include "g31/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

json witness_json(const g31::VertexSubset& w) {
    json arr = json::array();
    for (const g31::Triple& t : w.triples())
        arr.push_back({t.e[0], t.e[1], t.e[2]});
    return arr;
}

json solve_result_json(const g31::SolveResult& r) {
    return json{{"n", r.n},
                {"l", r.l},
                {"min_edges", r.min_edges},
                {"status", g31::to_string(r.status)},
                {"nodes_explored", r.nodes_explored},
                {"elapsed_s", r.elapsed_s},
                {"witness", witness_json(r.witness)}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot write " + out_path);
        f << text << "\n";
    }
}

json estimate_json(const g31::BoundEstimate& e) {
    return json{{"source", g31::to_string(e.source)},
                {"direction", g31::to_string(e.direction)},
                {"validity", g31::to_string(e.validity)},
                {"value", e.value}};
}

std::vector<g31::BoundEstimate> all_estimates(int n, std::int64_t l,
                                              std::optional<std::int64_t> alpha,
                                              double h) {
    std::vector<g31::BoundEstimate> es;
    for (int pt = 1; pt <= 4; ++pt)
        for (const auto& e : g31::eval_T1(pt, n, l, alpha))
            es.push_back(e);
    es.push_back(g31::eval_T2(n, l));
    for (int pt = 1; pt <= 4; ++pt)
        es.push_back(g31::eval_T3(pt, n, l, h));
    auto [f1, f2] = g31::eval_envelope(n, l);
    es.push_back(f1);
    es.push_back(f2);
    es.push_back(g31::predicted_upper_bound(n, l == 0 ? 1 : l).exact_construction);
    return es;
}

g31::VertexSubset load_subset(int n, const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    json j = json::parse(f);
    if (j.is_array())
        return g31::subset_from_json(n, j.dump());
    if (j.is_object() && j.contains("hex"))
        return g31::subset_from_hex(j.value("n", n), j["hex"].get<std::string>());
    if (j.is_object() && j.contains("triples"))
        return g31::subset_from_json(j.value("n", n), j["triples"].dump());
    throw std::runtime_error("unrecognized subset file format");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"G(n,3,1) minimum induced edges: constructions, bounds, exact search"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global options after a subcommand

    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    int threads = 1;
    std::int64_t budget = -1;
    app.add_option("--format", format, "csv or json")
        ->envname("G31_FORMAT")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output path (default stdout)")->envname("G31_OUT");
    app.add_option("--seed", seed, "PRNG seed")->envname("G31_SEED");
    app.add_option("--threads", threads, "worker threads")->envname("G31_THREADS");
    app.add_option("--budget", budget, "node budget (-1 unlimited)")->envname("G31_BUDGET");

    // stats
    int stats_n = 0;
    auto* stats = app.add_subcommand("stats", "graph parameters for G(n,3,1)");
    stats->add_option("n", stats_n)->required();

    // exact
    int exact_n = 0;
    std::int64_t exact_l = 0;
    std::string exact_method = "bb";
    std::string witness_out;
    bool symmetry = false;
    auto* exact = app.add_subcommand("exact", "exact r(l) by oracle or branch-and-bound");
    exact->add_option("n", exact_n)->required();
    exact->add_option("l", exact_l)->required();
    exact->add_option("--method", exact_method)->check(CLI::IsMember({"oracle", "bb"}));
    exact->add_option("--witness-out", witness_out, "write witness subset file");
    exact->add_flag("--symmetry", symmetry, "fix {1,2,3} as first chosen vertex");

    // heuristic
    int heur_n = 0;
    std::int64_t heur_l = 0;
    int restarts = 1;
    auto* heuristic = app.add_subcommand("heuristic", "local-search upper witness");
    heuristic->add_option("n", heur_n)->required();
    heuristic->add_option("l", heur_l)->required();
    heuristic->add_option("--restarts", restarts);

    // construct
    int cons_n = 0;
    std::int64_t cons_l = 0;
    bool full_set = false;
    auto* construct = app.add_subcommand("construct", "block construction witness");
    construct->add_option("n", cons_n)->required();
    construct->add_option("l", cons_l)->required();
    construct->add_flag("--full-set", full_set, "include the trimmed set itself");

    // bounds
    int bounds_n = 0;
    std::int64_t bounds_l = 0;
    double h_param = 0.0;
    std::int64_t alpha_override = -1;
    auto* bounds = app.add_subcommand("bounds", "all bound estimates for (n, l)");
    bounds->add_option("n", bounds_n)->required();
    bounds->add_option("l", bounds_l)->required();
    bounds->add_option("--h-param", h_param, "o(1) slack stand-in");
    bounds->add_option("--alpha", alpha_override, "exact alpha override");

    // alpha
    int alpha_n = 0;
    auto* alpha_cmd = app.add_subcommand("alpha", "independence number");
    alpha_cmd->add_option("n", alpha_n)->required();

    // decompose
    int dec_n = 0;
    std::string dec_file;
    auto* decompose = app.add_subcommand("decompose", "type-1/2/3 decomposition of an independent set");
    decompose->add_option("n", dec_n)->required();
    decompose->add_option("file", dec_file, "subset file")->required();

    // verify
    int ver_n = 0;
    int ver_samples = 100;
    std::string ver_file;
    auto* verify = app.add_subcommand("verify", "complement accounting and bound sandwich checks");
    verify->add_option("n", ver_n)->required();
    verify->add_option("--samples", ver_samples);
    verify->add_option("--file", ver_file, "check this subset instead of random ones");

    // sweep
    int sw_nmin = 0, sw_nmax = 0, sw_nstep = 1;
    std::vector<std::int64_t> sw_l;
    std::vector<double> sw_c;
    std::vector<std::string> sw_methods{"construct"};
    auto* sweep = app.add_subcommand("sweep", "batch evaluation over (n, l) grid");
    sweep->add_option("--n-min", sw_nmin)->required();
    sweep->add_option("--n-max", sw_nmax)->required();
    sweep->add_option("--n-step", sw_nstep);
    sweep->add_option("--l", sw_l, "absolute l values");
    sweep->add_option("--c", sw_c, "c values, converted via l = round((1-c)*C(n,3))");
    sweep->add_option("--methods", sw_methods)->delimiter(',');

    auto* crossover = app.add_subcommand("crossover", "c* threshold readings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats) {
            g31::GraphParams p = g31::graph_stats(stats_n);
            emit(json{{"n", p.n},
                      {"vertices", p.vertex_count},
                      {"degree", p.degree},
                      {"edges", p.edge_count}}
                     .dump(),
                 out_path);
        } else if (*exact) {
            g31::SolveResult r;
            if (exact_method == "oracle") {
                r = g31::brute_force_r(exact_n, exact_l);
            } else {
                g31::SearchConfig cfg;
                cfg.node_budget = budget;
                cfg.threads = threads;
                cfg.seed = seed;
                cfg.root_symmetry = symmetry;
                r = g31::branch_and_bound_r(exact_n, exact_l, cfg);
            }
            if (!witness_out.empty()) {
                json wf{{"n", r.n}, {"triples", witness_json(r.witness)},
                        {"hex", g31::subset_to_hex(r.witness)}};
                emit(wf.dump(), witness_out);
            }
            emit(solve_result_json(r).dump(), out_path);
        } else if (*heuristic) {
            g31::SearchConfig cfg;
            cfg.seed = seed;
            cfg.restarts = restarts;
            cfg.threads = threads;
            emit(solve_result_json(g31::local_search_r(heur_n, heur_l, cfg)).dump(),
                 out_path);
        } else if (*construct) {
            g31::ConstructionPlan plan = g31::build_construction(cons_n, cons_l);
            json blocks = json::array();
            for (auto [lo, hi] : plan.blocks)
                blocks.push_back({lo, hi});
            json j{{"n", plan.n},
                   {"l", plan.l},
                   {"t", plan.t},
                   {"num_blocks", plan.num_blocks},
                   {"blocks", blocks},
                   {"raw_size", plan.raw_size},
                   {"predicted_edges", plan.predicted_edges},
                   {"actual_edges", plan.actual_edges}};
            if (full_set)
                j["trimmed_set"] = witness_json(plan.trimmed);
            emit(j.dump(), out_path);
        } else if (*bounds) {
            std::optional<std::int64_t> alpha;
            if (alpha_override >= 0)
                alpha = alpha_override;
            auto es = all_estimates(bounds_n, bounds_l, alpha, h_param);
            if (format == "csv") {
                std::string csv = "source,direction,validity,value\n";
                for (const auto& e : es)
                    csv += g31::to_string(e.source) + "," + g31::to_string(e.direction) +
                           "," + g31::to_string(e.validity) + "," +
                           std::to_string(e.value) + "\n";
                emit(csv, out_path);
            } else {
                json arr = json::array();
                for (const auto& e : es)
                    arr.push_back(estimate_json(e));
                emit(arr.dump(), out_path);
            }
        } else if (*alpha_cmd) {
            g31::Graph g(alpha_n);
            g31::AlphaResult a = g31::independence_number(g, budget);
            emit(json{{"n", a.n},
                      {"alpha", a.alpha},
                      {"proven", a.proven},
                      {"witness", witness_json(a.witness)}}
                     .dump(),
                 out_path);
        } else if (*decompose) {
            g31::Graph g(dec_n);
            g31::VertexSubset U = load_subset(dec_n, dec_file);
            g31::Decomposition d = g31::decompose_claim1(g, U);
            json parts = json::array();
            for (const auto& part : d.parts) {
                json members = json::array();
                for (const g31::Triple& t : part.members)
                    members.push_back({t.e[0], t.e[1], t.e[2]});
                std::string kind = part.type.kind == g31::FamilyKind::type1 ? "type1"
                                   : part.type.kind == g31::FamilyKind::type2 ? "type2"
                                                                              : "type3";
                parts.push_back(json{{"kind", kind},
                                     {"params", part.type.params},
                                     {"members", members},
                                     {"support", part.support}});
            }
            emit(json{{"ok", d.ok}, {"failure", d.failure}, {"parts", parts}}.dump(),
                 out_path);
            if (!d.ok)
                return kExitVerifyFailed;
        } else if (*verify) {
            g31::Graph g(ver_n);
            const g31::GraphParams& p = g.params();
            std::mt19937_64 rng(seed);
            int failures = 0;
            int checked = 0;
            auto check_one = [&](const g31::VertexSubset& W) {
                ++checked;
                g31::EdgeCountReport rep = g.complement_accounting(W);
                bool ok = rep.edges_within + rep.edges_complement + rep.edges_crossing ==
                              p.edge_count &&
                          rep.degree_inequality_holds;
                // any |W|-set is an upper witness, so it must clear the exact
                // finite-n lower bound of Theorem 3 point 4
                g31::Rational low = g31::t3_point4_exact(ver_n, W.size());
                if (g31::Rational::integer(rep.edges_within) < low)
                    ok = false;
                if (!ok)
                    ++failures;
            };
            if (!ver_file.empty()) {
                check_one(load_subset(ver_n, ver_file));
            } else {
                for (int s = 0; s < ver_samples; ++s) {
                    std::int64_t l = static_cast<std::int64_t>(
                        rng() % static_cast<std::uint64_t>(p.vertex_count + 1));
                    g31::VertexSubset W(ver_n);
                    std::vector<std::int64_t> pool(p.vertex_count);
                    for (std::int64_t i = 0; i < p.vertex_count; ++i)
                        pool[i] = i;
                    for (std::int64_t i = 0; i < l; ++i) {
                        std::int64_t j = i + static_cast<std::int64_t>(
                                                 rng() % (p.vertex_count - i));
                        std::swap(pool[i], pool[j]);
                        W.add(pool[i]);
                    }
                    check_one(W);
                }
            }
            emit(json{{"n", ver_n}, {"checked", checked}, {"failures", failures}}.dump(),
                 out_path);
            if (failures > 0)
                return kExitVerifyFailed;
        } else if (*sweep) {
            if (sw_nmin <= 0 || sw_nmax < sw_nmin || sw_nstep <= 0) {
                std::cerr << "sweep: bad n range\n";
                return kExitUsage;
            }
            std::string csv = "n,l,c_n,value,direction,validity,source,elapsed_ms\n";
            json rows = json::array();
            for (int n = sw_nmin; n <= sw_nmax; n += sw_nstep) {
                std::int64_t total = g31::binomial(n, 3);
                std::vector<std::int64_t> ls(sw_l.begin(), sw_l.end());
                for (double c : sw_c) {
                    // round half toward smaller l
                    double raw = (1.0 - c) * static_cast<double>(total);
                    std::int64_t l = static_cast<std::int64_t>(std::ceil(raw - 0.5));
                    ls.push_back(std::clamp<std::int64_t>(l, 0, total));
                }
                for (std::int64_t l : ls) {
                    if (l < 0 || l > total)
                        continue;
                    for (const std::string& m : sw_methods) {
                        double t0 = now_ms();
                        std::vector<g31::BoundEstimate> es;
                        if (m == "construct") {
                            if (l >= 1)
                                es.push_back(
                                    g31::predicted_upper_bound(n, l).exact_construction);
                        } else if (m == "bounds") {
                            es = all_estimates(n, l, std::nullopt, 0.0);
                        } else if (m == "heuristic") {
                            g31::SearchConfig cfg;
                            cfg.seed = seed;
                            cfg.restarts = restarts;
                            g31::SolveResult r = g31::local_search_r(n, l, cfg);
                            es.push_back({static_cast<double>(r.min_edges),
                                          g31::Direction::upper,
                                          g31::Validity::exact_finite_n,
                                          g31::Source::heuristic, 0.0});
                        } else if (m == "exact") {
                            g31::SearchConfig cfg;
                            cfg.node_budget = budget;
                            g31::SolveResult r = g31::branch_and_bound_r(n, l, cfg);
                            es.push_back({static_cast<double>(r.min_edges),
                                          r.status == g31::SolveStatus::proven_optimal
                                              ? g31::Direction::asymptotic_equality
                                              : g31::Direction::upper,
                                          g31::Validity::exact_finite_n,
                                          g31::Source::exact_solver, 0.0});
                        } else {
                            std::cerr << "sweep: unknown method " << m << "\n";
                            return kExitUsage;
                        }
                        double ms = now_ms() - t0;
                        double c_val = g31::c_fraction(n, l).to_double();
                        for (const auto& e : es) {
                            if (format == "csv") {
                                char buf[64];
                                std::snprintf(buf, sizeof(buf), "%.17g", e.value);
                                csv += std::to_string(n) + "," + std::to_string(l) + "," +
                                       std::to_string(c_val) + "," + buf + "," +
                                       g31::to_string(e.direction) + "," +
                                       g31::to_string(e.validity) + "," +
                                       g31::to_string(e.source) + "," +
                                       std::to_string(ms) + "\n";
                            } else {
                                json row = estimate_json(e);
                                row["n"] = n;
                                row["l"] = l;
                                row["c_n"] = c_val;
                                row["elapsed_ms"] = ms;
                                rows.push_back(row);
                            }
                        }
                    }
                }
            }
            emit(format == "csv" ? csv : rows.dump(), out_path);
        } else if (*crossover) {
            emit(json{{"normalized_threshold", g31::crossover_normalized()},
                      {"alternative_threshold", g31::crossover_alternative()},
                      {"printed_prefix", "0.486"},
                      {"literal_holds_at_n1e6_c0.1",
                       g31::crossover_literal_holds(1e6, 0.1)}}
                     .dump(),
                 out_path);
        }
    } catch (const g31::BudgetRefusal& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
