#pragma once

#include "fcalc.hpp"
#include "generators.hpp"
#include "graph_io.hpp"
#include "intersection.hpp"
#include "poly_json.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace cliquepoly::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1, // internal inconsistency or failed verification
    exit_io = 2,
    exit_usage = 64,
};

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::size_t parse_size(const std::string& text, const char* what) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text.front() == '-') {
        throw UsageError(std::string("expected a non-negative integer for ") + what + ", got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

inline double parse_probability(const std::string& text) {
    std::size_t pos = 0;
    double value = -1;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || !(value >= 0.0 && value <= 1.0)) {
        throw UsageError("expected an edge probability in [0, 1], got '" + text + "'");
    }
    return value;
}

inline std::string render_t(const UniPoly& p) { return to_string(p, "t", " "); }
inline std::string render_t(const RatPoly& p) { return to_string(p, "t", " "); }

inline Graph generate_named(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
    const auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count) {
            throw UsageError(std::string("usage: gen ") + usage);
        }
    };
    if (const auto family = parse_family(kind)) {
        need(1, (kind + " N").c_str());
        try {
            return generate(*family, parse_size(params[0], "N"));
        } catch (const GraphError& e) {
            throw UsageError(e.what());
        }
    }
    if (kind == "er") {
        need(2, "er N P [--seed S]");
        return erdos_renyi(parse_size(params[0], "N"), parse_probability(params[1]), seed);
    }
    if (kind == "torus16") {
        need(0, "torus16");
        return torus_16();
    }
    if (kind == "torus") {
        need(2, "torus ROWS COLS");
        try {
            return triangulated_torus(parse_size(params[0], "ROWS"), parse_size(params[1], "COLS"));
        } catch (const GraphError& e) {
            throw UsageError(e.what());
        }
    }
    if (kind == "barycentric") {
        need(1, "barycentric FILE");
        return barycentric(load_graph(params[0])).graph;
    }
    if (kind == "join") {
        need(2, "join FILE FILE");
        return join(load_graph(params[0]), load_graph(params[1]));
    }
    throw UsageError("unknown graph kind '" + kind +
                     "' (complete, cycle, path, star, wheel, er, torus, torus16, barycentric, join)");
}

inline UniPoly f_function(const Graph& g, const std::string& algo, std::uint64_t seed, const ComputeOptions& options) {
    if (algo == "brute") {
        return f_vector_to_poly(f_vector_bruteforce(g));
    }
    if (algo == "gb") {
        return f_function_gb(g, options);
    }
    return f_function_ph(g, seed, options);
}

inline std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact f-vectors, indices, curvatures and Wu characteristics of finite simple graphs", "cliquepoly"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool json = false;
    unsigned threads = 1;
    std::string algo = "ph";
    std::string file;
    std::string file2;

    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "Worker threads (results do not depend on it)")
            ->check(CLI::Range(1u, 1024u));
    };

    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    std::string kind;
    std::vector<std::string> params;
    std::string output;
    gen->add_option("kind", kind, "complete|cycle|path|star|wheel N, er N P, torus R C, torus16, barycentric FILE, join FILE FILE")
        ->required();
    gen->add_option("params", params, "Kind parameters");
    gen->add_option("--seed", seed, "Seed for random kinds");
    gen->add_option("-o,--output", output, "Output file (.json for JSON, otherwise edge list); stdout if omitted");

    auto* fvector = app.add_subcommand("fvector", "f-vector and f-function");
    fvector->add_option("file", file, "Graph file")->required();
    fvector->add_option("--algo", algo, "brute|gb|ph")->check(CLI::IsMember({"brute", "gb", "ph"}));
    fvector->add_option("--seed", seed);
    fvector->add_flag("--json", json);
    add_threads(fvector);

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("file", file, "Graph file")->required();
    euler->add_option("--seed", seed);
    euler->add_flag("--json", json);

    bool with_poly = false;
    auto* curv = app.add_subcommand("curvature", "Per-vertex curvature");
    curv->add_option("file", file, "Graph file")->required();
    curv->add_flag("--poly", with_poly, "Also print the curvature polynomial K_v(t)");
    curv->add_flag("--json", json);

    auto* indices = app.add_subcommand("indices", "Per-vertex index polynomials for a seeded vertex function");
    indices->add_option("file", file, "Graph file")->required();
    indices->add_option("--seed", seed)->required();
    indices->add_flag("--json", json);

    std::size_t cutoff = IntersectionOptions{}.direct_cutoff;
    auto* wu = app.add_subcommand("wu", "f-matrix, f(t,s) and Wu characteristic");
    wu->add_option("file", file, "Graph file")->required();
    wu->add_option("file2", file2, "Second graph sharing the vertex ids (defaults to the first)");
    wu->add_option("--algo", algo, "brute|ph")->check(CLI::IsMember({"brute", "ph"}));
    wu->add_option("--seed", seed);
    wu->add_option("--cutoff", cutoff, "Vertex count at or below which pairs are enumerated directly");
    wu->add_flag("--json", json);
    add_threads(wu);

    auto* verify = app.add_subcommand("verify", "Check the Poincare-Hopf and Gauss-Bonnet identities");
    verify->add_option("file", file, "Graph file")->required();
    verify->add_option("--seed", seed)->required();
    verify->add_flag("--json", json);

    std::vector<std::size_t> n_list{10, 20, 30, 40, 50};
    double p = 0.5;
    std::size_t samples = 10;
    auto* bench = app.add_subcommand("bench", "Mean time to compute f on Erdos-Renyi graphs");
    bench->add_option("--n-list", n_list, "Comma-separated sizes")->delimiter(',');
    bench->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    bench->add_option("--samples", samples, "Graphs per size")->check(CLI::PositiveNumber);
    bench->add_option("--algo", algo, "brute|gb|ph")->check(CLI::IsMember({"brute", "gb", "ph"}));
    bench->add_option("--seed", seed);
    add_threads(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    ComputeOptions compute;
    compute.threads = threads;

    try {
        if (gen->parsed()) {
            const Graph g = detail::generate_named(kind, params, seed);
            if (output.empty()) {
                write_edge_list(out, g);
            } else {
                save_graph(output, g);
            }
            return exit_ok;
        }

        if (fvector->parsed()) {
            const Graph g = load_graph(file);
            const UniPoly f = detail::f_function(g, algo, seed, compute);
            const FVector fv = poly_to_f_vector(f);
            if (json) {
                out << nlohmann::json{{"algo", algo}, {"f_vector", to_json(fv)}, {"f", to_json(f)}}.dump() << "\n";
            } else {
                out << "f-vector = " << fv << "\n";
                out << "f = " << detail::render_t(f) << "\n";
            }
            return exit_ok;
        }

        if (euler->parsed()) {
            const Integer chi = euler_characteristic(load_graph(file), seed);
            if (json) {
                out << nlohmann::json{{"euler_characteristic", integer_to_json(chi)}}.dump() << "\n";
            } else {
                out << chi << "\n";
            }
            return exit_ok;
        }

        if (curv->parsed()) {
            const Graph g = load_graph(file);
            const CurvatureReport report = curvature_report(g);
            if (json) {
                auto rows = nlohmann::json::array();
                for (const auto& [v, k] : report.values) {
                    nlohmann::json row{{"id", v}, {"K", rational_to_json(k)}};
                    if (with_poly) {
                        row["K_t"] = to_json(report.polys.at(v));
                    }
                    rows.push_back(std::move(row));
                }
                out << nlohmann::json{{"vertices", std::move(rows)}, {"sum", integer_to_json(report.total)}}.dump()
                    << "\n";
            } else {
                out << "vertex\tK" << (with_poly ? "\tK(t)" : "") << "\n";
                for (const auto& [v, k] : report.values) {
                    out << v << "\t" << k;
                    if (with_poly) {
                        out << "\t" << detail::render_t(report.polys.at(v));
                    }
                    out << "\n";
                }
                out << "sum\t" << report.total << "\n";
            }
            return exit_ok;
        }

        if (indices->parsed()) {
            const Graph g = load_graph(file);
            const VertexFunction f = random_vertex_function(g, seed);
            const IndexReport report = index_report(g, f, seed);
            Integer sum = 0;
            for (const auto& [v, i] : report.values) {
                sum += i;
            }
            const UniPoly total = index_sum(report);
            if (json) {
                auto rows = nlohmann::json::array();
                for (const auto& [v, poly] : report.polys) {
                    rows.push_back({{"id", v},
                                    {"rank", f.rank(v)},
                                    {"index_poly", to_json(poly)},
                                    {"index", integer_to_json(report.values.at(v))}});
                }
                out << nlohmann::json{{"seed", seed}, {"vertices", std::move(rows)}, {"sum", integer_to_json(sum)},
                                      {"f", to_json(total)}}
                           .dump()
                    << "\n";
            } else {
                out << "vertex\trank\tindex_poly\tindex\n";
                for (const auto& [v, poly] : report.polys) {
                    out << v << "\t" << f.rank(v) << "\t" << detail::render_t(poly) << "\t" << report.values.at(v)
                        << "\n";
                }
                out << "sum\t" << sum << "\n";
                out << "f = " << detail::render_t(total) << "\n";
            }
            return exit_ok;
        }

        if (wu->parsed()) {
            const Graph g = load_graph(file);
            const Graph h = file2.empty() ? g : load_graph(file2);
            BiPoly f;
            if (algo == "brute") {
                f = f_matrix_bruteforce(g, h);
            } else {
                IntersectionOptions options;
                options.direct_cutoff = cutoff;
                options.threads = threads;
                f = f_matrix_ph(g, h, seed, options);
            }
            const Integer omega = bipoly_eval(f, Integer(-1), Integer(-1));
            const auto matrix = f.dense();
            if (json) {
                auto m = nlohmann::json::array();
                for (const auto& row : matrix) {
                    auto r = nlohmann::json::array();
                    for (const auto& c : row) {
                        r.push_back(integer_to_json(c));
                    }
                    m.push_back(std::move(r));
                }
                out << nlohmann::json{{"algo", algo}, {"f_matrix", std::move(m)}, {"f", to_json(f)},
                                      {"omega", integer_to_json(omega)}}
                           .dump()
                    << "\n";
            } else {
                out << "# f-matrix: rows = dimension in G, columns = dimension in H\n";
                for (const auto& row : matrix) {
                    for (std::size_t j = 0; j < row.size(); ++j) {
                        out << (j ? "\t" : "") << row[j];
                    }
                    out << "\n";
                }
                out << "f(t,s) = " << to_string(f, "t", "s", " ") << "\n";
                out << "omega = " << omega << "\n";
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            const Graph g = load_graph(file);
            const VertexFunction f = random_vertex_function(g, seed);
            const bool ph_ok = verify_ph_identity(g, f);
            const Integer chi = 1 - f_vector_to_poly(f_vector_bruteforce(g)).evaluate(Integer(-1));
            const Integer curvature_sum = curvature_report(g).total;
            const bool gb_ok = curvature_sum == chi && f_function_gb(g) == f_vector_to_poly(f_vector_bruteforce(g));
            if (json) {
                out << nlohmann::json{{"poincare_hopf", ph_ok},
                                      {"gauss_bonnet", gb_ok},
                                      {"euler_characteristic", integer_to_json(chi)}}
                           .dump()
                    << "\n";
            } else {
                out << "poincare-hopf: " << (ph_ok ? "ok" : "MISMATCH") << "\n";
                out << "gauss-bonnet: " << (gb_ok ? "ok" : "MISMATCH") << " (chi = " << chi
                    << ", curvature sum = " << curvature_sum << ")\n";
            }
            if (!ph_ok || !gb_ok) {
                err << "verification failed\n";
                return exit_failure;
            }
            return exit_ok;
        }

        if (bench->parsed()) {
            out << "n\tsamples\tmean_seconds\n";
            for (const std::size_t n : n_list) {
                double total = 0;
                for (std::size_t s = 0; s < samples; ++s) {
                    const Graph g = erdos_renyi(n, p, mix_seed(seed, {n, s}));
                    const auto start = std::chrono::steady_clock::now();
                    const UniPoly f = detail::f_function(g, algo, mix_seed(seed, {n, s, 1}), compute);
                    const auto stop = std::chrono::steady_clock::now();
                    if (f.coeff(0) != 1) {
                        throw InconsistencyError("f-function with constant term other than 1");
                    }
                    total += std::chrono::duration<double>(stop - start).count();
                }
                out << n << "\t" << samples << "\t" << detail::fixed6(total / static_cast<double>(samples)) << "\n";
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return exit_failure;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace cliquepoly::cli
