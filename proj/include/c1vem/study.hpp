#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "mesh_gen.hpp"
#include "mesh_io.hpp"
#include "postprocess.hpp"
#include "solutions.hpp"

namespace c1vem {

/// Settings of one convergence study.  The level list is interpreted by the
/// mesh family: for the structured family level n gives an n x n grid, for
/// the Voronoi family it sets the seed count via seed_factor * n^2.
struct StudyConfig {
    int degree = 3;
    std::string family = "quad";     // quad | voronoi
    std::vector<int> levels = {8, 16, 32, 64};
    std::string mode = "curved";     // curved | straight
    std::string domain = "channel";  // channel | square
    std::string solution = "channel";
    std::string out_dir = ".";
    unsigned long long seed = 1;
    double seed_factor = 0.55;
    int lloyd = 100;
    double rho = 0.1;
    bool dump_matrix = false;
    bool write_meshes = true;
    bool quiet = false;
};

inline std::vector<int> parse_level_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty level list");
    return out;
}

/// Flat key=value configuration, '#' starts a comment.  Unknown keys are an
/// error so that typos do not silently fall back to defaults.
inline void apply_config_line(StudyConfig& cfg, const std::string& key,
                              const std::string& value) {
    if (key == "degree")
        cfg.degree = std::stoi(value);
    else if (key == "family")
        cfg.family = value;
    else if (key == "levels")
        cfg.levels = parse_level_list(value);
    else if (key == "mode")
        cfg.mode = value;
    else if (key == "domain")
        cfg.domain = value;
    else if (key == "solution")
        cfg.solution = value;
    else if (key == "out")
        cfg.out_dir = value;
    else if (key == "seed")
        cfg.seed = std::stoull(value);
    else if (key == "voronoi-seeds")
        cfg.seed_factor = std::stod(value);
    else if (key == "lloyd")
        cfg.lloyd = std::stoi(value);
    else if (key == "rho")
        cfg.rho = std::stod(value);
    else if (key == "dump-matrix")
        cfg.dump_matrix = value == "1" || value == "true";
    else if (key == "write-meshes")
        cfg.write_meshes = value == "1" || value == "true";
    else
        throw std::invalid_argument("unknown config key: " + key);
}

inline StudyConfig load_config(const std::string& path, StudyConfig cfg = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        apply_config_line(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    return cfg;
}

inline int voronoi_seed_count(double factor, int level) {
    return std::max(4, static_cast<int>(std::llround(factor * level * level)));
}

inline CurvedMesh build_study_mesh(const StudyConfig& cfg, int level) {
    CurvedMesh mesh;
    if (cfg.family == "quad") {
        mesh = cfg.domain == "square" ? generate_square_quad_mesh(level)
                                      : generate_channel_quad_mesh(level);
    } else if (cfg.family == "voronoi") {
        const int n_seeds = voronoi_seed_count(cfg.seed_factor, level);
        const unsigned long long seed = cfg.seed * 1000003ULL + static_cast<unsigned>(level);
        if (cfg.domain == "square") {
            CurvedMesh sq = generate_square_voronoi_mesh(n_seeds, seed, cfg.lloyd);
            mesh = std::move(sq);
        } else {
            mesh = generate_channel_voronoi_mesh(n_seeds, seed, cfg.lloyd);
        }
    } else {
        throw std::invalid_argument("unknown mesh family: " + cfg.family);
    }
    if (cfg.mode == "straight")
        mesh = straighten_boundary(mesh);
    else if (cfg.mode != "curved")
        throw std::invalid_argument("unknown boundary mode: " + cfg.mode);
    return mesh;
}

inline void dump_matrix_triplets(const Eigen::SparseMatrix<double>& A,
                                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    char buf[96];
    for (int col = 0; col < A.outerSize(); ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, col); it; ++it) {
            std::snprintf(buf, sizeof buf, "%ld %ld %.16e\n", static_cast<long>(it.row()),
                          static_cast<long>(it.col()), it.value());
            out << buf;
        }
}

inline StudyReport run_study(const StudyConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const ManufacturedSolution sol = solution_by_name(cfg.solution);

    StudyReport report;
    for (std::size_t li = 0; li < cfg.levels.size(); ++li) {
        const int level = cfg.levels[li];
        const CurvedMesh mesh = build_study_mesh(cfg, level);

        const RegularityReport reg = validate_mesh(mesh, cfg.rho);
        if (!reg.pass())
            throw std::runtime_error("level " + std::to_string(level) + ": " +
                                     std::to_string(reg.violations.size()) +
                                     " mesh regularity violations at rho = " +
                                     std::to_string(cfg.rho) + " (worst ratio " +
                                     std::to_string(reg.min_edge_ratio) + ")");

        if (cfg.write_meshes)
            write_mesh(mesh, cfg.out_dir + "/mesh_" + std::to_string(level) + ".json");

        const LinearSystem sys = assemble_system(mesh, cfg.degree, sol.load);
        if (cfg.dump_matrix)
            dump_matrix_triplets(sys.A,
                                 cfg.out_dir + "/matrix_" + std::to_string(level) + ".txt");

        Eigen::VectorXd prescribed;
        if (!sol.homogeneous_clamped)
            prescribed = interpolate_global(sys.map, mesh, sol.value, sol.gradient);
        const Eigen::VectorXd u = solve_clamped(sys, prescribed);
        const ErrorTriple err = compute_errors(mesh, cfg.degree, u, sol);

        StudyRow row;
        row.level = level;
        row.h = mesh.mean_mesh_size();
        row.ndof = sys.map.n_dofs;
        row.err = err.rel;
        report.rows.push_back(row);
        if (!cfg.quiet) {
            std::fprintf(stderr, "level %d: h = %.4e, ndof = %d, errors %.3e / %.3e / %.3e\n",
                         level, row.h, row.ndof, row.err[0], row.err[1], row.err[2]);
        }
    }
    report.finalize_rates();

    std::ofstream csv(cfg.out_dir + "/results.csv");
    csv << report.csv();
    for (int c = 0; c < 3; ++c) {
        std::ofstream dat(cfg.out_dir + "/errs_" + std::to_string(c) + ".dat");
        dat << report.dat(c);
    }
    return report;
}

}  // namespace c1vem
