// Command-line driver for biharmonic convergence studies on polygonal meshes
// with optionally curved boundary edges.  Reads a flat key=value config file,
// lets flags override it, runs the refinement sequence and writes results.csv
// plus per-norm h/error tables into the output directory.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include <c1vem/c1vem.hpp>

int main(int argc, char** argv) {
    CLI::App app{"C1 virtual element convergence study for the clamped biharmonic problem"};

    std::string config_path, levels_str;
    c1vem::StudyConfig cfg;

    app.add_option("--config", config_path, "key=value configuration file");
    auto* opt_degree = app.add_option("--degree", cfg.degree, "polynomial order k >= 2");
    auto* opt_family =
        app.add_option("--family", cfg.family, "mesh family: quad | voronoi");
    auto* opt_levels =
        app.add_option("--levels", levels_str, "comma separated refinement levels");
    auto* opt_mode =
        app.add_option("--mode", cfg.mode, "boundary handling: curved | straight");
    auto* opt_domain = app.add_option("--domain", cfg.domain, "domain: channel | square");
    auto* opt_solution =
        app.add_option("--solution", cfg.solution, "manufactured solution name");
    auto* opt_out = app.add_option("--out", cfg.out_dir, "output directory");
    auto* opt_seed = app.add_option("--seed", cfg.seed, "random seed for Voronoi meshes");
    auto* opt_factor = app.add_option("--voronoi-seeds", cfg.seed_factor,
                                      "Voronoi seed count factor (seeds ~ factor * n^2)");
    auto* opt_lloyd = app.add_option("--lloyd", cfg.lloyd, "Lloyd smoothing iterations");
    auto* opt_rho = app.add_option("--rho", cfg.rho, "mesh regularity threshold");
    auto* flag_dump =
        app.add_flag("--dump-matrix", "write the assembled matrix as row/col/value triplets");
    auto* flag_quiet = app.add_flag("--quiet", "suppress progress output");
    auto* flag_no_meshes = app.add_flag("--no-meshes", "do not write per-level mesh files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            // config first, then explicit flags take precedence
            c1vem::StudyConfig file_cfg = c1vem::load_config(config_path);
            if (!*opt_degree) cfg.degree = file_cfg.degree;
            if (!*opt_family) cfg.family = file_cfg.family;
            if (!*opt_levels) cfg.levels = file_cfg.levels;
            if (!*opt_mode) cfg.mode = file_cfg.mode;
            if (!*opt_domain) cfg.domain = file_cfg.domain;
            if (!*opt_solution) cfg.solution = file_cfg.solution;
            if (!*opt_out) cfg.out_dir = file_cfg.out_dir;
            if (!*opt_seed) cfg.seed = file_cfg.seed;
            if (!*opt_factor) cfg.seed_factor = file_cfg.seed_factor;
            if (!*opt_lloyd) cfg.lloyd = file_cfg.lloyd;
            if (!*opt_rho) cfg.rho = file_cfg.rho;
            if (!*flag_dump) cfg.dump_matrix = file_cfg.dump_matrix;
            if (!*flag_no_meshes) cfg.write_meshes = file_cfg.write_meshes;
        }
        if (*opt_levels) cfg.levels = c1vem::parse_level_list(levels_str);
        if (*flag_dump) cfg.dump_matrix = true;
        if (*flag_quiet) cfg.quiet = true;
        if (*flag_no_meshes) cfg.write_meshes = false;
        if (cfg.degree < 2) throw std::invalid_argument("degree must be at least 2");

        const c1vem::StudyReport report = c1vem::run_study(cfg);
        std::cout << report.csv();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
