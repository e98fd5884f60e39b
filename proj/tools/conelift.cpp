#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <cstdlib>

#include <CLI11.hpp>

#include "conelift/apps.hpp"
#include "conelift/hilbert.hpp"
#include "conelift/io.hpp"
#include "conelift/rays.hpp"

using namespace conelift;

namespace {

struct CommonOpts {
    std::string output;
    bool quiet = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-o,--output", opts.output, "output file (default stdout)");
    cmd->add_flag("--quiet", opts.quiet, "suppress progress messages");
    cmd->add_option("--threads", opts.threads, "worker threads for candidate generation")
        ->check(CLI::PositiveNumber);
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + opts.output);
    out << text;
}

std::string render(const Mat& rows, size_t cols) {
    std::ostringstream os;
    write_matrix(os, rows, cols);
    return os.str();
}

// input generators for hilbert/rays: either direct lattice generators
// or the integer kernel of a constraint matrix
Mat load_generators(const std::string& lattice_file,
                    const std::string& kernel_file, size_t& dim) {
    Mat gens;
    if (!lattice_file.empty()) {
        gens = read_matrix_file(lattice_file);
        if (gens.empty())
            throw std::invalid_argument("lattice file has no generator rows");
    } else {
        Mat A = read_matrix_file(kernel_file);
        if (A.empty()) throw std::invalid_argument("kernel matrix has no rows");
        gens = integer_kernel(A);
        dim = A[0].size();
        return gens;
    }
    dim = gens[0].size();
    return gens;
}

Vec read_vector_file(const std::string& path) {
    Mat m = read_matrix_file(path);
    if (m.size() != 1)
        throw std::invalid_argument("expected a single-row vector file: " + path);
    return m[0];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"project-and-lift Hilbert basis and extreme ray computations"};
    app.require_subcommand(1);

    // hilbert
    CommonOpts h_opts;
    std::string h_lattice, h_kernel, h_bounds;
    std::string h_strategy = "input-order", h_engine = "graded";
    auto* h_cmd = app.add_subcommand("hilbert", "minimal generators of the lattice-orthant monoid");
    auto* h_lat = h_cmd->add_option("--lattice", h_lattice, "lattice generator file");
    auto* h_ker = h_cmd->add_option("--kernel", h_kernel, "constraint matrix file (lattice = its integer kernel)");
    h_lat->excludes(h_ker);
    h_ker->excludes(h_lat);
    h_cmd->add_option("--bounds", h_bounds, "per-coordinate bounds v1,...,vn (inf allowed)");
    h_cmd->add_option("--strategy", h_strategy, "column selection: input-order|min-pairs|max-zeros");
    h_cmd->add_option("--engine", h_engine, "graded|completion");
    add_common(h_cmd, h_opts);

    // rays
    CommonOpts r_opts;
    std::string r_lattice, r_kernel;
    auto* r_cmd = app.add_subcommand("rays", "extreme rays of span(generators) in the orthant");
    auto* r_lat = r_cmd->add_option("--lattice", r_lattice, "generator file");
    auto* r_ker = r_cmd->add_option("--kernel", r_kernel, "constraint matrix file");
    r_lat->excludes(r_ker);
    r_ker->excludes(r_lat);
    add_common(r_cmd, r_opts);

    // dual
    CommonOpts d_opts;
    std::string d_file;
    auto* d_cmd = app.add_subcommand("dual", "extreme rays and Hilbert basis of the dual cone");
    d_cmd->add_option("genfile", d_file, "generator matrix file")->required();
    add_common(d_cmd, d_opts);

    // hilbert-from-gens
    CommonOpts g_opts;
    std::string g_file;
    auto* g_cmd = app.add_subcommand("hilbert-from-gens", "Hilbert basis of the cone spanned by the given generators");
    g_cmd->add_option("genfile", g_file, "generator matrix file")->required();
    add_common(g_cmd, g_opts);

    // decompose
    CommonOpts de_opts;
    std::string de_kernel, de_target;
    auto* de_cmd = app.add_subcommand("decompose", "write a kernel vector as a sum of Hilbert basis elements");
    de_cmd->add_option("--kernel", de_kernel, "constraint matrix file")->required();
    de_cmd->add_option("--target", de_target, "target vector file")->required();
    add_common(de_cmd, de_opts);

    // improve
    CommonOpts im_opts;
    std::string im_matrix, im_rhs, im_cost, im_start;
    auto* im_cmd = app.add_subcommand("improve", "improve a binary solution of Az = b or certify optimality");
    im_cmd->add_option("--matrix", im_matrix)->required();
    im_cmd->add_option("--rhs", im_rhs)->required();
    im_cmd->add_option("--cost", im_cost)->required();
    im_cmd->add_option("--start", im_start)->required();
    add_common(im_cmd, im_opts);

    // magic-system
    CommonOpts mg_opts;
    size_t mg_n = 0;
    bool mg_nodiag = false;
    auto* mg_cmd = app.add_subcommand("magic-system", "equality system of n x n magic squares");
    mg_cmd->add_option("n", mg_n, "side length")->required()->check(CLI::PositiveNumber);
    mg_cmd->add_flag("--no-diagonals", mg_nodiag, "omit the diagonal constraints");
    add_common(mg_cmd, mg_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CommonOpts* active = nullptr;
    if (*h_cmd) active = &h_opts;
    else if (*r_cmd) active = &r_opts;
    else if (*d_cmd) active = &d_opts;
    else if (*g_cmd) active = &g_opts;
    else if (*de_cmd) active = &de_opts;
    else if (*im_cmd) active = &im_opts;
    else if (*mg_cmd) active = &mg_opts;
    if (active && active->quiet) setenv("CONELIFT_LOG", "error", 1);

    try {
        if (*h_cmd) {
            if (h_lattice.empty() == h_kernel.empty())
                throw CLI::ValidationError("hilbert", "exactly one of --lattice / --kernel is required");
            size_t dim = 0;
            Mat gens = load_generators(h_lattice, h_kernel, dim);
            Bounds bounds = h_bounds.empty() ? Bounds::unbounded(dim)
                                             : parse_bounds(h_bounds);
            std::vector<Vec> basis;
            if (gens.empty()) {
                // trivial lattice
            } else {
                basis = minimal_generators(gens, bounds,
                                           strategy_from_name(h_strategy),
                                           engine_from_name(h_engine),
                                           h_opts.threads);
            }
            emit(h_opts, render(basis, dim));
        } else if (*r_cmd) {
            if (r_lattice.empty() == r_kernel.empty())
                throw CLI::ValidationError("rays", "exactly one of --lattice / --kernel is required");
            size_t dim = 0;
            Mat gens = load_generators(r_lattice, r_kernel, dim);
            std::vector<Vec> rays;
            if (!gens.empty()) rays = extreme_rays(gens);
            emit(r_opts, render(rays, dim));
        } else if (*d_cmd) {
            Mat P = read_matrix_file(d_file);
            DualConeResult res = dual_cone(P);
            size_t dim = P.empty() ? 0 : P[0].size();
            std::string text = "# rays\n" + render(res.rays, dim) +
                               "# hilbert\n" + render(res.hilbert, dim);
            emit(d_opts, text);
        } else if (*g_cmd) {
            Mat P = read_matrix_file(g_file);
            std::vector<Vec> basis = hilbert_from_generators(P);
            emit(g_opts, render(basis, P.empty() ? 0 : P[0].size()));
        } else if (*de_cmd) {
            Mat A = read_matrix_file(de_kernel);
            Vec u = read_vector_file(de_target);
            Decomposition dec = decompose(A, u);
            // rows: multiplicity followed by the basis vector
            Mat rows;
            for (const auto& [v, mult] : dec.terms) {
                Vec row;
                row.push_back(mult);
                row.insert(row.end(), v.begin(), v.end());
                rows.push_back(std::move(row));
            }
            emit(de_opts, render(rows, u.size() + 1));
        } else if (*im_cmd) {
            Mat A = read_matrix_file(im_matrix);
            Vec b = read_vector_file(im_rhs);
            Vec c = read_vector_file(im_cost);
            Vec z0 = read_vector_file(im_start);
            std::optional<Vec> z = improve_binary(A, b, c, z0);
            if (z) {
                emit(im_opts, render(Mat{*z}, z->size()));
            } else {
                emit(im_opts, "# optimal\n" + render(Mat{}, z0.size()));
            }
        } else if (*mg_cmd) {
            Mat A = magic_system(mg_n, !mg_nodiag);
            emit(mg_opts, render(A, mg_n * mg_n));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "conelift: " << e.what() << "\n";
        return 1;
    } catch (const config_error& e) {
        std::cerr << "conelift: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "conelift: " << e.what() << "\n";
        return 3;
    } catch (const degeneracy_error& e) {
        std::cerr << "conelift: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "conelift: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
