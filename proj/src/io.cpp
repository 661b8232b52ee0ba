#include "vexh/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace vexh {

namespace {

void write_samples_csv(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << std::setprecision(17);
    out << (f.grid.dim == 1 ? "x_1,re,im\n" : "x_1,x_2,re,im\n");
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto p = f.grid.point(i);
        out << p[0];
        if (f.grid.dim == 2) out << ',' << p[1];
        out << ',' << f.samples[i].real() << ',' << f.samples[i].imag() << '\n';
    }
}

} // namespace

void write_grid_function_csv(const GridFunction& f, const std::string& path) {
    write_samples_csv(f, path);
}

GridFunction read_grid_function_csv(const Grid& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    std::getline(in, line);  // header
    GridFunction f(g);
    std::size_t i = 0;
    while (std::getline(in, line) && i < f.size()) {
        std::istringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != static_cast<std::size_t>(g.dim) + 2)
            throw std::runtime_error("bad csv row in " + path);
        f.samples[i++] = cplx{vals[g.dim], vals[g.dim + 1]};
    }
    if (i != f.size()) throw std::runtime_error("row count mismatch in " + path);
    return f;
}

std::string write_half_space_field(const HalfSpaceField& u, const std::string& dir,
                                   const std::string& basename) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json manifest;
    manifest["t_values"] = u.t_ladder;
    std::vector<std::string> files;
    for (std::size_t k = 0; k < u.levels(); ++k) {
        const std::string name = basename + "_t" + std::to_string(k) + ".csv";
        write_samples_csv(u.slices[k], dir + "/" + name);
        files.push_back(name);
    }
    manifest["files"] = files;
    const std::string mpath = dir + "/" + basename + "_manifest.json";
    std::ofstream out(mpath);
    out << manifest.dump(2) << '\n';
    return mpath;
}

std::string write_tensor_field(const TensorField& G, const std::string& dir,
                               const std::string& basename) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json manifest;
    manifest["rank"] = G.rank;
    manifest["dim"] = G.dim;
    manifest["t_values"] = G.t_ladder();
    std::vector<std::string> files;
    const std::string prefix = basename.empty() ? "" : basename + "_";
    for (std::size_t flat = 0; flat < G.components.size(); ++flat) {
        const auto tuple = G.unflatten(flat);
        std::string idx;
        for (int j : tuple) idx += std::to_string(j);
        for (std::size_t k = 0; k < G.components[flat].levels(); ++k) {
            const std::string name = prefix + "G_" + idx + "_t" + std::to_string(k) + ".csv";
            write_samples_csv(G.components[flat].slices[k], dir + "/" + name);
            files.push_back(name);
        }
    }
    manifest["files"] = files;
    const std::string mpath =
        dir + "/" + (basename.empty() ? "tensor" : basename) + "_manifest.json";
    std::ofstream out(mpath);
    out << manifest.dump(2) << '\n';
    return mpath;
}

} // namespace vexh
