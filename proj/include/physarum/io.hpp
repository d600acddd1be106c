#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "physarum/error.hpp"
#include "physarum/geom.hpp"
#include "physarum/grid.hpp"

namespace physarum {

namespace fs = std::filesystem;

namespace detail {

inline std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

}  // namespace detail

// Binary PGM (P5), 8 bit. Rows are written top row first, where "top" is the
// highest-y lattice row.
inline void write_pgm(const fs::path& path, const Grid<double>& field, double display_gain) {
    std::ofstream out = detail::open_out(path);
    out << "P5\n" << field.width() << " " << field.height() << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(field.width()));
    for (int y = field.height() - 1; y >= 0; --y) {
        const double* in = field.row(y);
        for (int x = 0; x < field.width(); ++x) {
            const long v = std::lround(in[x] * display_gain);
            row[static_cast<std::size_t>(x)] =
                static_cast<unsigned char>(v < 0 ? 0 : (v > 255 ? 255 : v));
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<long>(row.size()));
    }
    if (!out) throw IoError("write failed: " + path.string());
}

// Mask raster as PGM: 0 empty, 255 occupied.
inline void write_pgm(const fs::path& path, const Grid<std::uint8_t>& mask) {
    std::ofstream out = detail::open_out(path);
    out << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(mask.width()));
    for (int y = mask.height() - 1; y >= 0; --y) {
        const std::uint8_t* in = mask.row(y);
        for (int x = 0; x < mask.width(); ++x)
            row[static_cast<std::size_t>(x)] = in[x] ? 255 : 0;
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<long>(row.size()));
    }
    if (!out) throw IoError("write failed: " + path.string());
}

// Reads a binary PGM written by write_pgm back into a 0/1 mask.
inline Grid<std::uint8_t> read_pgm_mask(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string magic;
    int width = 0, height = 0, maxval = 0;
    in >> magic >> width >> height >> maxval;
    if (magic != "P5" || width <= 0 || height <= 0 || maxval != 255)
        throw IoError("unsupported PGM header in " + path.string());
    in.get();  // single whitespace after the header
    Grid<std::uint8_t> mask(width, height, 0);
    std::vector<char> row(static_cast<std::size_t>(width));
    for (int y = height - 1; y >= 0; --y) {
        in.read(row.data(), static_cast<long>(row.size()));
        if (!in) throw IoError("truncated PGM: " + path.string());
        for (int x = 0; x < width; ++x)
            mask.at(x, y) = static_cast<unsigned char>(row[static_cast<std::size_t>(x)]) ? 1 : 0;
    }
    return mask;
}

// Population time series: header `step,population`, one row per step.
inline void write_population_csv(const fs::path& path, const std::vector<long>& series) {
    std::ofstream out = detail::open_out(path);
    out << "step,population\n";
    for (std::size_t i = 0; i < series.size(); ++i) out << i << "," << series[i] << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

inline nlohmann::json polygon_json(const Polygon& poly) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Vec2& v : poly.vertices) verts.push_back({v.x, v.y});
    return {{"vertices", verts}};
}

inline nlohmann::json edgelist_json(const EdgeList& list) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : list.edges) edges.push_back({e.a, e.b});
    nlohmann::json points = nlohmann::json::array();
    for (const Vec2& p : list.points) points.push_back({p.x, p.y});
    return {{"edges", edges}, {"points", points}};
}

inline void write_json(const fs::path& path, const nlohmann::json& j) {
    std::ofstream out = detail::open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

inline nlohmann::json read_json(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

inline std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace physarum
