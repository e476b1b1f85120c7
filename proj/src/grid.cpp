#include "stormgrid/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stormgrid {

static_assert(std::endian::native == std::endian::little,
              "frame payload is little-endian float32; big-endian hosts need a swap pass");
static_assert(sizeof(float) == 4);

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error("parse error in " + path.string() + ": " + what);
}

}  // namespace

void ReflectivityGrid::validate() const {
    if (rows <= 0 || cols <= 0) {
        throw std::runtime_error("grid dimensions must be positive, got " + std::to_string(rows) +
                                 "x" + std::to_string(cols));
    }
    if (!(cell_size_km > 0.0)) {
        throw std::runtime_error("cell_size_km must be positive");
    }
    const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (values.size() != expected) {
        throw std::runtime_error("grid value count " + std::to_string(values.size()) +
                                 " does not match rows*cols = " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != kNoDataDbz && !std::isfinite(values[i])) {
            throw std::runtime_error("non-finite reflectivity at flat index " + std::to_string(i));
        }
    }
}

ReflectivityGrid load_frame(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open frame file " + path.string());
    }

    std::string line;
    if (!std::getline(in, line)) parse_fail(path, "missing magic line 1");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "STORMGRID v1") parse_fail(path, "line 1: bad magic '" + line + "'");

    if (!std::getline(in, line)) parse_fail(path, "missing header line 2");
    ReflectivityGrid g;
    {
        std::istringstream hs(line);
        if (!(hs >> g.timestamp >> g.rows >> g.cols >> g.cell_size_km >> g.origin_lat >>
              g.origin_lon)) {
            parse_fail(path, "line 2: expected 'timestamp rows cols cell_size_km origin_lat origin_lon'");
        }
        std::string extra;
        if (hs >> extra) parse_fail(path, "line 2: trailing token '" + extra + "'");
    }
    if (g.rows <= 0 || g.cols <= 0) parse_fail(path, "line 2: rows and cols must be positive");
    if (!(g.cell_size_km > 0.0)) parse_fail(path, "line 2: cell_size_km must be positive");

    if (!std::getline(in, line)) parse_fail(path, "missing DATA marker line 3");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "DATA") parse_fail(path, "line 3: expected 'DATA', got '" + line + "'");

    const std::size_t n = static_cast<std::size_t>(g.rows) * static_cast<std::size_t>(g.cols);
    g.values.resize(n);
    in.read(reinterpret_cast<char*>(g.values.data()), static_cast<std::streamsize>(n * 4));
    const std::size_t got = static_cast<std::size_t>(in.gcount()) / 4;
    if (got != n) {
        parse_fail(path, "payload: expected " + std::to_string(n) + " values, found " +
                             std::to_string(got));
    }
    char overrun;
    if (in.read(&overrun, 1)) {
        parse_fail(path, "payload: trailing bytes after " + std::to_string(n) + " values");
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (g.values[i] != kNoDataDbz && !std::isfinite(g.values[i])) {
            parse_fail(path, "payload offset " + std::to_string(i) + ": non-finite value");
        }
    }
    return g;
}

void write_frame(const ReflectivityGrid& grid, const std::filesystem::path& path) {
    grid.validate();

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }

    char header[256];
    std::snprintf(header, sizeof(header), "STORMGRID v1\n%lld %d %d %.17g %.17g %.17g\nDATA\n",
                  static_cast<long long>(grid.timestamp), grid.rows, grid.cols, grid.cell_size_km,
                  grid.origin_lat, grid.origin_lon);
    out << header;
    out.write(reinterpret_cast<const char*>(grid.values.data()),
              static_cast<std::streamsize>(grid.values.size() * 4));
    if (!out) {
        throw std::runtime_error("I/O failure writing frame to " + path.string());
    }
}

FrameSequence load_sequence(const std::filesystem::path& dir, int step_seconds) {
    if (step_seconds <= 0) throw std::runtime_error("step_seconds must be positive");
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir.string());
    }

    FrameSequence seq;
    seq.step_seconds = step_seconds;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        seq.frames.push_back(load_frame(entry.path()));
    }
    if (seq.frames.empty()) {
        throw std::runtime_error("no frame files in " + dir.string());
    }

    std::sort(seq.frames.begin(), seq.frames.end(),
              [](const ReflectivityGrid& a, const ReflectivityGrid& b) {
                  return a.timestamp < b.timestamp;
              });

    for (std::size_t i = 1; i < seq.frames.size(); ++i) {
        const std::int64_t prev = seq.frames[i - 1].timestamp;
        const std::int64_t cur = seq.frames[i].timestamp;
        if (cur == prev) {
            throw std::runtime_error("duplicate frame timestamp " + std::to_string(cur));
        }
        if (cur - prev != step_seconds) {
            std::string missing;
            for (std::int64_t t = prev + step_seconds; t < cur; t += step_seconds) {
                if (!missing.empty()) missing += ", ";
                missing += std::to_string(t);
            }
            throw std::runtime_error("gap in frame sequence between " + std::to_string(prev) +
                                     " and " + std::to_string(cur) + "; missing timestamps: " +
                                     (missing.empty() ? "(irregular spacing)" : missing));
        }
    }
    return seq;
}

}  // namespace stormgrid
