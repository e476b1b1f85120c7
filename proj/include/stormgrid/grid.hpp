#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "stormgrid/geo.hpp"

namespace stormgrid {

/// No-data sentinel. Deliberately outside the physical dBZ range so it sorts
/// below any contouring threshold.
inline constexpr float kNoDataDbz = -327.68f;

/// One timestamped CAPPI composite frame on a regular km grid.
/// Values are stored row-major with the north row first, as in the file format.
struct ReflectivityGrid {
    std::int64_t timestamp = 0;  // UTC seconds
    int rows = 0;
    int cols = 0;
    double cell_size_km = 1.0;
    double origin_lat = 0.0;  // grid lower-left corner
    double origin_lon = 0.0;
    std::vector<float> values;

    float at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    float& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    bool is_no_data(int r, int c) const { return at(r, c) == kNoDataDbz; }

    /// Cell-center coordinates in the y-up km plane (origin at lower-left corner).
    double center_x_km(int c) const { return (c + 0.5) * cell_size_km; }
    double center_y_km(int r) const { return (rows - r - 0.5) * cell_size_km; }
    PointKm center_km(int r, int c) const { return {center_x_km(c), center_y_km(r)}; }

    double width_km() const { return cols * cell_size_km; }
    double height_km() const { return rows * cell_size_km; }

    /// Throws std::runtime_error when any structural invariant is violated.
    void validate() const;
};

/// Time-ordered frames with uniform spacing.
struct FrameSequence {
    std::vector<ReflectivityGrid> frames;
    int step_seconds = 300;
};

ReflectivityGrid load_frame(const std::filesystem::path& path);
void write_frame(const ReflectivityGrid& grid, const std::filesystem::path& path);

/// Loads every frame file in `dir`, sorts by timestamp, and validates spacing.
FrameSequence load_sequence(const std::filesystem::path& dir, int step_seconds = 300);

}  // namespace stormgrid
