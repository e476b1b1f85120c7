#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace stormgrid {

/// Point in the flat grid plane, kilometres from the grid's lower-left corner.
/// x grows east (with columns), y grows north (against rows).
struct PointKm {
    double x = 0.0;
    double y = 0.0;
};

struct LatLon {
    double lat = 0.0;
    double lon = 0.0;
};

namespace geo {

inline constexpr double kKmPerDegLat = 111.32;
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }

/// Flat local projection anchored at the grid origin (lower-left corner).
inline LatLon km_to_latlon(PointKm p, double origin_lat, double origin_lon) {
    const double lat = origin_lat + p.y / kKmPerDegLat;
    const double lon = origin_lon + p.x / (kKmPerDegLat * std::cos(deg2rad(lat)));
    return {lat, lon};
}

inline PointKm latlon_to_km(double lat, double lon, double origin_lat, double origin_lon) {
    PointKm p;
    p.y = (lat - origin_lat) * kKmPerDegLat;
    p.x = (lon - origin_lon) * kKmPerDegLat * std::cos(deg2rad(lat));
    return p;
}

inline double haversine_km(double lat1, double lon1, double lat2, double lon2) {
    const double dlat = deg2rad(lat2 - lat1);
    const double dlon = deg2rad(lon2 - lon1);
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    const double a = s1 * s1 + std::cos(deg2rad(lat1)) * std::cos(deg2rad(lat2)) * s2 * s2;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

/// Even-odd ray cast. The ring may be given open or closed; vertices on the
/// boundary count as outside, which is stable here because contour vertices
/// are kept off grid cell centers by construction.
inline bool point_in_ring(std::span<const PointKm> ring, PointKm p) {
    std::size_t n = ring.size();
    if (n >= 2 && ring.front().x == ring.back().x && ring.front().y == ring.back().y) --n;
    if (n < 3) return false;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const PointKm& a = ring[i];
        const PointKm& b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

/// Signed shoelace area; positive for counter-clockwise rings in the y-up plane.
inline double ring_signed_area(std::span<const PointKm> ring) {
    std::size_t n = ring.size();
    if (n >= 2 && ring.front().x == ring.back().x && ring.front().y == ring.back().y) --n;
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        acc += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
    }
    return 0.5 * acc;
}

/// Area-weighted centroid of a simple ring.
inline PointKm ring_centroid(std::span<const PointKm> ring) {
    std::size_t n = ring.size();
    if (n >= 2 && ring.front().x == ring.back().x && ring.front().y == ring.back().y) --n;
    double a = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double w = ring[j].x * ring[i].y - ring[i].x * ring[j].y;
        a += w;
        cx += (ring[j].x + ring[i].x) * w;
        cy += (ring[j].y + ring[i].y) * w;
    }
    if (a == 0.0) return ring.empty() ? PointKm{} : ring[0];
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

inline double distance_sq(PointKm a, PointKm b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace geo
}  // namespace stormgrid
