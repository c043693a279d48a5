#include "ngso/geometry.hpp"

#include <cmath>
#include <sstream>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"

namespace ngso::geometry {

using namespace ngso::constants;

void GroundStation::validate() const {
    std::ostringstream problems;
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
        problems << "latitude " << latitude_deg << " outside [-90,90]; ";
    }
    if (!(longitude_deg >= -180.0 && longitude_deg < 180.0)) {
        problems << "longitude " << longitude_deg << " outside [-180,180); ";
    }
    if (!(altitude_km >= 0.0)) {
        problems << "altitude " << altitude_km << " km negative; ";
    }
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid ground station: " + s);
    }
}

Vec3 eci_to_ecef(const Vec3& eci, double t_s) {
    const double theta = kEarthRotationRadS * t_s;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * eci.x + s * eci.y, -s * eci.x + c * eci.y, eci.z};
}

Vec3 eci_to_ecef_velocity(const orbits::EciState& state, double t_s) {
    const Vec3 r_ecef = eci_to_ecef(state.position_km, t_s);
    const Vec3 v_rot = eci_to_ecef(state.velocity_km_s, t_s);
    const Vec3 omega{0.0, 0.0, kEarthRotationRadS};
    return v_rot - cross(omega, r_ecef);
}

Vec3 ground_station_ecef(const GroundStation& gs) {
    const double r = kEarthRadiusKm + gs.altitude_km;
    const double lat = deg2rad(gs.latitude_deg);
    const double lon = deg2rad(gs.longitude_deg);
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

Topocentric topocentric(const Vec3& sat_ecef, const GroundStation& gs) {
    const Vec3 gs_ecef = ground_station_ecef(gs);
    const Vec3 los = sat_ecef - gs_ecef;

    const double lat = deg2rad(gs.latitude_deg);
    const double lon = deg2rad(gs.longitude_deg);
    const double sl = std::sin(lat), cl = std::cos(lat);
    const double so = std::sin(lon), co = std::cos(lon);

    const Vec3 east{-so, co, 0.0};
    const Vec3 north{-sl * co, -sl * so, cl};
    const Vec3 up{cl * co, cl * so, sl};

    const double e = dot(los, east);
    const double n = dot(los, north);
    const double u = dot(los, up);

    Topocentric topo;
    topo.slant_range_km = norm(los);
    topo.elevation_deg = rad2deg(std::asin(u / topo.slant_range_km));
    topo.azimuth_deg = norm_deg(rad2deg(std::atan2(e, n)));
    return topo;
}

std::vector<VisibleSat> visible_set(std::span<const Vec3> sats_ecef,
                                    const GroundStation& gs, double min_elevation_deg) {
    std::vector<VisibleSat> out;
    for (int id = 0; id < static_cast<int>(sats_ecef.size()); ++id) {
        const Topocentric topo = topocentric(sats_ecef[id], gs);
        if (topo.elevation_deg >= min_elevation_deg) {
            out.push_back({id, topo});
        }
    }
    return out;
}

double remaining_visibility(const orbits::Propagator& sat, double t_s,
                            const GroundStation& gs, double min_elevation_deg,
                            double search_step_s, double horizon_s) {
    {
        const Vec3 now = eci_to_ecef(sat.at(t_s).position_km, t_s);
        if (topocentric(now, gs).elevation_deg < min_elevation_deg) {
            throw ContractViolation("remaining_visibility: satellite not visible at t");
        }
    }
    const long steps = static_cast<long>(std::floor(horizon_s / search_step_s + 1e-9));
    for (long k = 1; k <= steps; ++k) {
        const double dt = static_cast<double>(k) * search_step_s;
        const Vec3 pos = eci_to_ecef(sat.at(t_s + dt).position_km, t_s + dt);
        if (topocentric(pos, gs).elevation_deg < min_elevation_deg) {
            return dt - search_step_s;
        }
    }
    return horizon_s;
}

double remaining_visibility(const orbits::OrbitalElements& elements, double t_s,
                            const GroundStation& gs, double min_elevation_deg,
                            double search_step_s, double horizon_s) {
    return remaining_visibility(orbits::Propagator(elements), t_s, gs, min_elevation_deg,
                                search_step_s, horizon_s);
}

}  // namespace ngso::geometry
