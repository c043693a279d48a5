#ifndef NGSO_GEOMETRY_HPP
#define NGSO_GEOMETRY_HPP

#include <span>
#include <vector>

#include "ngso/orbits.hpp"
#include "ngso/vec3.hpp"

namespace ngso::geometry {

struct GroundStation {
    double latitude_deg = 0.0;   // [-90, 90], treated as spherical
    double longitude_deg = 0.0;  // [-180, 180)
    double altitude_km = 0.0;

    void validate() const;
};

struct Topocentric {
    double elevation_deg = 0.0;   // [-90, 90]
    double azimuth_deg = 0.0;     // [0, 360), clockwise from north
    double slant_range_km = 0.0;
};

// Earth-fixed frame rotates about +z by theta(t) = omegaE * t; frames are
// aligned at the simulation epoch (t = 0).
Vec3 eci_to_ecef(const Vec3& eci_position_km, double t_s);

// Satellite velocity expressed in the rotating Earth-fixed frame.
Vec3 eci_to_ecef_velocity(const orbits::EciState& state, double t_s);

// Spherical-Earth station position.
Vec3 ground_station_ecef(const GroundStation& gs);

// Elevation/azimuth/slant range of an ECEF point seen from the station,
// computed in the local east-north-up frame.
Topocentric topocentric(const Vec3& sat_ecef_km, const GroundStation& gs);

struct VisibleSat {
    int sat_id = 0;
    Topocentric topo;
};

// Satellites at or above the elevation mask, ascending id order. Elevation
// exactly equal to the mask counts as visible.
std::vector<VisibleSat> visible_set(std::span<const Vec3> sats_ecef_km,
                                    const GroundStation& gs, double min_elevation_deg);

// Look-ahead scan in multiples of search_step_s: returns the last offset at
// which the satellite is still visible, capped at horizon_s. Throws
// ContractViolation if the satellite is not visible at t.
double remaining_visibility(const orbits::Propagator& sat, double t_s,
                            const GroundStation& gs, double min_elevation_deg,
                            double search_step_s, double horizon_s);

double remaining_visibility(const orbits::OrbitalElements& elements, double t_s,
                            const GroundStation& gs, double min_elevation_deg,
                            double search_step_s, double horizon_s);

}  // namespace ngso::geometry

#endif
