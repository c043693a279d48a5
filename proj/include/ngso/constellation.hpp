#ifndef NGSO_CONSTELLATION_HPP
#define NGSO_CONSTELLATION_HPP

#include <string>
#include <vector>

#include "ngso/orbits.hpp"

namespace ngso::constellation {

// One Walker-style shell. Circular shells set altitude_km; elliptical shells
// set perigee_km/apogee_km (altitudes) and elliptical = true.
struct ShellSpec {
    bool elliptical = false;
    double altitude_km = 0.0;
    double perigee_km = 0.0;
    double apogee_km = 0.0;
    double inclination_deg = 0.0;
    int num_planes = 1;
    int sats_per_plane = 1;
    int phasing_factor = 0;        // [0, num_planes)
    double raan_spread_deg = 360.0;  // 360 delta, 180 polar/star
    double raan_offset_deg = 0.0;    // shifts every plane; lets same-altitude
                                     // sub-shells interleave
    double arg_perigee_deg = 0.0;    // elliptical shells only

    int total_satellites() const { return num_planes * sats_per_plane; }
    void validate() const;
};

struct ConstellationSpec {
    std::string name;
    std::vector<ShellSpec> shells;
    double eirpd_max_dbw_hz = 0.0;
    double channel_width_hz = 0.0;
    double downlink_freq_hz = 19.0e9;
    double min_elevation_deg = 10.0;
    // Receiver figure of merit assumed for this operator's ground segment;
    // seeds LinkBudgetParams when no override is given.
    double gs_g_over_t_db_k = 20.0;

    int total_satellites() const;
    void validate() const;
};

// Realizes the shells as per-satellite elements. Plane p gets
// RAAN = offset + p * spread / P; satellite s in plane p gets
// M0 = s * 360/S + p * F * 360/T with T = P*S.
std::vector<orbits::OrbitalElements> build_elements(const ConstellationSpec& spec);

// Built-in catalog entries: kuiper, oneweb_phase1, mangata_meo, pleiades.
// Throws CatalogError for unknown names, listing the valid ones.
ConstellationSpec load_catalog(const std::string& name);

std::vector<std::string> catalog_names();

// JSON config file mirroring ConstellationSpec; file units are km, degrees,
// MHz, GHz, dBW/Hz (see data/constellation_schema.json).
ConstellationSpec load_spec_file(const std::string& path);

std::string spec_to_json(const ConstellationSpec& spec);
ConstellationSpec spec_from_json(const std::string& json_text);

}  // namespace ngso::constellation

#endif
