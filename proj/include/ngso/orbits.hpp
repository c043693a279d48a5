#ifndef NGSO_ORBITS_HPP
#define NGSO_ORBITS_HPP

#include "ngso/vec3.hpp"

namespace ngso::orbits {

// Keplerian state of one satellite. Angles are stored in degrees and
// normalized to [0, 360); conversion to radians happens internally.
struct OrbitalElements {
    double semi_major_axis_km = 0.0;
    double eccentricity = 0.0;  // closed orbits only, [0, 1)
    double inclination_deg = 0.0;
    double raan_deg = 0.0;
    double arg_perigee_deg = 0.0;
    double mean_anomaly_epoch_deg = 0.0;

    // Throws ValidationError on sub-surface perigee, e outside [0,1), etc.
    void validate() const;

    double perigee_radius_km() const { return semi_major_axis_km * (1.0 - eccentricity); }
    double apogee_radius_km() const { return semi_major_axis_km * (1.0 + eccentricity); }

    static OrbitalElements circular(double altitude_km, double inclination_deg,
                                    double raan_deg, double mean_anomaly_deg);

    // Perigee/apogee given as altitudes above the Earth surface.
    static OrbitalElements from_perigee_apogee(double perigee_alt_km, double apogee_alt_km,
                                               double inclination_deg, double raan_deg,
                                               double arg_perigee_deg, double mean_anomaly_deg);
};

// Inertial-frame position/velocity at a simulation time since epoch.
struct EciState {
    Vec3 position_km;
    Vec3 velocity_km_s;
    double time_s = 0.0;
};

// Solves Kepler's equation M = E - e*sin(E) for the eccentric anomaly.
// Newton iteration from E0 = M (e < 0.8) or E0 = pi (e >= 0.8), bisection
// fallback, residual tolerance 1e-12 rad. Throws SolverError if both fail.
double solve_kepler(double mean_anomaly_rad, double eccentricity);

// T = 2*pi*sqrt(a^3/mu). Throws ValidationError for a <= Earth radius.
double orbital_period_s(double semi_major_axis_km);

// Precomputes the perifocal-to-inertial rotation and mean motion for one
// element set so repeated evaluation over a time grid stays cheap.
class Propagator {
  public:
    explicit Propagator(const OrbitalElements& elements);

    EciState at(double t_s) const;

    const OrbitalElements& elements() const { return elements_; }
    double period_s() const { return period_s_; }

  private:
    OrbitalElements elements_;
    double mean_motion_rad_s_;
    double period_s_;
    double mean_anomaly_epoch_rad_;
    // Columns of the perifocal->ECI rotation (P towards perigee, Q advanced
    // 90 deg in the orbital plane).
    Vec3 p_axis_;
    Vec3 q_axis_;
};

// One-shot convenience wrapper around Propagator.
EciState propagate(const OrbitalElements& elements, double t_s);

}  // namespace ngso::orbits

#endif
