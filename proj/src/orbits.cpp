#include "ngso/orbits.hpp"

#include <cmath>
#include <sstream>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"

namespace ngso::orbits {

using namespace ngso::constants;

void OrbitalElements::validate() const {
    std::ostringstream problems;
    if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
        problems << "eccentricity " << eccentricity << " outside [0,1); ";
    }
    if (!(semi_major_axis_km > kEarthRadiusKm)) {
        problems << "semi-major axis " << semi_major_axis_km
                 << " km not above Earth radius " << kEarthRadiusKm << " km; ";
    }
    if (eccentricity >= 0.0 && eccentricity < 1.0 &&
        perigee_radius_km() <= kEarthRadiusKm) {
        problems << "perigee radius " << perigee_radius_km() << " km is sub-surface; ";
    }
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid orbital elements: " + s);
    }
}

OrbitalElements OrbitalElements::circular(double altitude_km, double inclination_deg,
                                          double raan_deg, double mean_anomaly_deg) {
    OrbitalElements el;
    el.semi_major_axis_km = kEarthRadiusKm + altitude_km;
    el.eccentricity = 0.0;
    el.inclination_deg = norm_deg(inclination_deg);
    el.raan_deg = norm_deg(raan_deg);
    el.arg_perigee_deg = 0.0;
    el.mean_anomaly_epoch_deg = norm_deg(mean_anomaly_deg);
    el.validate();
    return el;
}

OrbitalElements OrbitalElements::from_perigee_apogee(double perigee_alt_km,
                                                     double apogee_alt_km,
                                                     double inclination_deg, double raan_deg,
                                                     double arg_perigee_deg,
                                                     double mean_anomaly_deg) {
    const double rp = kEarthRadiusKm + perigee_alt_km;
    const double ra = kEarthRadiusKm + apogee_alt_km;
    OrbitalElements el;
    el.semi_major_axis_km = 0.5 * (rp + ra);
    el.eccentricity = (ra - rp) / (ra + rp);
    el.inclination_deg = norm_deg(inclination_deg);
    el.raan_deg = norm_deg(raan_deg);
    el.arg_perigee_deg = norm_deg(arg_perigee_deg);
    el.mean_anomaly_epoch_deg = norm_deg(mean_anomaly_deg);
    el.validate();
    return el;
}

double solve_kepler(double mean_anomaly_rad, double eccentricity) {
    if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
        throw ValidationError("solve_kepler: eccentricity outside [0,1)");
    }
    constexpr double kTol = 1e-12;
    constexpr int kMaxIter = 50;

    // Reduce M to [-pi, pi]; the solution shifts by the same multiple of 2*pi.
    const double m_wrapped = wrap_pi(mean_anomaly_rad);
    const double shift = mean_anomaly_rad - m_wrapped;

    if (eccentricity == 0.0) {
        return mean_anomaly_rad;
    }

    double e_anom = (eccentricity < 0.8) ? m_wrapped : ((m_wrapped >= 0.0) ? kPi : -kPi);
    for (int i = 0; i < kMaxIter; ++i) {
        const double f = e_anom - eccentricity * std::sin(e_anom) - m_wrapped;
        if (std::abs(f) < kTol) {
            return e_anom + shift;
        }
        const double fp = 1.0 - eccentricity * std::cos(e_anom);
        e_anom -= f / fp;
    }

    // Bisection fallback; f is monotone increasing in E.
    double lo = -kPi, hi = kPi;
    if (m_wrapped > 0.0) { lo = 0.0; } else { hi = 0.0; }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = mid - eccentricity * std::sin(mid) - m_wrapped;
        if (std::abs(f) < kTol) {
            return mid + shift;
        }
        if (f < 0.0) { lo = mid; } else { hi = mid; }
    }
    const double mid = 0.5 * (lo + hi);
    if (std::abs(mid - eccentricity * std::sin(mid) - m_wrapped) < kTol) {
        return mid + shift;
    }
    throw SolverError("solve_kepler: no convergence (e=" + std::to_string(eccentricity) + ")");
}

double orbital_period_s(double semi_major_axis_km) {
    if (!(semi_major_axis_km > kEarthRadiusKm)) {
        throw ValidationError("orbital_period_s: semi-major axis must exceed Earth radius");
    }
    const double a3 = semi_major_axis_km * semi_major_axis_km * semi_major_axis_km;
    return 2.0 * kPi * std::sqrt(a3 / kMuEarthKm3S2);
}

Propagator::Propagator(const OrbitalElements& elements) : elements_(elements) {
    elements_.validate();
    const double a = elements_.semi_major_axis_km;
    mean_motion_rad_s_ = std::sqrt(kMuEarthKm3S2 / (a * a * a));
    period_s_ = 2.0 * kPi / mean_motion_rad_s_;
    mean_anomaly_epoch_rad_ = deg2rad(elements_.mean_anomaly_epoch_deg);

    const double raan = deg2rad(elements_.raan_deg);
    const double inc = deg2rad(elements_.inclination_deg);
    const double argp = deg2rad(elements_.arg_perigee_deg);
    const double co = std::cos(raan), so = std::sin(raan);
    const double ci = std::cos(inc), si = std::sin(inc);
    const double cw = std::cos(argp), sw = std::sin(argp);

    // R3(-raan) * R1(-inc) * R3(-argp) applied to the perifocal basis.
    p_axis_ = {co * cw - so * sw * ci, so * cw + co * sw * ci, sw * si};
    q_axis_ = {-co * sw - so * cw * ci, -so * sw + co * cw * ci, cw * si};
}

EciState Propagator::at(double t_s) const {
    const double a = elements_.semi_major_axis_km;
    const double e = elements_.eccentricity;
    const double m = mean_anomaly_epoch_rad_ + mean_motion_rad_s_ * t_s;
    const double e_anom = solve_kepler(m, e);

    const double ce = std::cos(e_anom);
    const double se = std::sin(e_anom);
    const double sqrt1me2 = std::sqrt(1.0 - e * e);

    // Perifocal coordinates from the eccentric anomaly.
    const double x_pf = a * (ce - e);
    const double y_pf = a * sqrt1me2 * se;
    const double r = a * (1.0 - e * ce);
    const double edot = mean_motion_rad_s_ * a * a / r;  // a * dE/dt
    const double vx_pf = -edot * se;
    const double vy_pf = edot * sqrt1me2 * ce;

    EciState st;
    st.position_km = p_axis_ * x_pf + q_axis_ * y_pf;
    st.velocity_km_s = p_axis_ * vx_pf + q_axis_ * vy_pf;
    st.time_s = t_s;
    return st;
}

EciState propagate(const OrbitalElements& elements, double t_s) {
    return Propagator(elements).at(t_s);
}

}  // namespace ngso::orbits
