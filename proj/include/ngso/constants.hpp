#ifndef NGSO_CONSTANTS_HPP
#define NGSO_CONSTANTS_HPP

namespace ngso::constants {

// Spherical Earth, two-body gravity.
inline constexpr double kMuEarthKm3S2 = 398600.4418;
inline constexpr double kEarthRadiusKm = 6378.137;
inline constexpr double kEarthRotationRadS = 7.2921159e-5;
inline constexpr double kSpeedOfLightKmS = 299792.458;
inline constexpr double kSpeedOfLightMS = 299792458.0;

// -10*log10(Boltzmann constant), dBW/K/Hz.
inline constexpr double kBoltzmannTermDb = 228.6;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Normalize an angle in degrees to [0, 360).
double norm_deg(double deg);

// Reduce an angle in radians to [-pi, pi].
double wrap_pi(double rad);

}  // namespace ngso::constants

#endif
