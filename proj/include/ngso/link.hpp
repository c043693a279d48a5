#ifndef NGSO_LINK_HPP
#define NGSO_LINK_HPP

#include <optional>
#include <string>
#include <vector>

namespace ngso::link {

struct LinkBudgetParams {
    double eirpd_dbw_hz = 0.0;
    double gs_g_over_t_db_k = 20.0;
    double extra_losses_db = 0.0;  // atmospheric/pointing, lumped
    double downlink_freq_hz = 19.0e9;

    void validate() const;
};

// Ordered SNR-threshold -> spectral-efficiency steps, strictly increasing in
// both columns. SNR below the lowest threshold maps to efficiency 0.
class ModcodTable {
  public:
    struct Row {
        double snr_threshold_db;
        double spectral_efficiency_bps_hz;
    };

    static ModcodTable from_rows(std::vector<Row> rows);

    // Plain text, one "snr_threshold_db,spectral_efficiency" row per line,
    // ascending; '#' comments allowed. Parse errors identify line numbers.
    static ModcodTable from_file(const std::string& path);

    // The DVB-S2X ladder shipped with the repo, capped at 5.90 bps/Hz.
    static const ModcodTable& dvbs2x_default();

    double efficiency_for_snr(double snr_db) const;
    double max_efficiency() const { return rows_.back().spectral_efficiency_bps_hz; }
    const std::vector<Row>& rows() const { return rows_; }

  private:
    std::vector<Row> rows_;
};

// Friis spreading loss, 20*log10(4*pi*d*f/c).
double fspl_db(double distance_km, double freq_hz);

// Per-Hz budget: EIRPD - FSPL + G/T - losses + 228.6. Bandwidth-independent.
double downlink_snr_db(const LinkBudgetParams& params, double distance_km);

double snr_to_spectral_efficiency(double snr_db, const ModcodTable& table);

double data_rate_bps(double spectral_efficiency_bps_hz, double channel_width_hz);

// One-way delay; throws ValidationError for non-positive range.
double propagation_delay_ms(double slant_range_km);

// f_d = (v_r / c) * f with v_r the closing speed (negative range rate),
// positive when the satellite approaches the station.
double doppler_hz(double radial_velocity_km_s, double freq_hz);

// One time step's serving-link metrics; absent when disconnected.
struct LinkMetrics {
    int sat_id = -1;
    double slant_range_km = 0.0;
    double elevation_deg = 0.0;
    double snr_db = 0.0;
    double spectral_efficiency_bps_hz = 0.0;
    double data_rate_bps = 0.0;
    double delay_ms = 0.0;
    double doppler_hz = 0.0;
};

struct LinkSample {
    double time_s = 0.0;
    std::optional<LinkMetrics> link;  // nullopt == outage at this step

    bool connected() const { return link.has_value(); }
};

}  // namespace ngso::link

#endif
