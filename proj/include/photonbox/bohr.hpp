#pragma once

namespace photonbox {

/// Constants entering the weighing argument. Defaults are SI values; natural
/// units set all three to one.
struct PhysicalConstants {
    double hbar = 1.0545718e-34;
    double c = 2.99792458e8;
    double g = 9.80665;

    static PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }
};

/// One run of the box-weighing protocol: the box hangs in gravity for
/// laboratory duration t while a clock inside accumulates proper time t0,
/// with balance pointer uncertainties delta_x, delta_p and a shutter open
/// for shutter_delta_t.
class WeighingScenario {
public:
    WeighingScenario(PhysicalConstants constants, double duration,
                     double proper_duration, double delta_x, double delta_p,
                     double shutter_delta_t, bool enforce_ratio_band = true);

    const PhysicalConstants& constants() const { return constants_; }
    double duration() const { return duration_; }
    double proper_duration() const { return proper_duration_; }
    double delta_x() const { return delta_x_; }
    double delta_p() const { return delta_p_; }
    double shutter_delta_t() const { return shutter_delta_t_; }

private:
    PhysicalConstants constants_;
    double duration_;
    double proper_duration_;
    double delta_x_;
    double delta_p_;
    double shutter_delta_t_;
};

/// hbar / delta_t: the energy scale a shutter open for delta_t cannot beat.
double photon_energy_lower_bound(double shutter_delta_t,
                                 const PhysicalConstants& constants);

/// Energy precision delta_p c^2 / (g t) reachable by weighing the box for
/// duration t with pointer momentum spread delta_p.
double weighing_energy_precision(double delta_p,
                                 const WeighingScenario& scenario);

/// Proper-time reading t = (1 + g x / c^2) t0 of a clock displaced by x in
/// the field; the weak-field expansion requires |g x| / c^2 < 0.01.
double gravitational_time_lapse(double x, double proper_duration,
                                const PhysicalConstants& constants);

/// Spread g delta_x t0 / c^2 of the emission time induced by the pointer
/// position spread delta_x.
double emission_time_uncertainty(double delta_x,
                                 const WeighingScenario& scenario);

struct BohrProduct {
    double et_product = 0.0;     ///< delta_E * delta_t of the chained bounds
    double px_product = 0.0;     ///< delta_p * delta_x of the pointer
    double ratio_t0_over_t = 0.0;
    /// True when the pointer obeys delta_p delta_x >= hbar, which forces the
    /// energy-time product to respect hbar as well.
    bool bound_satisfied_if_px_bound = false;
};

/// Chains the weighing precision and the redshift spread: the product reduces
/// to (t0 / t) * delta_p * delta_x identically, tying the energy-time bound
/// to the pointer's own uncertainty relation.
BohrProduct bohr_product(const WeighingScenario& scenario);

}  // namespace photonbox
