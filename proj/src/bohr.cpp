#include "photonbox/bohr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace photonbox {

namespace {

void require_positive(double value, const char* what) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

}  // namespace

WeighingScenario::WeighingScenario(PhysicalConstants constants,
                                   double duration, double proper_duration,
                                   double delta_x, double delta_p,
                                   double shutter_delta_t,
                                   bool enforce_ratio_band)
    : constants_(constants),
      duration_(duration),
      proper_duration_(proper_duration),
      delta_x_(delta_x),
      delta_p_(delta_p),
      shutter_delta_t_(shutter_delta_t) {
    require_positive(constants_.hbar, "hbar");
    require_positive(constants_.c, "c");
    require_positive(constants_.g, "g");
    require_positive(duration_, "weighing duration");
    require_positive(proper_duration_, "proper duration");
    require_positive(delta_x_, "delta_x");
    require_positive(delta_p_, "delta_p");
    require_positive(shutter_delta_t_, "shutter delta_t");
    if (enforce_ratio_band) {
        const double ratio = proper_duration_ / duration_;
        // The redshift correction is a 1 + g x / c^2 expansion; proper and
        // laboratory durations may differ by at most ten percent.
        if (ratio < 0.9 || ratio > 1.1) {
            throw std::invalid_argument(
                "proper/laboratory duration ratio outside [0.9, 1.1]");
        }
    }
}

double photon_energy_lower_bound(double shutter_delta_t,
                                 const PhysicalConstants& constants) {
    require_positive(shutter_delta_t, "shutter delta_t");
    require_positive(constants.hbar, "hbar");
    return constants.hbar / shutter_delta_t;
}

double weighing_energy_precision(double delta_p,
                                 const WeighingScenario& scenario) {
    require_positive(delta_p, "delta_p");
    const PhysicalConstants& k = scenario.constants();
    return delta_p * k.c * k.c / (k.g * scenario.duration());
}

double gravitational_time_lapse(double x, double proper_duration,
                                const PhysicalConstants& constants) {
    require_positive(proper_duration, "proper duration");
    if (!std::isfinite(x)) {
        throw std::invalid_argument("displacement must be finite");
    }
    const double potential = constants.g * x / (constants.c * constants.c);
    if (std::abs(potential) >= 0.01) {
        throw std::invalid_argument(
            "displacement outside the weak-field regime |g x|/c^2 < 0.01");
    }
    return (1.0 + potential) * proper_duration;
}

double emission_time_uncertainty(double delta_x,
                                 const WeighingScenario& scenario) {
    require_positive(delta_x, "delta_x");
    const PhysicalConstants& k = scenario.constants();
    return k.g * delta_x * scenario.proper_duration() / (k.c * k.c);
}

BohrProduct bohr_product(const WeighingScenario& scenario) {
    BohrProduct product;
    product.px_product = scenario.delta_p() * scenario.delta_x();
    product.ratio_t0_over_t =
        scenario.proper_duration() / scenario.duration();
    // Reduced form of weighing precision times emission spread: the c^2 and
    // g factors cancel algebraically, so equal durations give delta_p *
    // delta_x without rounding.
    product.et_product = product.ratio_t0_over_t * product.px_product;
    product.bound_satisfied_if_px_bound =
        product.px_product >= scenario.constants().hbar;
    return product;
}

}  // namespace photonbox
