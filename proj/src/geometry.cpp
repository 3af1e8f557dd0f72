#include "readseq/geometry.hpp"

#include <cmath>
#include <string>

#include "readseq/errors.hpp"

namespace readseq {

namespace {

constexpr double kCmPerInch = 2.54;
constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

void require_positive_finite(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ValidationError(std::string(name) + " must be finite and > 0, got " +
                              std::to_string(value));
    }
}

} // namespace

void DisplayGeometry::validate() const {
    require_positive_finite(diagonal_inches, "diagonal_inches");
    require_positive_finite(viewing_distance_cm, "viewing_distance_cm");
    require_positive_finite(foveal_diameter_deg, "foveal_diameter_deg");
    require_positive_finite(parafoveal_diameter_deg, "parafoveal_diameter_deg");
    if (resolution_width_px <= 0 || resolution_height_px <= 0) {
        throw ValidationError("resolution must be positive, got " +
                              std::to_string(resolution_width_px) + "x" +
                              std::to_string(resolution_height_px));
    }
    if (parafoveal_diameter_deg <= foveal_diameter_deg) {
        throw ValidationError("parafoveal diameter must exceed foveal diameter");
    }
    if (foveal_diameter_deg >= 180.0 || parafoveal_diameter_deg >= 180.0) {
        throw ValidationError("visual angles must be < 180 degrees");
    }
}

double pixels_per_cm(const DisplayGeometry& geom) {
    geom.validate();
    const double diag_px = std::hypot(static_cast<double>(geom.resolution_width_px),
                                      static_cast<double>(geom.resolution_height_px));
    return diag_px / (geom.diagonal_inches * kCmPerInch);
}

RegionRadii compute_radii(const DisplayGeometry& geom, RadiiForm form) {
    const double ppcm = pixels_per_cm(geom); // validates

    const auto half_angle_px = [&](double diameter_deg) {
        return geom.viewing_distance_cm * std::tan(deg_to_rad(diameter_deg) / 2.0) * ppcm;
    };

    RegionRadii radii;
    radii.r_foveal_px = half_angle_px(geom.foveal_diameter_deg);
    radii.r_parafoveal_px = half_angle_px(geom.parafoveal_diameter_deg);
    if (form == RadiiForm::additive) {
        radii.r_parafoveal_px += radii.r_foveal_px;
    }
    radii.candidate_radius_px = 2.0 * radii.r_foveal_px;

    if (radii.r_parafoveal_px <= radii.r_foveal_px) {
        throw ValidationError("derived parafoveal radius does not exceed foveal radius");
    }
    return radii;
}

} // namespace readseq
