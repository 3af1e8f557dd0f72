#ifndef READSEQ_GEOMETRY_HPP
#define READSEQ_GEOMETRY_HPP

namespace readseq {

// How the parafoveal radius is derived from the visual angles.
//
// The naive half-angle projection reproduces the expected foveal radius but
// falls well short for the parafoveal one on a 24" 1920x1080 display at 65 cm
// (~144 px instead of ~185 px). Adding the foveal radius to the parafoveal
// projection lands within a pixel of 185, so that is the default; the direct
// projection stays available as a policy.
enum class RadiiForm {
    additive, // r_para = r_foveal + d * tan(theta_para / 2) * ppcm
    direct,   // r_para =            d * tan(theta_para / 2) * ppcm
};

// Physical screen and viewer parameters. Defaults are a 24" 1920x1080 display
// viewed from 65 cm with 2 deg foveal and 7 deg parafoveal diameters.
struct DisplayGeometry {
    double diagonal_inches = 24.0;
    int resolution_width_px = 1920;
    int resolution_height_px = 1080;
    double viewing_distance_cm = 65.0;
    double foveal_diameter_deg = 2.0;
    double parafoveal_diameter_deg = 7.0;

    // Throws ValidationError unless all quantities are finite, strictly
    // positive, angles < 180 deg, and parafoveal > foveal.
    void validate() const;
};

// Pixel radii that parameterize all downstream region tests.
struct RegionRadii {
    double r_foveal_px = 0.0;
    double r_parafoveal_px = 0.0;
    double candidate_radius_px = 0.0; // always 2 * r_foveal_px
};

// Screen pixel density along the diagonal: sqrt(w^2 + h^2) / (diag * 2.54).
double pixels_per_cm(const DisplayGeometry& geom);

// Projects the visual angles onto the screen plane. Radii are kept as reals;
// rounding to whole pixels is a display-time concern only.
RegionRadii compute_radii(const DisplayGeometry& geom,
                          RadiiForm form = RadiiForm::additive);

} // namespace readseq

#endif
