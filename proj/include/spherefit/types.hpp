#pragma once

#include <stdexcept>
#include <string>

namespace spherefit {

// One 3D sample. Fit entry points reject non-finite coordinates.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Center (x0, y0, z0) and radius r of a fitted or ground-truth sphere.
struct SphereParams {
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 0.0;
    double r = 0.0;
};

enum class fit_errc {
    invalid_input,         // non-finite data or bad configuration
    insufficient_points,   // fewer points than the model has parameters
    degenerate_geometry,   // coplanar/collinear data, singular center system
    numerical_degeneracy,  // nonpositive squared radius
};

class FitError : public std::runtime_error {
public:
    FitError(fit_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    fit_errc code() const noexcept { return code_; }

private:
    fit_errc code_;
};

}  // namespace spherefit
