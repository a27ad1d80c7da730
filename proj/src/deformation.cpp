#include "invsq/deformation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "invsq/types.hpp"

namespace invsq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Profiles take |y| first so G(-y) == G(y) bit-exactly.
double g_cutoff(double y) { return y * y; }

double g_kmm(double y) {
    const double t = y * y;
    if (t >= 1.0) return kInf;
    return t / (1.0 - t);
}

double g_sine(double y) {
    const double s = std::sin(M_PI * std::fabs(y) / 2.0);
    return (4.0 / (M_PI * M_PI)) * s * s;
}

double g_tan(double y) {
    const double ay = std::fabs(y);
    if (ay >= 1.0) return kInf;
    const double t = std::tan(M_PI * ay / 2.0);
    return (4.0 / (M_PI * M_PI)) * t * t;
}

}  // namespace

const std::vector<std::string>& builtin_deformation_names() {
    static const std::vector<std::string> names = {"cutoff", "kmm", "sine", "tan"};
    return names;
}

DeformationSpec builtin_deformation(const std::string& name) {
    // b and a are quoted at beta = 1.  The dimensionless profile G is
    // beta-independent, so they only feed minimal_length().
    if (name == "cutoff")
        return {"cutoff", 1.0, 1.0, 1.0, false, g_cutoff};
    if (name == "kmm")
        return {"kmm", 1.0, 1.0, kInf, true, g_kmm};
    if (name == "sine")
        return {"sine", 1.0, M_PI / 2.0, 1.0, false, g_sine};
    if (name == "tan")
        return {"tan", 1.0, M_PI / 2.0, kInf, true, g_tan};
    std::string msg = "unknown deformation '" + name + "'; valid names:";
    for (const auto& n : builtin_deformation_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

double kinetic_profile(const DeformationSpec& spec, double y) {
    if (std::fabs(y) > 1.0)
        throw std::domain_error("kinetic_profile: |y| > 1");
    return spec.G(y);
}

double minimal_length(const DeformationSpec& spec) {
    if (std::isinf(spec.b)) return 0.0;
    return M_PI / (2.0 * spec.b);
}

double schroedinger_coefficient(const DeformationSpec& spec, double alpha0,
                                double epsilon, double y) {
    const double g = kinetic_profile(spec, y);
    if (std::isinf(g)) return 0.0;
    return alpha0 / (g + epsilon);
}

}  // namespace invsq
