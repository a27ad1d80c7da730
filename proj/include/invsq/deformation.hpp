#pragma once

#include <functional>
#include <string>
#include <vector>

namespace invsq {

// A deformed commutation relation [X,P] = i hbar f(P), represented in the
// dimensionless variables by the scaled kinetic profile
//
//     G(y) = g^2(b y) / b^2,   y in [-1,1].
//
// G is even, vanishes at the origin and is nondecreasing on [0,1]; for
// algebras whose g diverges at the momentum wall, G(+-1) = +inf and the
// guarded coefficient alpha0/(G+eps) is taken as zero there.  All solvers
// work with hbar = m = 1; b and beta are retained as metadata (the physical
// energy is recovered as E = -eps b^2 / (2m), never applied internally).
struct DeformationSpec {
    std::string name;
    double beta = 1.0;   // deformation parameter, documentation only
    double b = 1.0;      // momentum-space half-width, may be +inf
    double a = 1.0;      // range of P = g(p), may be +inf
    bool diverges_at_boundary = false;
    std::function<double(double)> G;
};

// Registry lookup for the canonical names: cutoff, kmm, sine, tan.
DeformationSpec builtin_deformation(const std::string& name);
const std::vector<std::string>& builtin_deformation_names();

// G(y) with a domain check; +inf signals a wall divergence.
double kinetic_profile(const DeformationSpec& spec, double y);

// pi*hbar/(2b); zero when b is infinite.
double minimal_length(const DeformationSpec& spec);

// Guarded ODE/kernel coefficient alpha0/(G(y)+eps); zero where G diverges.
double schroedinger_coefficient(const DeformationSpec& spec, double alpha0,
                                double epsilon, double y);

}  // namespace invsq
