#pragma once

#include <stdexcept>
#include <string>

namespace invsq {

enum class Parity { even, odd };
enum class Method { shooting, nystrom, analytic_weak, analytic_strong, wkb };

const char* to_string(Parity p);
const char* to_string(Method m);
Parity parse_parity(const std::string& s);
Method parse_method(const std::string& s);

// Even states sit at even global indices, odd states at odd ones.
inline Parity parity_of_index(int index) {
    return index % 2 == 0 ? Parity::even : Parity::odd;
}

// One bound state of the dimensionless problem, eps = -2mE/b^2 > 0.
struct EigenLevel {
    double epsilon = 0;
    Parity parity = Parity::even;
    int index = 0;       // global level number, 0 = ground
    int nodes = 0;       // zeros of f on (0,1)
    Method method = Method::shooting;
    double residual = 0;
};

// Solver failure carrying numeric diagnostics.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested level does not exist (weak coupling has a single even state).
struct no_bound_state : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Level exists but sits below the eps floor; reported as unresolved.
struct bracket_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace invsq
