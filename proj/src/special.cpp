#include "invsq/special.hpp"

#include <cmath>
#include <stdexcept>

#include "invsq/types.hpp"

namespace invsq {

namespace {

constexpr double kTol = 1e-15;

bool near_int(cplx z, double tol, long* out = nullptr) {
    if (std::fabs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    if (std::fabs(z.real() - r) > tol) return false;
    if (out) *out = long(r);
    return true;
}

bool is_nonpositive_int(cplx z, long* out = nullptr) {
    long m = 0;
    if (!near_int(z, 1e-14, &m) || m > 0) return false;
    if (out) *out = m;
    return true;
}

// Lanczos g=7, n=9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lngamma_right(cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx lngamma(cplx z) {
    if (is_nonpositive_int(z))
        throw std::domain_error("lngamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(lngamma(std::conj(z)));
    if (z.real() >= 0.5) return lngamma_right(z);
    // Reflection with the upper-half-plane branch of ln sin(pi z); keeps the
    // result on the analytic continuation (limit from above on the cut).
    const cplx w = M_PI * z;
    const cplx lnsin = cplx(0.0, M_PI / 2.0) - std::log(2.0) - cplx(0.0, 1.0) * w +
                       std::log(1.0 - std::exp(cplx(0.0, 2.0) * w));
    return std::log(M_PI) - lnsin - lngamma(1.0 - z);
}

cplx digamma(cplx z) {
    if (is_nonpositive_int(z))
        throw std::domain_error("digamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const cplx w = M_PI * z;
        return digamma(1.0 - z) - M_PI * std::cos(w) / std::sin(w);
    }
    cplx acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series with Bernoulli numbers
    static const double b2k[7] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,      -1.0 / 30,
                                  5.0 / 66, -691.0 / 2730, 7.0 / 6};
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx sum = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    for (int k = 0; k < 7; ++k) {
        sum -= b2k[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return acc + sum;
}

namespace {

// Plain power series; terminates on its own for polynomial cases.
cplx series_2f1(cplx a, cplx b, cplx c, double z, long budget) {
    cplx term = 1.0, sum = 1.0;
    int small_streak = 0;
    for (long n = 0; n < budget; ++n) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (term == cplx(0.0)) return sum;  // terminating (polynomial) case
        if (std::abs(term) <= kTol * (std::abs(sum) + 1e-300)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw numeric_error("hyp2f1: series did not converge within budget");
}

cplx pfaff_2f1(cplx a, cplx b, cplx c, double z, long budget) {
    const double w = z / (z - 1.0);
    return std::pow(cplx(1.0 - z), -a) * series_2f1(a, c - b, c, w, budget);
}

// Gamma-ratio coefficient Gamma(c) Gamma(num) / (Gamma(d1) Gamma(d2));
// zero when a denominator hits a pole.
cplx gamma_coeff(cplx c, cplx num, cplx d1, cplx d2) {
    if (is_nonpositive_int(d1) || is_nonpositive_int(d2)) return 0.0;
    return std::exp(lngamma(c) + lngamma(num) - lngamma(d1) - lngamma(d2));
}

// z -> 1/z connection for large negative z, generic (a-b not an integer).
cplx connection_2f1(cplx a, cplx b, cplx c, double z) {
    const double lz = std::log(-z);
    const cplx t1 = gamma_coeff(c, b - a, b, c - a) * std::exp(-a * lz) *
                    series_2f1(a, a - c + 1.0, a - b + 1.0, 1.0 / z, 100000);
    const cplx t2 = gamma_coeff(c, a - b, a, c - b) * std::exp(-b * lz) *
                    series_2f1(b, b - c + 1.0, b - a + 1.0, 1.0 / z, 100000);
    return t1 + t2;
}

// Degenerate a == b limit of the 1/z connection:
//   F(a,a;c;z) = G (-z)^{-a} sum_k D_k z^{-k}
//                  [ln(-z) + 2 psi(k+1) - psi(a+k) - psi(a-c+1+k) + pi cot(pi(c-a))]
// with D_k = (a)_k (a-c+1)_k / (k!)^2 and G = Gamma(c)/(Gamma(a)Gamma(c-a)).
// Requires c - a non-integer.
cplx degenerate_2f1(cplx a, cplx c, double z) {
    if (near_int(c - a, 1e-12))
        throw numeric_error("hyp2f1: doubly degenerate case (a=b, c-a integer) unsupported");
    const cplx cot_term = M_PI * std::cos(M_PI * (c - a)) / std::sin(M_PI * (c - a));
    const double lz = std::log(-z);
    cplx dk = 1.0;
    double h = -0.5772156649015328606;  // psi(1)
    cplx sum = 0.0;
    for (long k = 0; k < 500; ++k) {
        const cplx fk = double(k);
        if (k > 0) {
            dk *= (a + fk - 1.0) * (a - c + fk) / (double(k) * double(k));
            h += 1.0 / double(k);
        }
        const cplx bracket = lz + 2.0 * h - digamma(a + fk) - digamma(a - c + 1.0 + fk);
        const cplx term = dk * std::pow(z, double(-k)) * (bracket + cot_term);
        sum += term;
        if (k > 2 && std::abs(term) <= kTol * std::abs(sum)) break;
    }
    const cplx g = std::exp(lngamma(c) - lngamma(a) - lngamma(c - a));
    return g * std::exp(-a * lz) * sum;
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, double z) {
    if (z > 0.0)
        throw std::domain_error("hyp2f1: only z <= 0 is supported");
    if (is_nonpositive_int(c))
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    if (z == 0.0) return 1.0;
    if (std::abs(c - a) < 1e-14) return std::pow(cplx(1.0 - z), -b);
    if (std::abs(c - b) < 1e-14) return std::pow(cplx(1.0 - z), -a);
    if (is_nonpositive_int(a) || is_nonpositive_int(b))
        return series_2f1(a, b, c, z, 100000);  // polynomial
    if (z >= -0.5) return series_2f1(a, b, c, z, 100000);
    if (z > -9.0) return pfaff_2f1(a, b, c, z, 100000);

    const cplx ab = a - b;
    if (std::abs(ab) < 1e-14) return degenerate_2f1(a, c, z);
    if (near_int(ab, 1e-6)) {
        // Near-integer separation degrades the connection formula by
        // cancellation; the Pfaff series still converges (slowly) since
        // |z/(z-1)| < 1.
        return pfaff_2f1(a, b, c, z, 4000000);
    }
    return connection_2f1(a, b, c, z);
}

}  // namespace invsq
