#pragma once

#include <complex>

namespace invsq {

using cplx = std::complex<double>;

// Principal-branch log-Gamma (analytic on the cut plane, real on (0,inf),
// conjugate-symmetric).  Throws on the poles 0, -1, -2, ...
cplx lngamma(cplx z);

// Complex digamma, same pole set.
cplx digamma(cplx z);

// Gauss hypergeometric function for real z <= 0 and complex parameters.
// Series for |z| <= 1/2, Pfaff transform on (-9, -1/2), the z -> 1/z
// connection formula beyond; a == b falls back to the degenerate
// logarithmic expansion, near-integer a-b to a budgeted Pfaff series.
cplx hyp2f1(cplx a, cplx b, cplx c, double z);

}  // namespace invsq
