#include "invsq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invsq {

namespace {

// sin(pi t) with exact zeros at integer t.
double sin_pi(double t) {
    double r = std::fmod(t, 2.0);
    if (r < 0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r < 0.5) return std::sin(M_PI * r);
    if (r < 1.5) return std::sin(M_PI * (1.0 - r));
    return std::sin(M_PI * (r - 2.0));
}

void check_momentum(double b, double p, const char* who) {
    if (std::fabs(p) > b)
        throw std::domain_error(std::string(who) + ": momentum outside [-b,b]");
}

}  // namespace

double chi(int n, double b) {
    if (n < 1) throw std::domain_error("chi: n must be >= 1");
    if (!(b > 0)) throw std::domain_error("chi: b must be > 0");
    return M_PI * M_PI * double(n) * double(n) / (4.0 * b * b);
}

double phi(int n, double b, double p) {
    if (n < 1) throw std::domain_error("phi: n must be >= 1");
    check_momentum(b, p, "phi");
    return sin_pi(0.5 * n * (p + b) / b) / std::sqrt(b);
}

double kernel_closed(double b, double p, double q) {
    check_momentum(b, p, "kernel_closed");
    check_momentum(b, q, "kernel_closed");
    const double hi = std::max(p, q);
    const double lo = std::min(p, q);
    return (b - hi) * (b + lo) / (2.0 * b);
}

double kernel_spectral(double b, double p, double q, int terms) {
    check_momentum(b, p, "kernel_spectral");
    check_momentum(b, q, "kernel_spectral");
    if (terms < 1) throw std::domain_error("kernel_spectral: terms must be >= 1");
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n)
        sum += phi(n, b, p) * phi(n, b, q) / chi(n, b);
    return sum;
}

double kernel_scaled(double y, double yp) {
    return kernel_closed(1.0, y, yp);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

KernelDiscretization nystrom_matrix(const DeformationSpec& spec, double alpha0, int n) {
    if (!(alpha0 > 0)) throw std::domain_error("nystrom_matrix: alpha0 must be > 0");
    if (n < 4) throw std::domain_error("nystrom_matrix: need at least 4 nodes");
    KernelDiscretization disc;
    disc.alpha0 = alpha0;
    disc.deformation = spec.name;
    gauss_legendre(n, disc.nodes, disc.weights);
    std::vector<double> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = std::sqrt(disc.weights[i]);
    disc.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = alpha0 * sw[i] * kernel_scaled(disc.nodes[i], disc.nodes[j]) * sw[j];
            disc.matrix(i, j) = v;
            disc.matrix(j, i) = v;
        }
        disc.matrix(i, i) -= spec.G(disc.nodes[i]);
    }
    return disc;
}

std::vector<EigenLevel> nystrom_spectrum(const KernelDiscretization& disc, int k) {
    if (k < 1) throw std::domain_error("nystrom_spectrum: k must be >= 1");
    const int n = int(disc.matrix.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(disc.matrix);
    if (es.info() != Eigen::Success)
        throw numeric_error("nystrom_spectrum: symmetric eigensolver did not converge (info=" +
                            std::to_string(int(es.info())) + ")");
    std::vector<EigenLevel> levels;
    // Eigen sorts ascending; bound states are the positive tail.
    for (int pos = n - 1; pos >= 0 && int(levels.size()) < k; --pos) {
        const double eps = es.eigenvalues()(pos);
        if (!(eps > 0)) break;
        const Eigen::VectorXd v = es.eigenvectors().col(pos);

        // parity under index reflection (nodes are symmetric about 0)
        double s_even = 0.0, s_odd = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = v(i) - v(n - 1 - i);
            const double s = v(i) + v(n - 1 - i);
            s_even += d * d;
            s_odd += s * s;
        }
        EigenLevel lvl;
        lvl.epsilon = eps;
        lvl.parity = s_even <= s_odd ? Parity::even : Parity::odd;
        lvl.index = int(levels.size());
        lvl.method = Method::nystrom;
        lvl.residual = (disc.matrix * v - eps * v).lpNorm<Eigen::Infinity>();
        // node estimate from the sampled eigenfunction on the y > 0 half
        int nodes = 0;
        double prev = 0.0;
        for (int i = n / 2; i < n; ++i) {
            const double cur = v(i);
            if (prev != 0.0 && cur * prev < 0.0) ++nodes;
            if (cur != 0.0) prev = cur;
        }
        lvl.nodes = nodes;
        levels.push_back(lvl);
    }
    return levels;
}

}  // namespace invsq
