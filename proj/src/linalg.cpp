#include "giantspin/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace giantspin {

SymMatrix::SymMatrix(int dim, std::optional<int> bandwidth)
    : dim_(dim), bandwidth_(bandwidth)
{
    if (dim < 1)
        throw validation_error("SymMatrix dimension must be >= 1");
    if (bandwidth && (*bandwidth < 0 || *bandwidth >= dim))
        throw validation_error("SymMatrix bandwidth hint out of range");
    entries_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

void SymMatrix::set(int i, int j, double value)
{
    assert(i >= 0 && i < dim_ && j >= 0 && j < dim_);
    entries_[static_cast<size_t>(i) * dim_ + j] = value;
    entries_[static_cast<size_t>(j) * dim_ + i] = value;
}

double SymMatrix::frobenius_norm() const
{
    double sum = 0.0;
    for (double v : entries_)
        sum += v * v;
    return std::sqrt(sum);
}

double SymMatrix::trace() const
{
    double t = 0.0;
    for (int i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

namespace {

constexpr int kMaxQLIterations = 50;

// Householder reduction to tridiagonal form with accumulation of the
// orthogonal transform in z; d receives the diagonal, e the subdiagonal
// (e[0] unused).
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d,
                    std::vector<double>& e)
{
    auto a = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k)
                scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k)
                        g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k)
                    g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k)
                    a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (int j = 0; j <= l; ++j)
            a(j, i) = a(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into z.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, int n)
{
    auto zz = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == kMaxQLIterations) {
                    std::ostringstream msg;
                    msg << "QL iteration failed to converge for eigenvalue " << l
                        << " of " << n << " after " << kMaxQLIterations << " iterations";
                    throw numeric_error(msg.str(), iter);
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        // negligible rotation: deflate and restart the sweep
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = zz(k, i + 1);
                        zz(k, i + 1) = s * zz(k, i) + c * f;
                        zz(k, i) = c * zz(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void check_input(const SymMatrix& m)
{
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(m(i, j)))
                throw validation_error("eigh: non-finite matrix entry");
            if (m(i, j) != m(j, i))
                throw validation_error("eigh: matrix is not exactly symmetric");
        }
    if (m.bandwidth()) {
        const int b = *m.bandwidth();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (std::abs(i - j) > b && m(i, j) != 0.0)
                    throw validation_error("eigh: nonzero entry outside declared bandwidth");
    }
}

} // namespace

Spectrum eigh(const SymMatrix& matrix, std::optional<int> n_lowest)
{
    const int n = matrix.dim();
    check_input(matrix);
    if (n_lowest && (*n_lowest < 1 || *n_lowest > n))
        throw validation_error("eigh: n_lowest out of range");
    const int n_out = n_lowest.value_or(n);

    std::vector<double> z(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z[static_cast<size_t>(i) * n + j] = matrix(i, j);

    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
        z[0] = 1.0;
    } else {
        tridiagonalize(z, n, d, e);
        ql_implicit(d, e, z, n);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a] < d[b]; });

    Spectrum spec;
    spec.eigenvalues.reserve(n_out);
    spec.eigenvectors.reserve(n_out);
    spec.residuals.reserve(n_out);
    for (int k = 0; k < n_out; ++k) {
        const int col = order[k];
        spec.eigenvalues.push_back(d[col]);
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = z[static_cast<size_t>(i) * n + col];
        spec.eigenvectors.push_back(std::move(v));
    }

    const double residual_bound = 1e-10 * (1.0 + matrix.frobenius_norm());
    for (int k = 0; k < n_out; ++k) {
        const auto& v = spec.eigenvectors[k];
        const double lambda = spec.eigenvalues[k];
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double hv = 0.0;
            for (int j = 0; j < n; ++j)
                hv += matrix(i, j) * v[j];
            const double r = hv - lambda * v[i];
            sum += r * r;
        }
        const double res = std::sqrt(sum);
        if (res > residual_bound) {
            std::ostringstream msg;
            msg << "eigh: residual " << res << " K for eigenvalue " << k
                << " exceeds bound " << residual_bound << " K";
            throw numeric_error(msg.str());
        }
        spec.residuals.push_back(res);
    }
    spec.labels.assign(n_out, std::string());
    return spec;
}

} // namespace giantspin
