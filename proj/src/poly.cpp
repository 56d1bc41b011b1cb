#include "blaschke/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace blaschke {

namespace {

void trim(std::vector<Complex>& c) {
    double mx = 0.0;
    for (Complex v : c) mx = std::max(mx, std::abs(v));
    const double cut = 1e-14 * mx;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
    trim(coeffs);
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots, Complex leading) {
    std::vector<Complex> c{leading};
    for (Complex r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

int ComplexPolynomial::degree() const noexcept {
    return static_cast<int>(coeffs.size()) - 1;
}

Complex ComplexPolynomial::eval(Complex z) const {
    Complex v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
    return v;
}

ComplexPolynomial poly_mul(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return ComplexPolynomial{};
    std::vector<Complex> out(p.coeffs.size() + q.coeffs.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            out[i + j] += p.coeffs[i] * q.coeffs[j];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial poly_add(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<Complex> out(std::max(p.coeffs.size(), q.coeffs.size()), Complex(0.0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) out[i] += q.coeffs[i];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial poly_sub(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<Complex> out(std::max(p.coeffs.size(), q.coeffs.size()), Complex(0.0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) out[i] -= q.coeffs[i];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial poly_derivative(const ComplexPolynomial& p) {
    if (p.coeffs.size() <= 1) return ComplexPolynomial{};
    std::vector<Complex> out(p.coeffs.size() - 1);
    for (std::size_t k = 1; k < p.coeffs.size(); ++k)
        out[k - 1] = static_cast<double>(k) * p.coeffs[k];
    return ComplexPolynomial(std::move(out));
}

double residual_scale(const ComplexPolynomial& p, Complex z) {
    const double m = std::max(1.0, std::abs(z));
    double scale = 0.0;
    double pw = 1.0;
    for (Complex c : p.coeffs) {
        scale += std::abs(c) * pw;
        pw *= m;
    }
    return scale;
}

namespace {

// Merge roots pairwise closer than `radius` (single linkage) and replace each
// cluster by its centroid, repeated with the summed multiplicity.
std::vector<Complex> merge_clusters(std::vector<Complex> roots, double radius) {
    const std::size_t n = roots.size();
    std::vector<int> label(n, -1);
    int nlab = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = nlab;
        // grow the cluster transitively
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (label[j] >= 0) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (label[k] == nlab && std::abs(roots[j] - roots[k]) < radius) {
                        label[j] = nlab;
                        changed = true;
                        break;
                    }
                }
            }
        }
        ++nlab;
    }
    std::vector<Complex> out;
    out.reserve(n);
    for (int l = 0; l < nlab; ++l) {
        Complex sum = 0.0;
        int cnt = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (label[i] == l) {
                sum += roots[i];
                ++cnt;
            }
        const Complex centroid = sum / static_cast<double>(cnt);
        for (int i = 0; i < cnt; ++i) out.push_back(cnt > 1 ? centroid : sum);
    }
    return out;
}

}  // namespace

std::vector<Complex> find_roots(const ComplexPolynomial& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots: degree must be >= 1");

    std::vector<Complex> c = p.coeffs;
    double mx = 0.0;
    for (Complex v : c) mx = std::max(mx, std::abs(v));

    // Exact deflation of roots at the origin.
    std::size_t k0 = 0;
    while (k0 + 1 < c.size() && std::abs(c[k0]) <= 1e-14 * mx) ++k0;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k0));

    std::vector<Complex> roots(k0, Complex(0.0));
    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;

    std::vector<Complex> d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * c[k];

    const auto pval = [&](Complex z) {
        Complex v = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
        return v;
    };
    const auto dval = [&](Complex z) {
        Complex v = 0.0;
        for (std::size_t k = d.size(); k-- > 0;) v = v * z + d[k];
        return v;
    };

    // Cauchy bound, guesses on a perturbed circle so no symmetry is preserved.
    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k] / c[n]));
    const double r0 = 0.7 * std::min(1.0 + bound, 1e6);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::polar(r0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4);

    for (int it = 0; it < 400; ++it) {
        double moved = 0.0;
        double zmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex pi = pval(z[i]);
            const Complex di = dval(z[i]);
            Complex newton = (di != Complex(0.0)) ? pi / di : Complex(0.1, 0.1);
            Complex s = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const Complex denom = 1.0 - newton * s;
            const Complex w = (denom != Complex(0.0)) ? newton / denom : newton;
            z[i] -= w;
            moved = std::max(moved, std::abs(w));
            zmax = std::max(zmax, std::abs(z[i]));
        }
        if (moved < 1e-14 * std::max(1.0, zmax)) break;
    }

    // Newton polish where the step is small (simple-root regime).
    for (int pass = 0; pass < 3; ++pass)
        for (std::size_t i = 0; i < n; ++i) {
            const Complex di = dval(z[i]);
            if (di == Complex(0.0)) continue;
            const Complex step = pval(z[i]) / di;
            if (std::abs(step) < 1e-6) z[i] -= step;
        }

    z = merge_clusters(std::move(z), 1e-7);
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace blaschke
