#include "blaschke/critical.hpp"

#include <algorithm>
#include <cmath>

namespace blaschke {

ComplexPolynomial critical_polynomial(const PointMultiset& zeros) {
    if (zeros.empty())
        throw std::invalid_argument("critical_polynomial: need at least one zero");
    ComplexPolynomial N(std::vector<Complex>{0.0, 1.0});  // z
    ComplexPolynomial D(std::vector<Complex>{1.0});
    for (const DiskPoint& p : zeros) {
        const Complex a = p.value();
        N = poly_mul(N, ComplexPolynomial(std::vector<Complex>{-a, 1.0}));
        D = poly_mul(D, ComplexPolynomial(std::vector<Complex>{1.0, -std::conj(a)}));
    }
    return poly_sub(poly_mul(poly_derivative(N), D), poly_mul(N, poly_derivative(D)));
}

CriticalResult forward_phi(const PointMultiset& zeros) {
    const int d = static_cast<int>(zeros.size());
    const ComplexPolynomial C = critical_polynomial(zeros);
    const std::vector<Complex> roots = find_roots(C);

    std::vector<Complex> interior;
    std::vector<Complex> exterior;
    for (Complex r : roots) {
        const double m = std::abs(r);
        if (m > 1.0 - 1e-7 && m < 1.0 + 1e-7) throw IndecisiveRoot(r);
        (m < 1.0 ? interior : exterior).push_back(r);
    }
    if (static_cast<int>(interior.size()) != d)
        throw std::runtime_error("forward_phi: interior critical-point count != d");

    CriticalResult out;
    out.critical_points = PointMultiset::from_values(interior);
    out.reflected_partners = std::move(exterior);
    out.partners_at_infinity = 2 * d - static_cast<int>(roots.size());

    const BlaschkeProduct f(zeros);
    out.residuals.reserve(out.critical_points.size());
    for (const DiskPoint& c : out.critical_points)
        out.residuals.push_back(std::abs(f.derivative(c.value())));
    return out;
}

namespace {

// Single-linkage labels; two points share a label when connected by a chain
// of steps each shorter than `radius`.
std::vector<int> linkage_labels(std::span<const Complex> pts, double radius, int& nlab) {
    const std::size_t n = pts.size();
    std::vector<int> label(n, -1);
    nlab = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = nlab;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (label[j] >= 0) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (label[k] == nlab && std::abs(pts[j] - pts[k]) < radius) {
                        label[j] = nlab;
                        changed = true;
                        break;
                    }
            }
        }
        ++nlab;
    }
    return label;
}

// Newton-refine a candidate m-fold root of C as the simple root of C^{(m-1)}.
Complex refine_multiple_root(const ComplexPolynomial& C, Complex guess, int m) {
    ComplexPolynomial q = C;
    for (int j = 0; j < m - 1; ++j) q = poly_derivative(q);
    const ComplexPolynomial qd = poly_derivative(q);
    Complex z = guess;
    for (int it = 0; it < 40; ++it) {
        const Complex dv = qd.eval(z);
        if (dv == Complex(0.0)) break;
        const Complex step = q.eval(z) / dv;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

// A merge is genuine when C and its first m-2 derivatives vanish at the
// refined center down to rounding noise.
bool multiple_root_consistent(const ComplexPolynomial& C, Complex center, int m) {
    ComplexPolynomial q = C;
    for (int j = 0; j <= m - 2; ++j) {
        if (std::abs(q.eval(center)) > 1e-12 * residual_scale(q, center)) return false;
        q = poly_derivative(q);
    }
    return true;
}

}  // namespace

std::vector<std::pair<Complex, int>> cluster_points(std::span<const Complex> pts, double radius) {
    int nlab = 0;
    const std::vector<int> label = linkage_labels(pts, radius, nlab);
    std::vector<std::pair<Complex, int>> out;
    for (int l = 0; l < nlab; ++l) {
        Complex sum = 0.0;
        int cnt = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (label[i] == l) {
                sum += pts[i];
                ++cnt;
            }
        out.emplace_back(sum / static_cast<double>(cnt), cnt);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<Complex, int>> multiplicity_profile(const PointMultiset& zeros) {
    const CriticalResult res = forward_phi(zeros);
    const std::vector<Complex> pts = res.critical_points.values();
    const ComplexPolynomial C = critical_polynomial(zeros);

    int nlab = 0;
    const std::vector<int> label = linkage_labels(pts, 1e-3, nlab);

    std::vector<std::pair<Complex, int>> out;
    for (int l = 0; l < nlab; ++l) {
        std::vector<Complex> members;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (label[i] == l) members.push_back(pts[i]);
        if (members.size() == 1) {
            out.emplace_back(members.front(), 1);
            continue;
        }
        Complex centroid = 0.0;
        for (Complex p : members) centroid += p;
        centroid /= static_cast<double>(members.size());
        const int m = static_cast<int>(members.size());
        const Complex refined = refine_multiple_root(C, centroid, m);
        if (std::abs(refined) < 1.0 && multiple_root_consistent(C, refined, m)) {
            out.emplace_back(refined, m);
        } else {
            for (Complex p : members) out.emplace_back(p, 1);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

}  // namespace blaschke
