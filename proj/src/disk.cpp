#include "blaschke/disk.hpp"

#include <algorithm>
#include <cmath>

namespace blaschke {

PointMultiset::PointMultiset(std::vector<DiskPoint> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end(), [](const DiskPoint& a, const DiskPoint& b) {
        return canonical_less(a.value(), b.value());
    });
}

PointMultiset PointMultiset::from_values(std::span<const Complex> values) {
    std::vector<DiskPoint> pts;
    pts.reserve(values.size());
    for (Complex v : values) pts.emplace_back(v);
    return PointMultiset(std::move(pts));
}

PointMultiset PointMultiset::from_values(std::initializer_list<Complex> values) {
    return from_values(std::span<const Complex>(values.begin(), values.size()));
}

std::vector<Complex> PointMultiset::values() const {
    std::vector<Complex> v;
    v.reserve(pts_.size());
    for (const DiskPoint& p : pts_) v.push_back(p.value());
    return v;
}

DiskAutomorphism::DiskAutomorphism(DiskPoint a, double theta)
    : a_(a), theta_(theta), phase_(std::polar(1.0, theta)) {}

DiskAutomorphism DiskAutomorphism::normalized(DiskPoint a) {
    // (1 - conj(a)) / (1 - a) is unimodular; its argument is the rotation.
    const Complex u = (1.0 - std::conj(a.value())) / (1.0 - a.value());
    return DiskAutomorphism(a, std::arg(u));
}

Complex DiskAutomorphism::eval(Complex z) const {
    const Complex a = a_.value();
    return phase_ * (z - a) / (1.0 - std::conj(a) * z);
}

Complex DiskAutomorphism::derivative(Complex z) const {
    const Complex a = a_.value();
    const Complex den = 1.0 - std::conj(a) * z;
    return phase_ * (1.0 - std::norm(a)) / (den * den);
}

BlaschkeProduct::BlaschkeProduct(PointMultiset zeros) : zeros_(std::move(zeros)) {
    unimodular_.reserve(zeros_.size());
    for (const DiskPoint& a : zeros_)
        unimodular_.push_back((1.0 - std::conj(a.value())) / (1.0 - a.value()));
}

Complex BlaschkeProduct::eval(Complex z) const {
    Complex w = z;
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
        const Complex a = zeros_[j].value();
        w *= unimodular_[j] * (z - a) / (1.0 - std::conj(a) * z);
    }
    return w;
}

Complex BlaschkeProduct::derivative(Complex z) const {
    const std::size_t n = zeros_.size() + 1;  // factor 0 is the map z itself
    std::vector<Complex> g(n), gd(n);
    g[0] = z;
    gd[0] = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        const Complex a = zeros_[j - 1].value();
        const Complex den = 1.0 - std::conj(a) * z;
        g[j] = unimodular_[j - 1] * (z - a) / den;
        gd[j] = unimodular_[j - 1] * (1.0 - std::norm(a)) / (den * den);
    }
    // prefix[k] = g_0 ... g_{k-1}, suffix[k] = g_{k+1} ... g_{n-1}
    std::vector<Complex> suffix(n + 1);
    suffix[n] = 1.0;
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * g[k];
    Complex prefix = 1.0;
    Complex total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        total += prefix * gd[k] * suffix[k + 1];
        prefix *= g[k];
    }
    return total;
}

Complex beta_eval(Complex a, Complex z) {
    if (std::abs(a) >= 1.0)
        throw std::domain_error("beta_eval: a must lie strictly inside the unit disk");
    const Complex u = (1.0 - std::conj(a)) / (1.0 - a);
    return u * (z - a) / (1.0 - std::conj(a) * z);
}

Complex blaschke_eval(const BlaschkeProduct& f, Complex z) { return f.eval(z); }

Complex blaschke_derivative(const BlaschkeProduct& f, Complex z) { return f.derivative(z); }

double log_derivative_on_circle(const BlaschkeProduct& f, Complex z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::domain_error("log_derivative_on_circle: z must lie on the unit circle");
    double sum = 1.0 / std::norm(z);  // the zero at the origin
    for (const DiskPoint& p : f.zeros()) {
        const Complex a = p.value();
        sum += (1.0 - std::norm(a)) / std::norm(z - a);
    }
    return sum;
}

Complex automorphism_eval(const DiskAutomorphism& t, Complex z) { return t.eval(z); }

Complex degeneration_limit(std::span<const DiskPoint> a_sequence, DiskPoint z) {
    if (a_sequence.empty())
        throw std::invalid_argument("degeneration_limit: empty sequence");
    return beta_eval(a_sequence.back().value(), z.value());
}

}  // namespace blaschke
