#pragma once

#include <complex>
#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

namespace blaschke {

using Complex = std::complex<double>;

// Points with 1 - 1e-14 < |z| are rejected as boundary: downstream
// denominators 1 - conj(a) z degrade there.
inline constexpr double kDiskBoundaryTol = 1e-14;

// Lexicographic order by (re, im); the canonical multiset order.
inline bool canonical_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

/// A point strictly inside the unit disk.
class DiskPoint {
public:
    explicit DiskPoint(Complex z) : z_(z) {
        if (std::norm(z) >= (1.0 - kDiskBoundaryTol) * (1.0 - kDiskBoundaryTol))
            throw std::domain_error("DiskPoint: |z| must be < 1 - 1e-14");
    }
    DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

    Complex value() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }
    double modulus() const noexcept { return std::abs(z_); }

    friend bool operator==(const DiskPoint& a, const DiskPoint& b) noexcept {
        return a.z_ == b.z_;
    }

private:
    Complex z_;
};

/// Unordered multiset of disk points, stored in canonical order.
class PointMultiset {
public:
    PointMultiset() = default;
    explicit PointMultiset(std::vector<DiskPoint> pts);
    static PointMultiset from_values(std::span<const Complex> values);
    static PointMultiset from_values(std::initializer_list<Complex> values);

    std::size_t size() const noexcept { return pts_.size(); }
    bool empty() const noexcept { return pts_.empty(); }
    const DiskPoint& operator[](std::size_t i) const { return pts_[i]; }
    std::vector<Complex> values() const;

    auto begin() const noexcept { return pts_.begin(); }
    auto end() const noexcept { return pts_.end(); }

    friend bool operator==(const PointMultiset& a, const PointMultiset& b) noexcept {
        if (a.pts_.size() != b.pts_.size()) return false;
        for (std::size_t i = 0; i < a.pts_.size(); ++i)
            if (!(a.pts_[i] == b.pts_[i])) return false;
        return true;
    }

private:
    std::vector<DiskPoint> pts_;
};

/// tau(z) = e^{i theta} (z - a) / (1 - conj(a) z). Maps the circle to itself.
class DiskAutomorphism {
public:
    DiskAutomorphism(DiskPoint a, double theta);

    /// The rotation fixing 1 and sending a to 0: multiplier (1 - conj(a)) / (1 - a).
    static DiskAutomorphism normalized(DiskPoint a);

    Complex eval(Complex z) const;
    Complex derivative(Complex z) const;

    DiskPoint preimage_of_zero() const noexcept { return a_; }
    double rotation() const noexcept { return theta_; }

private:
    DiskPoint a_;
    double theta_;
    Complex phase_;  // e^{i theta}
};

/// Degree-(d+1) proper self-map of the disk with f(0) = 0 and f(1) = 1:
/// f(z) = z * prod_j [(1 - conj(a_j)) / (1 - a_j)] (z - a_j) / (1 - conj(a_j) z).
/// Evaluated factor by factor; each factor is exactly 1 at z = 1.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(PointMultiset zeros);

    int degree() const noexcept { return static_cast<int>(zeros_.size()) + 1; }
    const PointMultiset& zeros() const noexcept { return zeros_; }

    Complex eval(Complex z) const;
    /// f'(z) by the product rule over factors (no logarithmic-derivative form,
    /// which has removable singularities at the zeros).
    Complex derivative(Complex z) const;

private:
    PointMultiset zeros_;
    std::vector<Complex> unimodular_;  // per-factor constants (1 - conj(a))/(1 - a)
};

/// beta_a(z) = [(1 - conj(a)) / (1 - a)] (z - a) / (1 - conj(a) z);
/// sends a to 0 and fixes 1. Rejects a on or outside the circle.
Complex beta_eval(Complex a, Complex z);

Complex blaschke_eval(const BlaschkeProduct& f, Complex z);
Complex blaschke_derivative(const BlaschkeProduct& f, Complex z);

/// On |z| = 1: z f'(z)/f(z) = sum_j (1 - |a_j|^2) / |z - a_j|^2 over all d+1
/// zeros (including the mandatory one at the origin). Positive, equals |f'(z)|.
/// Rejects z with | |z| - 1 | > 1e-12.
double log_derivative_on_circle(const BlaschkeProduct& f, Complex z);

Complex automorphism_eval(const DiskAutomorphism& t, Complex z);

/// Diagnostic for zero sequences drifting to the boundary: beta_{a_n}(z) for
/// the last element. The limits themselves are asserted by the test harness.
Complex degeneration_limit(std::span<const DiskPoint> a_sequence, DiskPoint z);

/// Anything with a value and a derivative on the disk.
template <typename F>
concept DiskMap = requires(const F& f, Complex z) {
    { f.eval(z) } -> std::convertible_to<Complex>;
    { f.derivative(z) } -> std::convertible_to<Complex>;
};

/// f after g, kept as a composition (never re-expanded into product form).
template <DiskMap F, DiskMap G>
struct Composition {
    F outer;
    G inner;
    Complex eval(Complex z) const { return outer.eval(inner.eval(z)); }
    Complex derivative(Complex z) const {
        return outer.derivative(inner.eval(z)) * inner.derivative(z);
    }
};

template <DiskMap F, DiskMap G>
Composition<F, G> compose(F f, G g) {
    return Composition<F, G>{std::move(f), std::move(g)};
}

}  // namespace blaschke
