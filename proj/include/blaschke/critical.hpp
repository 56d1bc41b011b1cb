#pragma once

#include <utility>
#include <vector>

#include "blaschke/disk.hpp"
#include "blaschke/poly.hpp"

namespace blaschke {

/// A root of the critical polynomial fell inside the classification band
/// 1 - 1e-7 < |root| < 1 + 1e-7: the input zeros are too close to the
/// boundary to separate interior critical points from their reflections.
class IndecisiveRoot : public std::runtime_error {
public:
    explicit IndecisiveRoot(Complex root)
        : std::runtime_error("critical-polynomial root too close to the unit circle to classify"),
          root_(root) {}
    Complex root() const noexcept { return root_; }

private:
    Complex root_;
};

struct CriticalResult {
    PointMultiset critical_points;           // the d interior roots
    std::vector<Complex> reflected_partners; // finite exterior roots
    std::vector<double> residuals;           // |f'(c)| per critical point, canonical order
    int partners_at_infinity = 0;            // degree deficit when some a_j = 0
};

/// C = N'D - N D' for N(z) = z prod(z - a_j), D(z) = prod(1 - conj(a_j) z).
/// Its roots are the critical points of the product in the whole plane,
/// closed under reflection z -> 1/conj(z). Degree 2d - k when 0 occurs k
/// times among the zeros (the reflected partners sit at infinity).
ComplexPolynomial critical_polynomial(const PointMultiset& zeros);

/// The forward map: zero multiset -> critical multiset (both size d).
CriticalResult forward_phi(const PointMultiset& zeros);

/// Critical multiset of `zeros`, grouped into distinct points with
/// multiplicities. A cluster of multiplicity m means local degree m + 1.
/// Nearby roots are merged only when the polynomial cannot distinguish the
/// group from an exact multiple root at working precision; accepted cluster
/// centers are refined by Newton on the (m-1)-th derivative.
std::vector<std::pair<Complex, int>> multiplicity_profile(const PointMultiset& zeros);

/// Single-linkage grouping of points at the given merge radius.
std::vector<std::pair<Complex, int>> cluster_points(std::span<const Complex> pts, double radius);

}  // namespace blaschke
