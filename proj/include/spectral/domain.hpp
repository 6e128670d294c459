#pragma once

#include <limits>
#include <vector>

#include "spectral/types.hpp"

namespace spectral {

enum class DomainShape { Disc, Halfplane, Annulus, ComplementOfFinite, WholePlane };

enum class ComplementClass { AtLeast2N, Finite, Empty };

/// Planar domain Omega together with complement-cardinality metadata for the
/// hypothesis #(C \ Omega) >= 2n.
class DomainSpec {
 public:
  static DomainSpec disc(Complex center, double radius);
  /// { z : Re(conj(normal) z) < offset }, normal normalized internally.
  static DomainSpec halfplane(Complex normal, double offset);
  static DomainSpec annulus(Complex center, double r_in, double r_out);
  static DomainSpec complement_of_finite(std::vector<Complex> removed);
  static DomainSpec whole_plane();

  bool contains(Complex z) const;

  /// Signed distance to the boundary: positive inside, negative outside,
  /// +infinity for the whole plane.
  double boundary_distance(Complex z) const;

  ComplementClass complement_class() const;

  /// Whether the complement has at least `count` points.
  bool complement_at_least(int count) const;

  DomainShape shape() const { return shape_; }
  Complex center() const { return center_; }
  double radius() const { return radius_; }
  double inner_radius() const { return inner_radius_; }
  Complex normal() const { return normal_; }
  double offset() const { return offset_; }
  const std::vector<Complex>& removed_points() const { return removed_; }

  /// The translated domain { z - lambda : z in Omega }.
  DomainSpec translated(Complex lambda) const;

 private:
  DomainSpec() = default;

  DomainShape shape_ = DomainShape::WholePlane;
  Complex center_{0.0, 0.0};
  double radius_ = 0.0;        // disc / annulus outer radius
  double inner_radius_ = 0.0;  // annulus only
  Complex normal_{1.0, 0.0};   // halfplane only
  double offset_ = 0.0;        // halfplane only
  std::vector<Complex> removed_;
};

}  // namespace spectral
