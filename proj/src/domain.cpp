#include "spectral/domain.hpp"

#include <cmath>

namespace spectral {

DomainSpec DomainSpec::disc(Complex center, double radius) {
  if (radius <= 0.0) throw Error("DomainSpec::disc: radius must be positive");
  DomainSpec d;
  d.shape_ = DomainShape::Disc;
  d.center_ = center;
  d.radius_ = radius;
  return d;
}

DomainSpec DomainSpec::halfplane(Complex normal, double offset) {
  const double len = std::abs(normal);
  if (len == 0.0) throw Error("DomainSpec::halfplane: zero normal");
  DomainSpec d;
  d.shape_ = DomainShape::Halfplane;
  d.normal_ = normal / len;
  d.offset_ = offset / len;
  return d;
}

DomainSpec DomainSpec::annulus(Complex center, double r_in, double r_out) {
  if (r_in < 0.0 || r_out <= r_in)
    throw Error("DomainSpec::annulus: need 0 <= r_in < r_out");
  DomainSpec d;
  d.shape_ = DomainShape::Annulus;
  d.center_ = center;
  d.inner_radius_ = r_in;
  d.radius_ = r_out;
  return d;
}

DomainSpec DomainSpec::complement_of_finite(std::vector<Complex> removed) {
  DomainSpec d;
  d.shape_ = DomainShape::ComplementOfFinite;
  d.removed_ = std::move(removed);
  return d;
}

DomainSpec DomainSpec::whole_plane() { return DomainSpec{}; }

bool DomainSpec::contains(Complex z) const {
  return boundary_distance(z) > 0.0;
}

double DomainSpec::boundary_distance(Complex z) const {
  switch (shape_) {
    case DomainShape::Disc:
      return radius_ - std::abs(z - center_);
    case DomainShape::Halfplane:
      return offset_ - (std::conj(normal_) * z).real();
    case DomainShape::Annulus: {
      const double d = std::abs(z - center_);
      return std::min(d - inner_radius_, radius_ - d);
    }
    case DomainShape::ComplementOfFinite: {
      double best = std::numeric_limits<double>::infinity();
      for (Complex p : removed_) best = std::min(best, std::abs(z - p));
      return best;
    }
    case DomainShape::WholePlane:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

ComplementClass DomainSpec::complement_class() const {
  switch (shape_) {
    case DomainShape::Disc:
    case DomainShape::Halfplane:
    case DomainShape::Annulus:
      return ComplementClass::AtLeast2N;
    case DomainShape::ComplementOfFinite:
      return ComplementClass::Finite;
    case DomainShape::WholePlane:
      return ComplementClass::Empty;
  }
  return ComplementClass::Empty;
}

bool DomainSpec::complement_at_least(int count) const {
  switch (complement_class()) {
    case ComplementClass::AtLeast2N:
      return true;  // uncountable complement
    case ComplementClass::Finite:
      return static_cast<int>(removed_.size()) >= count;
    case ComplementClass::Empty:
      return count <= 0;
  }
  return false;
}

DomainSpec DomainSpec::translated(Complex lambda) const {
  DomainSpec d = *this;
  switch (shape_) {
    case DomainShape::Disc:
    case DomainShape::Annulus:
      d.center_ = center_ - lambda;
      break;
    case DomainShape::Halfplane:
      d.offset_ = offset_ - (std::conj(normal_) * lambda).real();
      break;
    case DomainShape::ComplementOfFinite:
      for (auto& p : d.removed_) p -= lambda;
      break;
    case DomainShape::WholePlane:
      break;
  }
  return d;
}

}  // namespace spectral
