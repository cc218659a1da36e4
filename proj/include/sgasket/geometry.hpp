#pragma once

#include <array>

#include "sgasket/code.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

/// Weights of the outer vertices P0, P1, P2; they sum to one.
struct Barycentric {
  Rational b0;
  Rational b1;
  Rational b2;

  const Rational& operator[](int t) const { return t == 0 ? b0 : (t == 1 ? b1 : b2); }

  friend bool operator==(const Barycentric&, const Barycentric&) = default;
};

/// Plane point in units of the outer side length.
struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Equilateral layout of the outer triangle. The maps f_t(x) = (x + P_t) / 2
/// fix these vertices.
inline constexpr double kSqrt3Over2 = 0.86602540378443864676;
inline constexpr std::array<CartesianPoint, 3> kVertices{
    CartesianPoint{0.0, 0.0}, CartesianPoint{1.0, 0.0}, CartesianPoint{0.5, kSqrt3Over2}};

/// b_t = sum of 2^(-j) over positions j with a_j = t, evaluated exactly.
Barycentric to_barycentric(const Code& c);

CartesianPoint to_cartesian(const Barycentric& p);

/// Both representations of a junction land on the same point.
/// Throws NotAJunction.
bool twin_coordinates_agree(const Code& c);

/// Straight-line distance in the plane.
double euclidean_distance(const CartesianPoint& p, const CartesianPoint& q);

}  // namespace sgasket
