#include "sgasket/geometry.hpp"

#include <cmath>

#include "sgasket/errors.hpp"
#include "sgasket/metric.hpp"

namespace sgasket {

Barycentric to_barycentric(const Code& c) {
  std::array<Rational, 3> weight;
  for (int t = 0; t < 3; ++t) {
    BitSequence bits;
    bits.start = 1;
    for (Symbol s : c.preperiod()) bits.preperiod.push_back(s.value() == t);
    for (Symbol s : c.period()) bits.period.push_back(s.value() == t);
    weight[t] = periodic_bit_sum(bits);
  }
  return Barycentric{weight[0], weight[1], weight[2]};
}

CartesianPoint to_cartesian(const Barycentric& p) {
  const double w[3] = {p.b0.to_double(), p.b1.to_double(), p.b2.to_double()};
  CartesianPoint out;
  for (int t = 0; t < 3; ++t) {
    out.x += w[t] * kVertices[t].x;
    out.y += w[t] * kVertices[t].y;
  }
  return out;
}

bool twin_coordinates_agree(const Code& c) {
  const Code other = twin(c);  // throws NotAJunction
  return to_barycentric(c) == to_barycentric(other);
}

double euclidean_distance(const CartesianPoint& p, const CartesianPoint& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

}  // namespace sgasket
