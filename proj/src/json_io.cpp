#include "sgasket/json_io.hpp"

#include <cstdint>
#include <limits>

namespace sgasket {

namespace {

Json integer(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

}  // namespace

Json to_json(const Rational& r) {
  Json out;
  out["num"] = integer(r.numerator());
  out["den"] = integer(r.denominator());
  return out;
}

Json to_json(const Barycentric& p) { return Json::array({to_json(p.b0), to_json(p.b1), to_json(p.b2)}); }

}  // namespace sgasket
