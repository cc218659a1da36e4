#pragma once

#include <json.hpp>

#include "sgasket/geometry.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

using Json = nlohmann::ordered_json;

/// {"num": n, "den": d} in lowest terms. Components that do not fit in a
/// 64-bit integer are written as decimal strings.
Json to_json(const Rational& r);

/// [b0, b1, b2] as rational objects.
Json to_json(const Barycentric& p);

}  // namespace sgasket
