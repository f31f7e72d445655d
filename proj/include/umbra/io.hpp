#ifndef UMBRA_IO_HPP
#define UMBRA_IO_HPP

#include <json.hpp>

#include "umbra/series.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

// {"order": N, "coeffs": [[re, im], ...]}
nlohmann::json series_to_json(const TruncatedSeries& s);
// Throws DomainError on a malformed document or when order does not match
// the coefficient count.
TruncatedSeries series_from_json(const nlohmann::json& j);

// {"terms": [{"coeff": [re, im], "c": [num, den], "x": k}, ...]}
nlohmann::json umbral_to_json(const UmbralExpression& e);
UmbralExpression umbral_from_json(const nlohmann::json& j);

// {"family": ..., "alpha": a, "gamma": g, "beta": b, "delta": d, "inverse": bool};
// beta and delta are omitted when unset.
nlohmann::json transform_spec_to_json(const TransformSpec& s);
TransformSpec transform_spec_from_json(const nlohmann::json& j);

}  // namespace umbra

#endif  // UMBRA_IO_HPP
