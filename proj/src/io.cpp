#include "umbra/io.hpp"

#include <string>

#include "umbra/error.hpp"

namespace umbra {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json series_to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
  return guarded("series", [&] {
    const auto& arr = j.at("coeffs");
    if (!arr.is_array()) throw DomainError("series coeffs must be an array");
    std::vector<Scalar> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(scalar_from_json(v));
    if (j.contains("order") && j.at("order").get<long>() != static_cast<long>(c.size()) - 1)
      throw DomainError("series order does not match the number of coefficients");
    return TruncatedSeries(std::move(c));
  });
}

json umbral_to_json(const UmbralExpression& e) {
  json terms = json::array();
  for (const auto& t : e.terms())
    terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}},
                     {"c", {t.c_exp.num(), t.c_exp.den()}},
                     {"x", t.x_exp}});
  return {{"terms", terms}};
}

UmbralExpression umbral_from_json(const json& j) {
  return guarded("umbral expression", [&] {
    std::vector<UmbralTerm> terms;
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("c");
      Rational r = c.is_array() ? Rational(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>())
                                : Rational(c.get<std::int64_t>());
      terms.push_back({scalar_from_json(t.at("coeff")), r, t.at("x").get<int>()});
    }
    return UmbralExpression(terms);
  });
}

json transform_spec_to_json(const TransformSpec& s) {
  json j = {{"family", to_string(s.family)},
            {"alpha", s.alpha},
            {"gamma", s.gamma},
            {"inverse", s.inverse}};
  if (s.beta) j["beta"] = *s.beta;
  if (s.delta) j["delta"] = *s.delta;
  return j;
}

TransformSpec transform_spec_from_json(const json& j) {
  return guarded("transform spec", [&] {
    TransformSpec s;
    s.family = transform_family_from_string(j.value("family", std::string("borel")));
    s.alpha = j.at("alpha").get<double>();
    s.gamma = j.value("gamma", 1.0);
    if (j.contains("beta") && !j.at("beta").is_null()) s.beta = j.at("beta").get<double>();
    if (j.contains("delta") && !j.at("delta").is_null()) s.delta = j.at("delta").get<double>();
    s.inverse = j.value("inverse", false);
    s.validate();
    return s;
  });
}

}  // namespace umbra
