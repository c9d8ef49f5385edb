#include "filiform/params.hpp"

#include <nlohmann/json.hpp>

#include "filiform/errors.hpp"

namespace filiform {

ParamVector::ParamVector(int n_, std::vector<Scalar> alpha_, Scalar theta_)
    : n(n_), alpha(std::move(alpha_)), theta(std::move(theta_)) {
  if (n < 4)
    throw DimensionMismatch("parameter tuple needs n >= 4, got n = " +
                            std::to_string(n));
  if (alpha.size() != static_cast<std::size_t>(n - 2))
    throw DimensionMismatch("expected " + std::to_string(n - 2) +
                            " alpha entries, got " +
                            std::to_string(alpha.size()));
}

std::vector<Scalar> ParamVector::z() const {
  std::vector<Scalar> out = alpha;
  out.push_back(theta);
  return out;
}

std::string format_params(const ParamVector& p) {
  std::string out = "L(";
  for (const Scalar& a : p.alpha) {
    out += format_scalar(a);
    out += ",";
  }
  out += format_scalar(p.theta);
  out += ")";
  return out;
}

std::string params_to_json(const ParamVector& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["alpha"] = nlohmann::json::array();
  for (const Scalar& a : p.alpha) j["alpha"].push_back(format_scalar(a));
  j["theta"] = format_scalar(p.theta);
  return j.dump(2);
}

ParamVector params_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     static_cast<std::size_t>(e.byte));
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("alpha") ||
      !j.contains("theta"))
    throw ParseError("expected object with keys n, alpha, theta", 0);
  if (!j["n"].is_number_integer())
    throw ParseError("key n must be an integer", 0);
  int n = j["n"].get<int>();
  if (!j["alpha"].is_array())
    throw ParseError("key alpha must be an array of scalar strings", 0);
  std::vector<Scalar> alpha;
  for (const auto& entry : j["alpha"]) {
    if (!entry.is_string())
      throw ParseError("alpha entries must be scalar strings", 0);
    alpha.push_back(parse_scalar(entry.get<std::string>()));
  }
  if (!j["theta"].is_string())
    throw ParseError("key theta must be a scalar string", 0);
  Scalar theta = parse_scalar(j["theta"].get<std::string>());
  return ParamVector(n, std::move(alpha), std::move(theta));
}

ParamVector rand_params(Splitmix64& g, int n, long num_bound, long den_bound) {
  std::vector<Scalar> alpha;
  alpha.reserve(static_cast<std::size_t>(n - 2));
  for (int k = 3; k <= n; ++k) alpha.push_back(rand_scalar(g, num_bound, den_bound));
  Scalar theta = rand_scalar(g, num_bound, den_bound);
  return ParamVector(n, std::move(alpha), std::move(theta));
}

}  // namespace filiform
