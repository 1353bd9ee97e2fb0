#include "kegel/subdist.hpp"

#include <cassert>
#include <string>

namespace kegel {

SubDist::SubDist(Trusted, Weights weights) : weights_(std::move(weights)) {
  for (const auto& [n, w] : weights_) mass_ += w;
  assert(mass_ <= 1);
}

SubDist SubDist::from_weights(Weights weights) {
  for (auto it = weights.begin(); it != weights.end();) {
    it->second.canonicalize();
    if (it->second < 0) throw WeightError("negative weight at index " + std::to_string(it->first));
    if (it->second == 0) {
      it = weights.erase(it);
    } else {
      ++it;
    }
  }
  Rational total(0);
  for (const auto& [n, w] : weights) total += w;
  if (total > 1) throw WeightError("sub-distribution mass exceeds 1: " + to_string(total));
  return SubDist(Trusted{}, std::move(weights));
}

Rational SubDist::at(std::uint64_t n) const {
  auto it = weights_.find(n);
  return it == weights_.end() ? Rational(0) : it->second;
}

SubDist dirac(std::uint64_t n) { return SubDist(SubDist::Trusted{}, {{n, Rational(1)}}); }

void validate_weights(std::span<const Rational> weights) {
  Rational total(0);
  for (const auto& w : weights) {
    if (w < 0) throw WeightError("negative convex weight " + to_string(w));
    total += w;
  }
  if (total > 1) throw WeightError("convex weights sum to " + to_string(total) + " > 1");
}

SubDist convex_combine(std::span<const Rational> weights, std::span<const SubDist> dists) {
  validate_weights(weights);
  if (weights.size() != dists.size()) throw DimensionError("convex_combine: weights and dists differ in length");
  SubDist::Weights out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    for (const auto& [n, w] : dists[i].weights()) out[n] += weights[i] * w;
  }
  return SubDist(SubDist::Trusted{}, std::move(out));
}

SubDist scale(const Prob& lam, const SubDist& d) {
  if (lam.value() == 0) return SubDist();
  SubDist::Weights out;
  for (const auto& [n, w] : d.weights()) out.emplace(n, lam.value() * w);
  return SubDist(SubDist::Trusted{}, std::move(out));
}

SubDist shift(const SubDist& d) {
  SubDist::Weights out;
  for (const auto& [n, w] : d.weights()) out.emplace_hint(out.end(), n + 1, w);
  return SubDist(SubDist::Trusted{}, std::move(out));
}

SubDist truncate(const SubDist& d, std::uint64_t cap) {
  if (d.empty() || d.weights().rbegin()->first <= cap) return d;
  SubDist::Weights out(d.weights().begin(), d.weights().upper_bound(cap));
  return SubDist(SubDist::Trusted{}, std::move(out));
}

bool pointwise_leq(const SubDist& lhs, const SubDist& rhs) {
  for (const auto& [n, w] : lhs.weights()) {
    if (w > rhs.at(n)) return false;
  }
  return true;
}

Rational l1_distance(const SubDist& lhs, const SubDist& rhs) {
  Rational total(0);
  for (const auto& [n, w] : lhs.weights()) total += abs(w - rhs.at(n));
  for (const auto& [n, w] : rhs.weights()) {
    if (!lhs.weights().contains(n)) total += w;
  }
  return total;
}

nlohmann::json to_json(const SubDist& d) {
  nlohmann::json weights = nlohmann::json::object();
  for (const auto& [n, w] : d.weights()) weights[std::to_string(n)] = to_string(w);
  return {{"mass", to_string(d.mass())}, {"weights", weights}};
}

SubDist subdist_from_json(const nlohmann::json& j) {
  SubDist::Weights weights;
  for (const auto& [key, value] : j.at("weights").items()) {
    weights[std::stoull(key)] = parse_rational(value.get<std::string>());
  }
  SubDist d = SubDist::from_weights(std::move(weights));
  if (j.contains("mass") && parse_rational(j.at("mass").get<std::string>()) != d.mass())
    throw std::invalid_argument("sub-distribution JSON: mass field disagrees with weights");
  return d;
}

FiniteSubDist::FiniteSubDist(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) e.canonicalize();
  validate_weights(entries_);
}

FiniteSubDist FiniteSubDist::dirac(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("dirac index out of range");
  std::vector<Rational> e(n, Rational(0));
  e[i] = 1;
  return FiniteSubDist(std::move(e));
}

Rational FiniteSubDist::mass() const {
  Rational total(0);
  for (const auto& e : entries_) total += e;
  return total;
}

}  // namespace kegel
