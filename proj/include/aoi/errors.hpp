#pragma once

#include <stdexcept>
#include <string>

namespace aoi {

/// Two-state chain without a unique stationary distribution (p11 = 1, p01 = 0).
class NoUniqueStationary : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The slackness hypothesis eps * T > delta does not hold.
class BoundHypothesisViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Action not feasible in the given state (user 2 on an empty queue).
class InfeasibleAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// State or slot outside a policy table's domain.
class UnknownState : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Instance exceeds the exhaustive oracle's size guard.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bad experiment configuration; key() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace aoi
