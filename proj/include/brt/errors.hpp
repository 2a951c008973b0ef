#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace brt {

// Bad caller-supplied data: out-of-range elements, malformed files,
// universe mismatches, violated preconditions on inputs.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured exhaustive-search limit was exceeded. Never silent truncation.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A construction invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Carried by algorithms whose guarantee rests on "no 1-homogeneous set of
// size L": when the input breaks that hypothesis, the witness set is the
// offending 1-homogeneous set, surfaced to the caller instead of a throw.
struct HypothesisViolation {
  std::vector<int> witness;  // ascending
  std::string note;
};

// Minimal value-or-violation result. Algorithms that can detect a broken
// hypothesis return this; everything else throws.
template <typename T>
class Fallible {
 public:
  Fallible(T value) : v_(std::move(value)) {}
  Fallible(HypothesisViolation violation) : v_(std::move(violation)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const HypothesisViolation& violation() const { return std::get<HypothesisViolation>(v_); }

 private:
  std::variant<T, HypothesisViolation> v_;
};

}  // namespace brt
