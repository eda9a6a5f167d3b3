#pragma once

#include <stdexcept>
#include <string>

namespace framegraph {

// Each error class maps onto one CLI exit code (see tools/framegraph.cpp).

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: bad family parameters, duplicate vertex ids, malformed witnesses.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but the quantity is undefined for it
/// (OS-number of a single vertex, frame constants of a non-spanning set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact search was asked to run above its configured size cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, int order, int cap, std::string flag)
      : Error(what + " (order " + std::to_string(order) + " exceeds cap " +
              std::to_string(cap) + "; raise it with " + flag + ")"),
        order_(order),
        cap_(cap) {}

  int order() const { return order_; }
  int cap() const { return cap_; }

 private:
  int order_;
  int cap_;
};

/// A randomized construction could not produce a verified frame.
class RealizationError : public Error {
 public:
  using Error::Error;
};

/// A requested rank is below a certified lower bound.
class InfeasibleRankError : public RealizationError {
 public:
  InfeasibleRankError(int rank, int lower, std::string certificate)
      : RealizationError("rank " + std::to_string(rank) +
                         " is provably infeasible: certified lower bound " +
                         std::to_string(lower) + " (" + certificate + ")"),
        rank_(rank),
        lower_(lower),
        certificate_(std::move(certificate)) {}

  int rank() const { return rank_; }
  int lower() const { return lower_; }
  const std::string& certificate() const { return certificate_; }

 private:
  int rank_;
  int lower_;
  std::string certificate_;
};

/// Text input could not be parsed. `position` is a 0-based column for DSL
/// strings and a 1-based line number for files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A constructed certificate failed its own verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace framegraph
