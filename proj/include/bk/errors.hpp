#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

// Base of every error raised by the library. Precondition violations that are
// programming mistakes use the standard std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. `field` names the offending element.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// lambda_n coincides with lambda_j for some j < n and the triangular system
// for the monic eigenpolynomial has no unique solution.
class DegenerateSpectrum : public Error {
 public:
  DegenerateSpectrum(std::size_t n, std::vector<std::size_t> free_indices,
                     std::vector<std::size_t> inconsistent_indices);

  std::size_t degree() const { return n_; }
  // Every j < n with lambda_j == lambda_n, ascending.
  std::vector<std::size_t> conflicting_indices() const;
  // Equations 0 * b_j = 0.
  const std::vector<std::size_t>& free_indices() const { return free_; }
  // Equations 0 * b_j = r with r != 0.
  const std::vector<std::size_t>& inconsistent_indices() const {
    return inconsistent_;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> inconsistent_;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NonRealAtoms : public Error {
 public:
  using Error::Error;
};

class ProbeTooCloseToRoot : public Error {
 public:
  using Error::Error;
};

class LeadingDegreeTooLow : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(std::size_t order);
  // Smallest k with Hankel determinant det(m_{i+j})_{0<=i,j<=k} <= 0.
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
};

class InsufficientMoments : public Error {
 public:
  InsufficientMoments(std::size_t required, std::size_t available);
  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

}  // namespace bk
