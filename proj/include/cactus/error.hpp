#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cactus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator s_{p,q} with p, q outside 1 <= p < q <= n.
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

// A rewrite move whose letter pattern is not present at the requested position.
class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// An argument outside the domain of a partial map (e.g. gamma0 on h with eps = 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t token_index)
      : Error(what), token_index_(token_index) {}

  std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::size_t token_index_;
};

}  // namespace cactus
