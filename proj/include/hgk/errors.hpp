#pragma once

#include <stdexcept>
#include <string>

namespace hgk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed cycle notation, JSON documents, rationals
class ParseError : public Error {
 public:
  using Error::Error;
};

// violated preconditions: degree mismatch, not a subgroup, bad presentation
class ValidationError : public Error {
 public:
  using Error::Error;
};

// configured order/degree bound exceeded
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgk
