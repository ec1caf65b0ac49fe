#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Le-rule or tableau shape violation; carries the offending box when known.
struct LeRuleError : Error {
  int row = -1;
  int col = -1;
  LeRuleError(const std::string& msg, int r = -1, int c = -1)
      : Error(msg), row(r), col(c) {}
};

struct RankError : Error {
  using Error::Error;
};

// Normalization-time search walked past its configured bound.
struct T0SearchError : Error {
  using Error::Error;
};

// tau <= 0 or another regularity condition failed on evaluation.
struct RegularityError : Error {
  using Error::Error;
};

// A mathematical invariant that should hold by construction did not.
struct PropertyError : Error {
  using Error::Error;
};

}  // namespace positroid
