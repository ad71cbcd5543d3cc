#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posetkit/graded_poset.hpp"

namespace posetkit {

struct Span {
  std::size_t begin = 0, end = 0;  ///< byte offsets, end exclusive
};

struct PosetExpr {
  enum class Op {
    Boolean,
    Butterfly,
    Chain,
    Polygon,
    Cubical,
    Subspace,
    SigmaStar,
    Sigma,
    Dual,
    KSum,
    BoxSum,
    Segre,
    Load
  };

  Op op = Op::Boolean;
  std::vector<int> ints;
  std::vector<PosetExpr> args;
  std::string path;  ///< Load only
  Span span;

  /// Structural equality; spans are ignored.
  bool operator==(const PosetExpr& other) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

PosetExpr parse(std::string_view text);

/// Canonical text, e.g. "ksum(3, boolean(5))"; parse(print(e)) == e.
std::string print(const PosetExpr& expr);

/// Constructor errors are rethrown with the same kind, prefixed by the failing
/// subexpression and its span.
GradedPoset eval(const PosetExpr& expr);

}  // namespace posetkit
