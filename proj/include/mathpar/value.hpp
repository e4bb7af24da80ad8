#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mathpar/expr.hpp"
#include "mathpar/inequality.hpp"
#include "mathpar/nae.hpp"
#include "mathpar/roots.hpp"
#include "mathpar/tropical_matrix.hpp"

namespace mathpar {

struct Text {
  std::string text;
};

struct Value;

struct ValueList {
  std::vector<Value> items;
};

/// Any result a statement can produce.
struct Value {
  using Rep = std::variant<Scalar, Polynomial, Expr, TropicalMatrix, IntervalSet, RootList, SolutionMatrix, Text,
                           ValueList, PathResult>;
  Rep rep;

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(rep);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(rep);
  }

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;
  /// Short name of the variant for messages ("scalar", "polynomial", ...).
  std::string kindName() const;
};

}  // namespace mathpar
