#pragma once

#include <string>

#include "mathpar/ast.hpp"

namespace mathpar {

/// Mathpar text for a node. Re-parsing the output yields a structurally
/// equal tree.
std::string printMathpar(const AstNode& node);
std::string printMathpar(const Program& program);

/// LaTeX math-mode text for a node.
std::string printLatex(const AstNode& node);
std::string printLatex(const Program& program);

}  // namespace mathpar
