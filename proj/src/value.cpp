#include "mathpar/value.hpp"

namespace mathpar {

namespace {

std::string escapeLatexText(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\textbackslash{}";
    else if (c == '{' || c == '}' || c == '$' || c == '&' || c == '#' || c == '%' || c == '_') out += std::string("\\") + c;
    else out += c;
  }
  return out;
}

}  // namespace

std::string Value::toMathpar(int fp) const {
  return std::visit(
      [fp](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Scalar>) return formatScalar(v, fp);
        else if constexpr (std::is_same_v<T, Text>) return v.text;
        else if constexpr (std::is_same_v<T, ValueList>) {
          std::string out = "[";
          for (std::size_t k = 0; k < v.items.size(); ++k) out += (k ? "," : "") + v.items[k].toMathpar(fp);
          return out + "]";
        } else return v.toMathpar(fp);
      },
      rep);
}

std::string Value::toLatex(int fp) const {
  return std::visit(
      [fp](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Scalar>) return formatScalarLatex(v, fp);
        else if constexpr (std::is_same_v<T, Text>) return "\\text{" + escapeLatexText(v.text) + "}";
        else if constexpr (std::is_same_v<T, ValueList>) {
          std::string out = "\\left[";
          for (std::size_t k = 0; k < v.items.size(); ++k) out += (k ? ", " : "") + v.items[k].toLatex(fp);
          return out + "\\right]";
        } else return v.toLatex(fp);
      },
      rep);
}

std::string Value::kindName() const {
  static const char* names[] = {"scalar", "polynomial", "expression", "matrix", "interval set",
                                "root list", "solution matrix", "text", "list", "path"};
  return names[rep.index()];
}

}  // namespace mathpar
