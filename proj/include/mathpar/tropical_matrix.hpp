#pragma once

#include <string>
#include <vector>

#include "mathpar/algebra.hpp"
#include "mathpar/cancel.hpp"

namespace mathpar {

/// Dense row-major matrix over a tropical semiring.
class TropicalMatrix {
 public:
  TropicalMatrix(TropicalSignature sig, std::size_t rows, std::size_t cols);

  /// rows x cols matrix filled with the semiring zero.
  static TropicalMatrix zeros(const TropicalSignature& sig, std::size_t rows, std::size_t cols);
  static TropicalMatrix identity(const TropicalSignature& sig, std::size_t n);
  /// Validates every entry against the carrier. Throws DimensionMismatch for
  /// ragged rows.
  static TropicalMatrix fromRows(const TropicalSignature& sig, const std::vector<std::vector<TropicalScalar>>& rows);

  const TropicalSignature& signature() const noexcept { return sig_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool isSquare() const noexcept { return rows_ == cols_; }

  const TropicalScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  TropicalScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  TropicalMatrix column(std::size_t c) const;

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;

  friend bool operator==(const TropicalMatrix& a, const TropicalMatrix& b) {
    return a.sig_ == b.sig_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  TropicalSignature sig_;
  std::size_t rows_, cols_;
  std::vector<TropicalScalar> data_;
};

/// Raised by solveLAETropic when A x = b has no solution; carries the
/// greatest subsolution.
class NoExactSolution : public MathparError {
 public:
  NoExactSolution(const std::string& message, TropicalMatrix subsolution)
      : MathparError(ErrorCode::NoSolution, message), subsolution_(std::move(subsolution)) {}
  const TropicalMatrix& subsolution() const noexcept { return subsolution_; }

 private:
  TropicalMatrix subsolution_;
};

TropicalMatrix matAdd(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix matMul(const TropicalMatrix& a, const TropicalMatrix& b);
/// Componentwise a ⪯ b in the ⊕-order.
bool matLeq(const TropicalMatrix& a, const TropicalMatrix& b);

/// A* = I ⊕ A ⊕ A² ⊕ ...; StarDiverges when n iterations do not reach a
/// fixpoint.
TropicalMatrix kleeneStar(const TropicalMatrix& a, const CancelToken& cancel = {});

/// Greatest x with A ⊗ x ⪯ b (the principal solution).
TropicalMatrix residuate(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix solveLAETropic(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix solveLAITropic(const TropicalMatrix& a, const TropicalMatrix& b);
/// Least solution of A ⊗ x ⊕ b = x.
TropicalMatrix bellman(const TropicalMatrix& a, const TropicalMatrix& b, const CancelToken& cancel = {});
/// Columns of A* that solve A ⊗ x = x (possibly none).
TropicalMatrix bellmanHomogeneous(const TropicalMatrix& a, const CancelToken& cancel = {});
TropicalMatrix searchLeastDistances(const TropicalMatrix& a, const CancelToken& cancel = {});

struct PathResult {
  std::vector<std::size_t> nodes;  // 1-based
  TropicalScalar distance;

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;
};

/// An optimal path from node i to node j (1-based) and its weight.
PathResult findTheShortestPath(const TropicalMatrix& a, std::size_t i, std::size_t j, const CancelToken& cancel = {});

std::string formatTropical(const TropicalScalar& v, int floatpos, bool latex);

}  // namespace mathpar
