#include "mathpar/tropical_matrix.hpp"

#include "mathpar/matrix_text.hpp"

namespace mathpar {

namespace {

void requireCompatible(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (!(a.signature() == b.signature()))
    fail(ErrorCode::SignatureMismatch, "matrices belong to different algebras");
}

void requireSquare(const TropicalMatrix& a) {
  if (!a.isSquare()) fail(ErrorCode::DimensionMismatch, "a square matrix is required");
}

void requireColumn(const TropicalMatrix& a, const TropicalMatrix& b) {
  requireCompatible(a, b);
  if (b.cols() != 1 || b.rows() != a.rows())
    fail(ErrorCode::DimensionMismatch, "the right-hand side must be a column with one entry per matrix row");
}

// a is strictly better than b in the ⊕-order.
bool better(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  return !(a == b) && tropAdd(s, a, b) == a;
}

}  // namespace

TropicalMatrix::TropicalMatrix(TropicalSignature sig, std::size_t rows, std::size_t cols)
    : sig_(std::move(sig)), rows_(rows), cols_(cols), data_(rows * cols, sig_.zero) {}

TropicalMatrix TropicalMatrix::zeros(const TropicalSignature& sig, std::size_t rows, std::size_t cols) {
  return TropicalMatrix(sig, rows, cols);
}

TropicalMatrix TropicalMatrix::identity(const TropicalSignature& sig, std::size_t n) {
  TropicalMatrix m(sig, n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = sig.unit;
  return m;
}

TropicalMatrix TropicalMatrix::fromRows(const TropicalSignature& sig,
                                        const std::vector<std::vector<TropicalScalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  TropicalMatrix m(sig, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = tropNormalize(sig, rows[r][c]);
  }
  return m;
}

TropicalMatrix TropicalMatrix::column(std::size_t c) const {
  TropicalMatrix out(sig_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
  return out;
}

std::string formatTropical(const TropicalScalar& v, int floatpos, bool latex) {
  Scalar s = Scalar::tropical(v);
  return latex ? formatScalarLatex(s, floatpos) : formatScalar(s, floatpos);
}

namespace {

std::vector<std::vector<std::string>> cells(const TropicalMatrix& m, int floatpos, bool latex) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(formatTropical(m.at(r, c), floatpos, latex));
  return out;
}

}  // namespace

std::string TropicalMatrix::toMathpar(int floatpos) const {
  if (cols_ == 0 || rows_ == 0) return "[]";
  return mathparMatrix(cells(*this, floatpos, false));
}

std::string TropicalMatrix::toLatex(int floatpos) const {
  if (cols_ == 0 || rows_ == 0) return "[]";
  return latexMatrix(cells(*this, floatpos, true), cols_);
}

TropicalMatrix matAdd(const TropicalMatrix& a, const TropicalMatrix& b) {
  requireCompatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  TropicalMatrix out(a.signature(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = tropAdd(a.signature(), a.at(r, c), b.at(r, c));
  return out;
}

TropicalMatrix matMul(const TropicalMatrix& a, const TropicalMatrix& b) {
  requireCompatible(a, b);
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix sizes are not conformable");
  const TropicalSignature& s = a.signature();
  TropicalMatrix out(s, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      TropicalScalar acc = s.zero;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(r, k) == s.zero || b.at(k, c) == s.zero) continue;
        acc = tropAdd(s, acc, tropMul(s, a.at(r, k), b.at(k, c)));
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

bool matLeq(const TropicalMatrix& a, const TropicalMatrix& b) {
  requireCompatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!tropLeq(a.signature(), a.at(r, c), b.at(r, c))) return false;
  return true;
}

TropicalMatrix kleeneStar(const TropicalMatrix& a, const CancelToken& cancel) {
  requireSquare(a);
  const std::size_t n = a.rows();
  const TropicalMatrix id = TropicalMatrix::identity(a.signature(), n);
  TropicalMatrix m = id;
  for (std::size_t it = 1; it <= n; ++it) {
    cancel.check();
    TropicalMatrix next = matAdd(id, matMul(a, m));
    if (next == m) return m;
    if (it == n) break;
    m = std::move(next);
  }
  if (n == 0) return m;
  fail(ErrorCode::StarDiverges, "the closure does not converge: the graph has an improving cycle");
}

TropicalMatrix residuate(const TropicalMatrix& a, const TropicalMatrix& b) {
  requireColumn(a, b);
  const TropicalSignature& s = a.signature();
  if (!s.isSemifield()) fail(ErrorCode::NonInvertibleSignature, s.name() + " has no multiplicative inverses");
  TropicalMatrix x(s, a.cols(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    TropicalScalar v = tropTop(s);
    for (std::size_t i = 0; i < a.rows(); ++i) v = tropMeet(s, v, tropResidual(s, a.at(i, j), b.at(i, 0)));
    x.at(j, 0) = v;
  }
  return x;
}

TropicalMatrix solveLAETropic(const TropicalMatrix& a, const TropicalMatrix& b) {
  TropicalMatrix x = residuate(a, b);
  if (!(matMul(a, x) == b))
    throw NoExactSolution("A x = b has no solution; the greatest subsolution is " + x.toMathpar(2), x);
  return x;
}

TropicalMatrix solveLAITropic(const TropicalMatrix& a, const TropicalMatrix& b) { return residuate(a, b); }

TropicalMatrix bellman(const TropicalMatrix& a, const TropicalMatrix& b, const CancelToken& cancel) {
  requireSquare(a);
  requireColumn(a, b);
  TropicalMatrix x = matMul(kleeneStar(a, cancel), b);
  if (!(matAdd(matMul(a, x), b) == x))
    fail(ErrorCode::NonConvergence, "the Bellman solution failed its fixpoint check");
  return x;
}

TropicalMatrix bellmanHomogeneous(const TropicalMatrix& a, const CancelToken& cancel) {
  requireSquare(a);
  const TropicalSignature& s = a.signature();
  TropicalMatrix star = kleeneStar(a, cancel);
  TropicalMatrix plus = matMul(a, star);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (plus.at(i, i) == s.unit) picked.push_back(i);
  TropicalMatrix out(s, a.rows(), picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) out.at(r, k) = star.at(r, picked[k]);
  for (std::size_t k = 0; k < picked.size(); ++k) {
    TropicalMatrix col = out.column(k);
    if (!(matMul(a, col) == col)) fail(ErrorCode::NonConvergence, "a Bellman column failed its fixpoint check");
  }
  return out;
}

TropicalMatrix searchLeastDistances(const TropicalMatrix& a, const CancelToken& cancel) {
  return kleeneStar(a, cancel);
}

PathResult findTheShortestPath(const TropicalMatrix& a, std::size_t i, std::size_t j, const CancelToken& cancel) {
  requireSquare(a);
  const std::size_t n = a.rows();
  if (i < 1 || i > n || j < 1 || j > n)
    fail(ErrorCode::DimensionMismatch, "node indices must lie between 1 and " + std::to_string(n));
  const TropicalSignature& s = a.signature();
  const TropicalMatrix star = kleeneStar(a, cancel);
  const std::size_t src = i - 1, dst = j - 1;
  if (src == dst) return {{i}, star.at(src, dst)};
  if (star.at(src, dst) == s.zero) fail(ErrorCode::Unreachable, "node " + std::to_string(j) + " is not reachable");

  // Floyd-Warshall over the semiring with a successor table.
  TropicalMatrix dist = matAdd(TropicalMatrix::identity(s, n), a);
  std::vector<std::size_t> next(n * n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !(a.at(u, v) == s.zero)) next[u * n + v] = v;
  for (std::size_t k = 0; k < n; ++k) {
    cancel.check();
    for (std::size_t u = 0; u < n; ++u) {
      if (u == k || dist.at(u, k) == s.zero) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == k || u == v || dist.at(k, v) == s.zero) continue;
        TropicalScalar via = tropMul(s, dist.at(u, k), dist.at(k, v));
        if (better(s, via, dist.at(u, v))) {
          dist.at(u, v) = via;
          next[u * n + v] = next[u * n + k];
        }
      }
    }
  }

  PathResult result{{i}, star.at(src, dst)};
  std::size_t cur = src;
  while (cur != dst) {
    cur = next[cur * n + dst];
    if (cur == n || result.nodes.size() > n) fail(ErrorCode::Unreachable, "path reconstruction failed");
    result.nodes.push_back(cur + 1);
  }
  return result;
}

std::string PathResult::toMathpar(int floatpos) const {
  std::string out = "[";
  for (std::size_t k = 0; k < nodes.size(); ++k) out += (k ? "," : "") + std::to_string(nodes[k]);
  return out + "], " + formatTropical(distance, floatpos, false);
}

std::string PathResult::toLatex(int floatpos) const {
  std::string out = "[";
  for (std::size_t k = 0; k < nodes.size(); ++k) out += (k ? ", " : "") + std::to_string(nodes[k]);
  return out + "],\\ " + formatTropical(distance, floatpos, true);
}

}  // namespace mathpar
