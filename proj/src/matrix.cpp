#include "minorforge/matrix.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "minorforge/errors.hpp"

namespace minorforge {

SymMatrix::SymMatrix(RingDescriptor ring, std::size_t n) : ring_(ring), n_(n), entries_(n * n, ring.zero()) {}

SymMatrix SymMatrix::from_rows(const RingDescriptor& ring, const Matrix& rows) {
  const std::size_t n = rows.size();
  SymMatrix out(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rows[i][j].ring() == ring)) throw RingMismatch("matrix entry over a different ring");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(rows[i][j] == rows[j][i])) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      out.set(i, j, rows[i][j]);
    }
  }
  return out;
}

SymMatrix SymMatrix::identity(const RingDescriptor& ring, std::size_t n) {
  SymMatrix out(ring, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, ring.one());
  return out;
}

void SymMatrix::set(std::size_t i, std::size_t j, const RingValue& v) {
  if (i >= n_ || j >= n_) throw InputError("matrix index out of range");
  if (!(v.ring() == ring_)) throw RingMismatch("matrix entry over a different ring");
  entries_[i * n_ + j] = v;
  entries_[j * n_ + i] = v;
}

Matrix SymMatrix::rows() const {
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  return out;
}

Matrix SymMatrix::principal_submatrix(std::uint64_t mask) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n_; ++i) {
    if (mask >> i & 1U) idx.push_back(i);
  }
  Matrix out(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out[r].reserve(idx.size());
    for (auto c : idx) out[r].push_back(at(idx[r], c));
  }
  return out;
}

MinorVector::MinorVector(RingDescriptor ring, std::size_t n) : ring_(ring), n_(n) {
  if (n > kMaxN) throw InputError("minor vectors support n <= 16");
  entries_.assign(std::size_t{1} << n, ring.zero());
}

const RingValue& MinorVector::at(std::uint64_t mask) const {
  if (mask >= entries_.size()) throw InputError("subset outside [n]");
  return entries_[mask];
}

void MinorVector::set(std::uint64_t mask, const RingValue& v) {
  if (mask >= entries_.size()) throw InputError("subset outside [n]");
  if (!(v.ring() == ring_)) throw RingMismatch("minor vector entry over a different ring");
  entries_[mask] = v;
}

namespace {

void check_square(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("matrix is not square");
  }
}

// In-place fraction-free elimination. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(const RingDescriptor& ring, Matrix& m, int& sign) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  RingValue prev = ring.one();
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        RingValue num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = exact_div(num, prev);
        if (!q) throw InternalInconsistency("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][c] = ring.zero();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

RingValue determinant_bareiss(const RingDescriptor& ring, Matrix m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  int sign = 1;
  if (bareiss(ring, m, sign) < n) return ring.zero();
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

RingValue determinant_cofactor(const RingDescriptor& ring, const Matrix& m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  RingValue acc = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor[i - 1].push_back(m[i][k]);
      }
    }
    RingValue term = m[0][j] * determinant_cofactor(ring, minor);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

std::size_t matrix_rank(const RingDescriptor& ring, Matrix m) {
  if (m.empty()) return 0;
  for (const auto& row : m) {
    if (row.size() != m[0].size()) throw InputError("ragged matrix");
  }
  int sign = 1;
  return bareiss(ring, m, sign);
}

namespace {

// det of the rows listed in `rows` against the columns in `cols`, expanding along
// the first listed row. Results are memoized by column mask.
class MinorCache {
 public:
  MinorCache(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

  const MultiPoly& det(std::uint64_t cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    const std::size_t depth = rows_.size() - static_cast<std::size_t>(std::popcount(cols));
    const auto& ring = m_[0][0].ring();
    const std::size_t nv = m_[0][0].nvars();
    MultiPoly acc(ring, nv);
    if (cols == 0) {
      acc = MultiPoly::constant(ring.one(), nv);
    } else {
      const std::size_t r = rows_[depth];
      int parity = 0;
      for (std::size_t c = 0; c < m_.size(); ++c) {
        if (!(cols >> c & 1U)) continue;
        if (!m_[r][c].is_zero()) {
          const MultiPoly& sub = det(cols & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            MultiPoly term = m_[r][c] * sub;
            if (parity == 0) {
              acc += term;
            } else {
              acc -= term;
            }
          }
        }
        parity ^= 1;
      }
    }
    return memo_.emplace(cols, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

void check_poly_square(const PolyMatrix& m) {
  if (m.empty()) throw InputError("empty polynomial matrix");
  if (m.size() > 20) throw InputError("polynomial matrix too large for cofactor expansion");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("polynomial matrix is not square");
    for (const auto& e : row) {
      if (!(e.ring() == m[0][0].ring()) || e.nvars() != m[0][0].nvars()) {
        throw RingMismatch("polynomial matrix entries disagree on ring or variables");
      }
    }
  }
}

}  // namespace

MultiPoly poly_determinant(const PolyMatrix& m) {
  check_poly_square(m);
  std::vector<std::size_t> rows(m.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  MinorCache cache(m, rows);
  return cache.det((std::uint64_t{1} << m.size()) - 1);
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
  check_poly_square(m);
  const std::size_t d = m.size();
  const auto& ring = m[0][0].ring();
  const std::size_t nv = m[0][0].nvars();
  if (d == 1) return {{MultiPoly::constant(ring.one(), nv)}};
  PolyMatrix adj(d, std::vector<MultiPoly>(d, MultiPoly(ring, nv)));
  const std::uint64_t all = (std::uint64_t{1} << d) - 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < d; ++r) {
      if (r != i) rows.push_back(r);
    }
    MinorCache cache(m, rows);
    for (std::size_t j = 0; j < d; ++j) {
      MultiPoly minor = cache.det(all & ~(std::uint64_t{1} << j));
      adj[j][i] = (i + j) % 2 == 0 ? std::move(minor) : -minor;
    }
  }
  return adj;
}

}  // namespace minorforge
