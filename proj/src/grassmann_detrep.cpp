#include "minorforge/grassmann_detrep.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "minorforge/errors.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/squares.hpp"

namespace minorforge {

namespace {

std::vector<std::size_t> elements(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

void require_field(const RingDescriptor& ring, const char* what) {
  if (!ring.is_field()) throw UnsupportedRing(std::string(what) + " needs a field (rat or fp:p)");
}

}  // namespace

std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t d) {
  if (n > MinorVector::kMaxN) throw InputError("subset enumeration supports n <= 16");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == d) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) { return elements(a) < elements(b); });
  return out;
}

PluckerSquareVector::PluckerSquareVector(RingDescriptor ring, std::size_t d, std::size_t n)
    : ring_(ring), d_(d), n_(n) {
  if (d == 0 || d > n) throw InputError("need 1 <= d <= n");
  subsets_ = subsets_of_size(n, d);
  values_.assign(subsets_.size(), ring.zero());
}

std::size_t PluckerSquareVector::index_of(std::uint64_t subset) const {
  auto it = std::find(subsets_.begin(), subsets_.end(), subset);
  if (it == subsets_.end()) throw InputError("subset is not a size-d subset of [n]");
  return static_cast<std::size_t>(it - subsets_.begin());
}

const RingValue& PluckerSquareVector::at(std::uint64_t subset) const { return values_[index_of(subset)]; }

void PluckerSquareVector::set(std::uint64_t subset, const RingValue& v) {
  if (!(v.ring() == ring_)) throw RingMismatch("Pluecker entry over a different ring");
  values_[index_of(subset)] = v;
}

bool PluckerSquareVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const RingValue& v) { return v.is_zero(); });
}

PluckerSquareVector squared_plucker(const RingDescriptor& ring, const Matrix& v) {
  require_field(ring, "squared_plucker");
  const std::size_t d = v.size();
  if (d == 0) throw InputError("matrix has no rows");
  const std::size_t n = v[0].size();
  for (const auto& row : v) {
    if (row.size() != n) throw InputError("ragged matrix");
    for (const auto& e : row) {
      if (!(e.ring() == ring)) throw RingMismatch("matrix entry over a different ring");
    }
  }
  if (matrix_rank(ring, v) < d) throw InputError("matrix does not have full row rank");
  PluckerSquareVector q(ring, d, n);
  for (auto s : q.subsets()) {
    const auto cols = elements(s);
    Matrix sub(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (auto c : cols) sub[r].push_back(v[r][c]);
    }
    const RingValue m = determinant_bareiss(ring, std::move(sub));
    q.set(s, m * m);
  }
  return q;
}

MinorVector gr2_auxiliary_vector(const PluckerSquareVector& q) {
  const std::size_t n = q.n();
  const std::size_t d = q.d();
  if (n < 2) throw InputError("Gr^2 membership needs n >= 2");
  MinorVector a(q.ring(), n - 1);
  const std::uint64_t last = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 0; s <= a.full_mask(); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size == d) a.set(s, q.at(s));
    if (size + 1 == d) a.set(s, q.at(s | last));
  }
  return a;
}

Gr2Report gr2_membership(const PluckerSquareVector& q, kernels::Execution ex) {
  const auto& ring = q.ring();
  require_field(ring, "gr2_membership");
  if (q.is_zero()) throw InputError("the zero vector is not a projective point");
  auto points = evaluation_set(ring);
  Gr2Report out;
  const std::size_t n = q.n();
  const std::size_t d = q.d();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t mi = std::uint64_t{1} << i;
      const std::uint64_t mj = std::uint64_t{1} << j;
      for (auto s : subsets_of_size(n, d - 1)) {
        if (s & (mi | mj)) continue;
        RingValue v = q.at(s | mi) * q.at(s | mj);
        if (!ring_sqrt(v)) {
          out.report.pair_failures.push_back({i, j, std::move(v)});
          out.pair_subsets.push_back(s);
        }
      }
    }
  }
  OrbitEvaluator eval(gr2_auxiliary_vector(q), std::move(points));
  out.report.equations = eval.count();
  const std::size_t first = eval.first_nonzero(ex);
  if (first < eval.count()) {
    out.report.failed_equation = eval.id(first);
    out.report.failed_value = eval.value(first);
  }
  out.report.pass = out.report.pair_failures.empty() && !out.report.failed_equation;
  return out;
}

MultiPoly expand_detrep(const DetRep& rep, std::size_t n) {
  const auto& ring = rep.w.ring();
  const std::size_t m = rep.w.size();
  if (rep.v.size() != m) throw InputError("V must have as many rows as W");
  for (const auto& row : rep.v) {
    if (row.size() != n) throw InputError("V must have one column per variable");
  }
  if (m == 0) return MultiPoly::constant(rep.lambda, n);
  PolyMatrix pencil(m, std::vector<MultiPoly>(m, MultiPoly(ring, n)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < n; ++i) terms.push_back({Monomial::variable(i), rep.v[r][i] * rep.v[s][i]});
      terms.push_back({Monomial{}, rep.w.at(r, s)});
      pencil[r][s] = MultiPoly::from_terms(ring, n, std::move(terms));
    }
  }
  return poly_determinant(pencil).scaled(rep.lambda);
}

bool verify_detrep(const MultiPoly& f, const DetRep& rep) {
  if (f.is_zero()) throw InputError("the zero polynomial has no determinantal representation");
  if (!(rep.w.ring() == f.ring()) || !(rep.lambda.ring() == f.ring())) throw RingMismatch("representation over a different ring");
  const std::size_t n = f.nvars();
  if (!(expand_detrep(rep, n) == f)) return false;
  const std::size_t m = rep.w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix outer(m, std::vector<RingValue>(m, f.ring().zero()));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) outer[r][s] = rep.v[r][i] * rep.v[s][i];
    }
    if (matrix_rank(f.ring(), outer) != f.degree(i)) return false;
  }
  return true;
}

DetRep multiaffine_detrep(const MultiPoly& f) {
  const auto& ring = f.ring();
  require_field(ring, "multiaffine_detrep");
  if (f.is_zero()) throw InputError("the zero polynomial has no determinantal representation");
  if (!is_multiaffine(f)) throw InputError("polynomial is not multiaffine");
  const std::size_t n = f.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!poly_sqrt(rayleigh_delta(f, i, j)).is_square) {
        throw NoRepresentation("Delta_" + std::to_string(i + 1) + std::to_string(j + 1) + "(f) is not a square");
      }
    }
  }
  const std::size_t d = f.total_degree();
  if (d == 0) return {f.constant_term(), Matrix{}, SymMatrix(ring, 0)};

  // Lexicographically first support subset of size d.
  std::vector<std::size_t> pivot;
  RingValue lambda = ring.zero();
  for (const auto& t : f.terms()) {
    if (t.mono.total_degree() != d) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] != 0) s.push_back(i);
    }
    if (pivot.empty() || s < pivot) {
      pivot = std::move(s);
      lambda = t.coeff;
    }
  }
  std::vector<std::size_t> order = pivot;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(pivot.begin(), pivot.end(), i)) order.push_back(i);
  }
  std::vector<std::size_t> newpos(n);
  for (std::size_t t = 0; t < n; ++t) newpos[order[t]] = t;

  const MultiPoly g = remap_variables(f.scaled(lambda.inverse()), n, newpos);
  const PolyMatrix l = determinantal_pencil(total_homogenize(g, static_cast<unsigned>(d)), d);

  // Coefficient matrices of the parameters x_{d+1..n} (permuted frame) and y.
  auto coefficient_matrix = [&](std::size_t var) {
    Matrix m(d, std::vector<RingValue>(d, ring.zero()));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) m[r][s] = l[r][s].coefficient(Monomial::variable(var));
    }
    return m;
  };
  Matrix vp(d, std::vector<RingValue>(n, ring.zero()));
  for (std::size_t t = 0; t < d; ++t) vp[t][t] = ring.one();
  for (std::size_t t = d; t < n; ++t) {
    const Matrix m = coefficient_matrix(t);
    std::size_t piv = 0;
    while (piv < d && m[piv][piv].is_zero()) ++piv;
    if (piv == d) {
      for (const auto& row : m) {
        for (const auto& e : row) {
          if (!e.is_zero()) throw InternalInconsistency("nonzero rank-one coefficient matrix with zero diagonal");
        }
      }
      continue;
    }
    auto root = ring_sqrt(m[piv][piv]);
    if (!root) throw InternalInconsistency("rank-one pivot is not a square");
    const RingValue inv = root->inverse();
    for (std::size_t s = 0; s < d; ++s) vp[s][t] = s == piv ? *root : m[s][piv] * inv;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        if (!(vp[r][t] * vp[s][t] == m[r][s])) throw InternalInconsistency("coefficient matrix is not rank one");
      }
    }
  }
  const Matrix wm = coefficient_matrix(n);
  SymMatrix w(ring, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = r; s < d; ++s) w.set(r, s, wm[r][s]);
  }
  // Conjugating by a sign diagonal D maps (v_i, W) to (D v_i, D W D).
  const std::vector<int> sign = canonical_sign_pattern(w);
  Matrix v(d, std::vector<RingValue>(n, ring.zero()));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < n; ++i) v[r][i] = sign[r] > 0 ? vp[r][newpos[i]] : -vp[r][newpos[i]];
  }
  // v_i and -v_i give the same outer product; keep the one led by a canonical root.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    while (r < d && v[r][i].is_zero()) ++r;
    if (r < d && !is_canonical_root(v[r][i])) {
      for (std::size_t k = 0; k < d; ++k) v[k][i] = -v[k][i];
    }
  }
  DetRep rep{lambda, std::move(v), canonicalize_signs(w)};
  if (!verify_detrep(f, rep)) throw InternalInconsistency("constructed representation does not verify");
  return rep;
}

}  // namespace minorforge
