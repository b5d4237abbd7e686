#include "minorforge/minor_map.hpp"

#include <deque>
#include <numeric>

#include "minorforge/errors.hpp"
#include "minorforge/squares.hpp"

namespace minorforge {

MinorVector principal_minors(const SymMatrix& a) {
  const std::size_t n = a.size();
  const auto& ring = a.ring();
  MinorVector out(ring, n);
  for (std::uint64_t mask = 0; mask <= out.full_mask(); ++mask) {
    Matrix sub = a.principal_submatrix(mask);
    out.set(mask, sub.size() <= 3 ? determinant_cofactor(ring, sub) : determinant_bareiss(ring, std::move(sub)));
  }
  return out;
}

MultiPoly minor_polynomial(const MinorVector& a) {
  const std::size_t n = a.n();
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (std::uint64_t mask = 0; mask <= a.full_mask(); ++mask) {
    if (a.at(mask).is_zero()) continue;
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) m.set(i, 1);
    }
    terms.push_back({m, a.at(mask)});
  }
  return MultiPoly::from_terms(a.ring(), n, std::move(terms));
}

MinorVector coefficients_to_vector(const MultiPoly& f) {
  if (!is_multiaffine(f)) throw InputError("polynomial is not multiaffine");
  const std::size_t n = f.nvars();
  MinorVector out(f.ring(), n);
  for (const auto& t : f.terms()) {
    std::uint64_t mask = out.full_mask();
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] != 0) mask &= ~(std::uint64_t{1} << i);
    }
    out.set(mask, t.coeff);
  }
  return out;
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::a_empty_not_one:
      return "a_empty_not_one";
    case FailureKind::delta_not_square:
      return "delta_not_square";
    case FailureKind::hypdet_equation_nonzero:
      return "hypdet_equation_nonzero";
    case FailureKind::pair_not_square:
      return "pair_not_square";
    case FailureKind::pair_negative:
      return "pair_negative";
  }
  return "unknown";
}

MembershipCertificate decide_membership_delta(const MinorVector& a) {
  MembershipCertificate cert;
  if (!a.at(0).is_one()) {
    cert.failure = MembershipFailure{FailureKind::a_empty_not_one, {}, a.at(0), std::nullopt,
                                     "a_empty = " + a.at(0).to_string()};
    return cert;
  }
  const std::size_t n = a.n();
  const MultiPoly f = minor_polynomial(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly delta = rayleigh_delta(f, i, j);
      auto w = poly_sqrt(delta);
      if (!w.is_square) {
        std::optional<RingValue> value;
        if (delta.is_constant()) value = delta.constant_term();
        cert.failure = MembershipFailure{FailureKind::delta_not_square, {i, j}, value, delta,
                                         "Delta_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                             "(f_a) is not a square"};
        return cert;
      }
      cert.square_roots.emplace(std::make_pair(i, j), std::move(*w.root));
    }
  }
  cert.in_image = true;
  cert.witness = reconstruct(a);
  return cert;
}

std::vector<Block> factor_blocks(const MultiPoly& fbar, std::size_t n) {
  if (fbar.nvars() <= n) throw InputError("fbar needs at least one variable beyond x_1..x_n");
  Monomial top;
  for (std::size_t i = 0; i < n; ++i) top.set(i, 1);
  if (!fbar.coefficient(top).is_one()) throw InputError("fbar must have leading coefficient 1 on x_1...x_n");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      if (!rayleigh_delta(fbar, i, j).is_zero()) parent[find(j)] = find(i);
    }
  }
  std::vector<Block> blocks;
  std::vector<int> block_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.push_back({{}, fbar});
    }
    blocks[static_cast<std::size_t>(block_of[r])].indices.push_back(i);
  }
  MultiPoly product = MultiPoly::constant(fbar.ring().one(), fbar.nvars());
  for (auto& b : blocks) {
    Monomial lead;
    std::vector<bool> inside(n, false);
    for (auto i : b.indices) {
      inside[i] = true;
      lead.set(i, 1);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!inside[j]) b.factor = partial_derivative(b.factor, j);
    }
    for (const auto& t : b.factor.terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!inside[j] && t.mono[j] != 0) throw InternalInconsistency("block factor uses a variable outside its block");
      }
    }
    if (!b.factor.coefficient(lead).is_one()) {
      throw InternalInconsistency("block factor does not have leading coefficient 1");
    }
    product *= b.factor;
  }
  if (!(product == fbar)) throw InternalInconsistency("product of block factors differs from fbar");
  return blocks;
}

namespace {

void check_linear_form(const MultiPoly& l, std::size_t n) {
  for (const auto& t : l.terms()) {
    bool ok = t.mono.total_degree() == 1;
    for (std::size_t i = 0; ok && i < n; ++i) ok = t.mono[i] == 0;
    if (!ok) throw InternalInconsistency("pencil entry is not a linear form in the parameters");
  }
}

// Sum over parameters z of coeff(poly, z * base) * z.
MultiPoly parameter_part(const MultiPoly& poly, const Monomial& base, std::size_t n) {
  std::vector<Term> out;
  for (std::size_t z = n; z < poly.nvars(); ++z) {
    Monomial m = base;
    m.set(z, 1);
    RingValue c = poly.coefficient(m);
    if (!c.is_zero()) out.push_back({Monomial::variable(z), std::move(c)});
  }
  return MultiPoly::from_terms(poly.ring(), poly.nvars(), std::move(out));
}

void fill_block(PolyMatrix& l, const Block& block, std::size_t n, const ReconstructOptions& options) {
  const auto& ring = block.factor.ring();
  const std::size_t nv = block.factor.nvars();
  const auto& idx = block.indices;
  const MultiPoly& p = block.factor;
  const std::size_t d = idx.size();
  if (d == 1) {
    l[idx[0]][idx[0]] = p - MultiPoly::variable(ring, nv, idx[0]);
    check_linear_form(l[idx[0]][idx[0]], n);
    return;
  }
  PolyMatrix g(d, std::vector<MultiPoly>(d, MultiPoly(ring, nv)));
  for (std::size_t r = 0; r < d; ++r) g[r][r] = partial_derivative(p, idx[r]);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = r + 1; s < d; ++s) {
      auto w = poly_sqrt(rayleigh_delta(p, idx[r], idx[s]));
      if (!w.is_square) throw InternalInconsistency("Rayleigh difference of a block factor is not a square");
      g[r][s] = *w.root;
      g[s][r] = std::move(*w.root);
    }
  }
  for (std::size_t r = 1; r < d; ++r) {
    for (std::size_t s = r + 1; s < d; ++s) {
      const MultiPoly cross = g[0][s] * g[r][0];
      if (divide_exact(g[0][0] * g[r][s] - cross, p)) continue;
      if (!divide_exact(g[0][0] * -g[r][s] - cross, p)) {
        throw InternalInconsistency("no sign of g_" + std::to_string(idx[r] + 1) + std::to_string(idx[s] + 1) +
                                    " is consistent with the pivot row");
      }
      g[r][s] = -g[r][s];
      g[s][r] = g[r][s];
    }
  }

  if (d <= options.adjugate_max_block) {
    PolyMatrix adj = poly_adjugate(g);
    MultiPoly det(ring, nv);
    for (std::size_t j = 0; j < d; ++j) det += g[0][j] * adj[j][0];
    if (!(det == p.pow(static_cast<unsigned>(d - 1)))) throw InternalInconsistency("det(G) differs from p^(d-1)");
    const MultiPoly scale = p.pow(static_cast<unsigned>(d - 2));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = r; s < d; ++s) {
        auto m = divide_exact(adj[r][s], scale);
        if (!m) throw InternalInconsistency("adjugate entry is not divisible by p^(d-2)");
        if (r == s) *m -= MultiPoly::variable(ring, nv, idx[r]);
        check_linear_form(*m, n);
        l[idx[r]][idx[s]] = *m;
        l[idx[s]][idx[r]] = std::move(*m);
      }
    }
    return;
  }

  // G M = p Id with M = diag(x) + L: compare the parts linear in the parameters.
  for (std::size_t r = 0; r < d; ++r) {
    Monomial rest;
    for (std::size_t k = 0; k < d; ++k) {
      if (k != r) rest.set(idx[k], 1);
    }
    l[idx[r]][idx[r]] = parameter_part(p, rest, n);
    for (std::size_t s = r + 1; s < d; ++s) {
      Monomial off;
      for (std::size_t k = 0; k < d; ++k) {
        if (k != r && k != s) off.set(idx[k], 1);
      }
      l[idx[r]][idx[s]] = -parameter_part(g[r][s], off, n);
      l[idx[s]][idx[r]] = l[idx[r]][idx[s]];
    }
  }
}

}  // namespace

PolyMatrix determinantal_pencil(const MultiPoly& fbar, std::size_t n, const ReconstructOptions& options) {
  PolyMatrix l(n, std::vector<MultiPoly>(n, MultiPoly(fbar.ring(), fbar.nvars())));
  for (const auto& block : factor_blocks(fbar, n)) fill_block(l, block, n, options);
  return l;
}

SymMatrix reconstruct(const MinorVector& a, const ReconstructOptions& options) {
  const auto& ring = a.ring();
  const std::size_t n = a.n();
  if (!a.at(0).is_one()) throw NotNormalized("reconstruct needs a_empty = 1, got " + a.at(0).to_string());
  const MultiPoly f = minor_polynomial(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!poly_sqrt(rayleigh_delta(f, i, j)).is_square) {
        throw NoRepresentation("Delta_" + std::to_string(i + 1) + std::to_string(j + 1) + "(f_a) is not a square");
      }
    }
  }
  SymMatrix out(ring, n);
  if (n == 0) return out;
  const PolyMatrix l = determinantal_pencil(total_homogenize(f, static_cast<unsigned>(n)), n, options);
  const Monomial y = Monomial::variable(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, l[i][j].coefficient(y));
  }
  if (!(principal_minors(out) == a)) throw InternalInconsistency("reconstructed matrix has different principal minors");
  return canonicalize_signs(out);
}

std::vector<int> canonical_sign_pattern(const SymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> sign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || sign[v] != 0 || a.at(u, v).is_zero()) continue;
        const RingValue val = sign[u] > 0 ? a.at(u, v) : -a.at(u, v);
        sign[v] = is_canonical_root(val) ? 1 : -1;
        queue.push_back(v);
      }
    }
  }
  return sign;
}

SymMatrix canonicalize_signs(const SymMatrix& a) {
  const std::size_t n = a.size();
  const std::vector<int> sign = canonical_sign_pattern(a);
  SymMatrix out(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, sign[i] * sign[j] > 0 ? a.at(i, j) : -a.at(i, j));
  }
  return out;
}

bool equal_up_to_sign_conjugation(const SymMatrix& a, const SymMatrix& b) {
  if (!(a.ring() == b.ring()) || a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (n - 1)); ++pattern) {
    auto s = [&](std::size_t i) { return i == 0 ? 1 : ((pattern >> (i - 1) & 1U) ? -1 : 1); };
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = i; ok && j < n; ++j) {
        ok = (s(i) * s(j) > 0 ? a.at(i, j) : -a.at(i, j)) == b.at(i, j);
      }
    }
    if (ok) return true;
  }
  return false;
}

RescaleResult sl2_rescale_check(const MinorVector& a, const GroupElement& gamma) {
  const auto& ring = a.ring();
  if (ring.kind() == RingKind::prime_field) throw UnsupportedRing("sl2_rescale_check needs int or rat");
  const MinorVector b = act_on_minor_vector(gamma, a);
  const RingValue lambda = b.at(0);
  if (lambda.is_zero()) throw DegenerateOrbitPoint("coefficient of x_1...x_n vanishes after the action");
  const auto q = RingDescriptor::rationals();
  const RingValue inv = lambda.to_rational().inverse();
  MinorVector rescaled(q, a.n());
  for (std::uint64_t mask = 0; mask <= b.full_mask(); ++mask) rescaled.set(mask, b.at(mask).to_rational() * inv);
  SymMatrix witness = reconstruct(rescaled);
  bool integral = true;
  if (ring.kind() == RingKind::integers) {
    const RingValue lq = lambda.to_rational();
    for (std::size_t i = 0; i < witness.size(); ++i) {
      for (std::size_t j = i; j < witness.size(); ++j) integral = integral && (lq * witness.at(i, j)).is_integral();
    }
  }
  return {lambda, std::move(rescaled), std::move(witness), integral};
}

}  // namespace minorforge
