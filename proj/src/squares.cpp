#include "minorforge/squares.hpp"

#include <string>
#include <vector>

#include "minorforge/errors.hpp"

namespace minorforge {

MultiPoly rayleigh_delta(const MultiPoly& f, std::size_t i, std::size_t j) {
  if (i == j) throw InputError("rayleigh_delta needs distinct indices");
  if (i >= f.nvars() || j >= f.nvars()) throw InputError("rayleigh_delta index out of range");
  MultiPoly fi = partial_derivative(f, i);
  MultiPoly fj = partial_derivative(f, j);
  MultiPoly fij = partial_derivative(fi, j);
  MultiPoly delta = fi * fj - f * fij;
  if (is_multiaffine(f)) {
    bool ok = delta.degree(i) == 0 && delta.degree(j) == 0;
    for (std::size_t k = 0; ok && k < f.nvars(); ++k) ok = delta.degree(k) <= 2;
    if (!ok) throw InternalInconsistency("Rayleigh difference of a multiaffine polynomial has wrong degrees");
  }
  return delta;
}

QuadraticCoefficients quadratic_coefficients(const MultiPoly& g, std::size_t var) {
  if (g.degree(var) > 2) {
    throw InputError("degree " + std::to_string(g.degree(var)) + " in variable " + std::to_string(var + 1) +
                     " exceeds 2");
  }
  auto cs = coefficients_in(g, var);
  MultiPoly zero(g.ring(), g.nvars());
  cs.resize(3, zero);
  return {cs[2], cs[1], cs[0]};
}

QuadraticCoefficients pair_quadratic_coefficients(const MultiPoly& g, std::size_t k) {
  if (g.nvars() % 2 != 0) throw InputError("paired form must have an even number of variables");
  const std::size_t n = g.nvars() / 2;
  if (k >= n) throw InputError("pair index out of range");
  std::vector<Term> parts[3];
  for (const auto& t : g.terms()) {
    const unsigned ex = t.mono[k];
    const unsigned ey = t.mono[n + k];
    if (ex + ey != 2) {
      throw InputError("form is not a binary quadratic in pair " + std::to_string(k + 1));
    }
    Monomial m = t.mono;
    m.set(k, 0);
    m.set(n + k, 0);
    parts[ex].push_back({m, t.coeff});
  }
  return {MultiPoly::from_terms(g.ring(), g.nvars(), std::move(parts[2])),
          MultiPoly::from_terms(g.ring(), g.nvars(), std::move(parts[1])),
          MultiPoly::from_terms(g.ring(), g.nvars(), std::move(parts[0]))};
}

namespace {

MultiPoly discr(const QuadraticCoefficients& q) {
  return q.b * q.b - (q.a * q.c).scaled(q.a.ring().from_int(4));
}

SquareWitness non_square(std::optional<std::size_t> var) { return {false, std::nullopt, var}; }

SquareWitness accept(const MultiPoly& g, MultiPoly h, std::size_t var) {
  if (!(h * h == g)) return non_square(var);
  if (!h.is_zero() && !is_canonical_root(h.leading_term().coeff)) h = -h;
  return {true, std::move(h), std::nullopt};
}

}  // namespace

MultiPoly discriminant_pair(const MultiPoly& g, std::size_t k) { return discr(pair_quadratic_coefficients(g, k)); }

MultiPoly discriminant(const MultiPoly& g, std::size_t var) { return discr(quadratic_coefficients(g, var)); }

SquareWitness poly_sqrt(const MultiPoly& g) {
  const auto& ring = g.ring();
  if (g.is_zero()) return {true, g, std::nullopt};
  if (g.is_constant()) {
    auto r = ring_sqrt(g.constant_term());
    if (!r) return non_square(std::nullopt);
    return {true, MultiPoly::constant(*r, g.nvars()), std::nullopt};
  }
  std::size_t k = 0;
  while (g.degree(k) == 0) ++k;
  const unsigned e = g.degree(k);
  auto cs = coefficients_in(g, k);
  const MultiPoly xk = MultiPoly::variable(ring, g.nvars(), k);

  if (ring.characteristic() == 2) {
    MultiPoly h(ring, g.nvars());
    for (unsigned s = 0; s <= e; ++s) {
      if (s % 2 == 1) {
        if (!cs[s].is_zero()) return non_square(k);
        continue;
      }
      auto w = poly_sqrt(cs[s]);
      if (!w.is_square) return w;
      h += *w.root * xk.pow(s / 2);
    }
    return accept(g, std::move(h), k);
  }

  if (e % 2 == 1) return non_square(k);

  if (e == 2) {
    auto w2 = poly_sqrt(cs[2]);
    if (!w2.is_square) return w2;
    auto w0 = poly_sqrt(cs[0]);
    if (!w0.is_square) return w0;
    const MultiPoly two_h2h0 = (*w2.root * *w0.root).scaled(ring.from_int(2));
    if (cs[1] == two_h2h0) return accept(g, *w2.root * xk + *w0.root, k);
    if (cs[1] == -two_h2h0) return accept(g, *w2.root * xk - *w0.root, k);
    return non_square(k);
  }

  // Higher even degree: peel coefficients of the root from the top down.
  const unsigned half = e / 2;
  auto top = poly_sqrt(cs[e]);
  if (!top.is_square) return top;
  std::vector<MultiPoly> h(half + 1, MultiPoly(ring, g.nvars()));
  h[half] = *top.root;
  const MultiPoly denom = h[half].scaled(ring.from_int(2));
  for (unsigned s = half; s-- > 0;) {
    MultiPoly rest = cs[half + s];
    for (unsigned i = s + 1; i < half; ++i) {
      const unsigned j = half + s - i;
      if (j > s && j <= half && j != half) rest -= h[i] * h[j];
    }
    auto q = divide_exact(rest, denom);
    if (!q) return non_square(k);
    h[s] = std::move(*q);
  }
  MultiPoly root(ring, g.nvars());
  for (unsigned s = 0; s <= half; ++s) root += h[s] * xk.pow(s);
  return accept(g, std::move(root), k);
}

}  // namespace minorforge
