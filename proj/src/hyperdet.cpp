#include "minorforge/hyperdet.hpp"

#include <string>

#include "minorforge/errors.hpp"
#include "minorforge/squares.hpp"

namespace minorforge {

RingValue hypdet_222(const MinorVector& a) {
  if (a.n() != 3) throw InputError("hypdet_222 needs n = 3");
  const RingValue& e = a.at(0);
  const RingValue& a1 = a.at(1);
  const RingValue& a2 = a.at(2);
  const RingValue& a3 = a.at(4);
  const RingValue& a12 = a.at(3);
  const RingValue& a13 = a.at(5);
  const RingValue& a23 = a.at(6);
  const RingValue& a123 = a.at(7);
  const auto& ring = a.ring();
  const RingValue two = ring.from_int(2);
  const RingValue four = ring.from_int(4);
  RingValue h = e * e * a123 * a123 + a1 * a1 * a23 * a23 + a2 * a2 * a13 * a13 + a3 * a3 * a12 * a12;
  h -= two * (e * a1 * a23 * a123 + e * a2 * a13 * a123 + e * a3 * a12 * a123 + a1 * a2 * a13 * a23 +
              a1 * a3 * a12 * a23 + a2 * a3 * a12 * a13);
  h += four * (e * a23 * a13 * a12 + a123 * a1 * a2 * a3);
  return h;
}

std::vector<P1Point> evaluation_set(const RingDescriptor& ring) {
  if (ring.characteristic() == 3) {
    throw UnsupportedRing(
        "the hyperdeterminant criterion is not established over F3 (open question); use --method delta");
  }
  std::vector<P1Point> out;
  if (ring.characteristic() == 2) {
    out.push_back(P1Point::affine(ring.zero()));
    out.push_back(P1Point::affine(ring.one()));
    out.push_back(P1Point::infinity(ring));
    return out;
  }
  for (int r = 0; r < 5; ++r) out.push_back(P1Point::affine(ring.from_int(r)));
  return out;
}

namespace {

std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::size_t orbit_equation_count(std::size_t n, const RingDescriptor& ring) {
  if (n < 3) return 0;
  return choose3(n) * ipow(evaluation_set(ring).size(), n - 3);
}

OrbitEvaluator::OrbitEvaluator(const MinorVector& a, std::vector<P1Point> points)
    : ring_(a.ring()), n_(a.n()), points_(std::move(points)) {
  if (n_ < 3) return;
  per_triple_ = ipow(points_.size(), n_ - 3);
  const MultiPoly f = minor_polynomial(a);
  std::vector<unsigned> degrees(n_, 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      degrees.assign(n_, 2);
      degrees[i] = 0;
      degrees[j] = 0;
      const MultiPoly hom = multi_homogenize(rayleigh_delta(f, i, j), degrees);
      for (std::size_t k = j + 1; k < n_; ++k) {
        TripleData t{{i, j, k}, {}, {MultiPoly(ring_, 2 * n_), MultiPoly(ring_, 2 * n_), MultiPoly(ring_, 2 * n_)}};
        for (std::size_t l = 0; l < n_; ++l) {
          if (l != i && l != j && l != k) t.rest.push_back(l);
        }
        std::array<std::vector<Term>, 3> buckets;
        for (const auto& term : hom.terms()) {
          Monomial m = term.mono;
          const unsigned ex = m[k];
          m.set(k, 0);
          m.set(n_ + k, 0);
          buckets[ex].push_back({m, term.coeff});
        }
        for (unsigned e = 0; e < 3; ++e) t.parts[e] = MultiPoly::from_terms(ring_, 2 * n_, std::move(buckets[e]));
        triples_.push_back(std::move(t));
      }
    }
  }
  count_ = triples_.size() * per_triple_;
}

OrbitEquationId OrbitEvaluator::id(std::size_t index) const {
  if (index >= count_) throw InputError("orbit equation index out of range");
  const auto& t = triples_[index / per_triple_];
  std::size_t g = index % per_triple_;
  std::vector<P1Point> point(t.rest.size(), points_.front());
  for (std::size_t r = t.rest.size(); r-- > 0;) {
    point[r] = points_[g % points_.size()];
    g /= points_.size();
  }
  return {t.triple, std::move(point)};
}

RingValue OrbitEvaluator::value(std::size_t index) const {
  if (index >= count_) throw InputError("orbit equation index out of range");
  const auto& t = triples_[index / per_triple_];
  std::size_t g = index % per_triple_;
  std::vector<RingValue> at(2 * n_, ring_.one());
  for (std::size_t r = t.rest.size(); r-- > 0;) {
    const auto& p = points_[g % points_.size()];
    g /= points_.size();
    at[t.rest[r]] = p.x;
    at[n_ + t.rest[r]] = p.y;
  }
  const RingValue qa = evaluate(t.parts[2], at);
  const RingValue qb = evaluate(t.parts[1], at);
  const RingValue qc = evaluate(t.parts[0], at);
  if (ring_.characteristic() == 2) return qb;
  return qb * qb - ring_.from_int(4) * qa * qc;
}

std::size_t OrbitEvaluator::first_nonzero(kernels::Execution ex) const {
  return kernels::first_match(count_, [this](std::size_t i) { return !value(i).is_zero(); }, ex);
}

std::vector<OrbitEquationId> orbit_equation_ids(std::size_t n, const RingDescriptor& ring) {
  const auto points = evaluation_set(ring);
  std::vector<OrbitEquationId> out;
  if (n < 3) return out;
  const std::size_t per = ipow(points.size(), n - 3);
  out.reserve(choose3(n) * per);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t g = 0; g < per; ++g) {
          std::vector<P1Point> point(n - 3, points.front());
          std::size_t rem = g;
          for (std::size_t r = n - 3; r-- > 0;) {
            point[r] = points[rem % points.size()];
            rem /= points.size();
          }
          out.push_back({{i, j, k}, std::move(point)});
        }
      }
    }
  }
  return out;
}

RingValue evaluate_orbit_equation(const MinorVector& a, const OrbitEquationId& id) {
  const std::size_t n = a.n();
  const auto [i, j, k] = id.triple;
  if (n < 3 || !(i < j && j < k && k < n)) throw InputError("malformed orbit equation triple");
  if (id.point.size() != n - 3) throw InputError("orbit equation point has the wrong length");
  for (const auto& p : id.point) {
    if (!(p.x.ring() == a.ring()) || !(p.y.ring() == a.ring())) throw RingMismatch("grid point over a different ring");
    if (!p.is_normal_form()) throw InputError("grid point is not in P^1 normal form");
  }
  std::vector<unsigned> degrees(n, 2);
  degrees[i] = 0;
  degrees[j] = 0;
  MultiPoly g = multi_homogenize(rayleigh_delta(minor_polynomial(a), i, j), degrees);
  std::size_t r = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (l == i || l == j || l == k) continue;
    g = substitute(substitute(g, l, id.point[r].x), n + l, id.point[r].y);
    ++r;
  }
  // Pairs i and j have degree 0 and do not appear in g.
  const auto q = pair_quadratic_coefficients(g, k);
  if (a.ring().characteristic() == 2) return q.b.constant_term();
  return discriminant_pair(g, k).constant_term();
}

HypdetReport decide_membership_hypdet(const MinorVector& a, HypdetMode mode, kernels::Execution ex) {
  const auto& ring = a.ring();
  if (mode == HypdetMode::real_over_rationals && ring.kind() == RingKind::prime_field) {
    throw UnsupportedRing("real mode needs int or rat");
  }
  if (!a.at(0).is_one()) throw NotNormalized("hyperdeterminant criterion needs a_empty = 1, got " + a.at(0).to_string());
  auto points = evaluation_set(ring);
  HypdetReport report;
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t mi = std::uint64_t{1} << i;
      const std::uint64_t mj = std::uint64_t{1} << j;
      RingValue v = a.at(mi) * a.at(mj) - a.at(mi | mj);
      const bool ok = mode == HypdetMode::exact ? ring_sqrt(v).has_value() : v.sign() >= 0;
      if (!ok) report.pair_failures.push_back({i, j, std::move(v)});
    }
  }
  OrbitEvaluator eval(a, std::move(points));
  report.equations = eval.count();
  const std::size_t first = eval.first_nonzero(ex);
  if (first < eval.count()) {
    report.failed_equation = eval.id(first);
    report.failed_value = eval.value(first);
  }
  report.pass = report.pair_failures.empty() && !report.failed_equation;
  if (report.pass && mode == HypdetMode::exact) {
    auto cert = decide_membership_delta(a);
    if (!cert.in_image) {
      throw InternalInconsistency("hyperdeterminant criterion passed but the Delta method rejects the vector");
    }
    report.certificate = std::move(cert);
  }
  return report;
}

}  // namespace minorforge
