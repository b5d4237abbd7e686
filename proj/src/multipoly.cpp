#include "minorforge/multipoly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "minorforge/errors.hpp"
#include "minorforge/kernels.hpp"

namespace minorforge {

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw InputError("variable index out of range");
  if (e > 255) throw InputError("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  unsigned overflow = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = static_cast<unsigned>(exps_[i]) + other.exps_[i];
    overflow |= s;
    out.exps_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow > 255) throw InputError("exponent exceeds 255");
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw InputError("monomial does not divide");
    out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return out;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : exps_) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
}

void check_var(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) {
    throw InputError("variable index " + std::to_string(var) + " out of range for " +
                     std::to_string(f.nvars()) + " variables");
  }
}

}  // namespace

MultiPoly::MultiPoly(RingDescriptor ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {
  if (nvars > kMaxVariables) throw InputError("too many variables (max 32)");
}

MultiPoly MultiPoly::constant(const RingValue& c, std::size_t nvars) {
  MultiPoly out(c.ring(), nvars);
  if (!c.is_zero()) out.terms_.push_back({Monomial{}, c});
  return out;
}

MultiPoly MultiPoly::variable(const RingDescriptor& ring, std::size_t nvars, std::size_t i) {
  MultiPoly out(ring, nvars);
  check_var(out, i);
  out.terms_.push_back({Monomial::variable(i), ring.one()});
  return out;
}

MultiPoly MultiPoly::monomial(const RingValue& c, std::size_t nvars, const Monomial& m) {
  MultiPoly out(c.ring(), nvars);
  for (std::size_t i = nvars; i < kMaxVariables; ++i) {
    if (m[i] != 0) throw InputError("monomial uses a variable beyond nvars");
  }
  if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

MultiPoly MultiPoly::from_terms(const RingDescriptor& ring, std::size_t nvars, std::vector<Term> terms) {
  MultiPoly out(ring, nvars);
  for (const auto& t : terms) {
    if (!(t.coeff.ring() == ring)) throw RingMismatch("term coefficient over a different ring");
    for (std::size_t i = nvars; i < kMaxVariables; ++i) {
      if (t.mono[i] != 0) throw InputError("monomial uses a variable beyond nvars");
    }
  }
  sort_terms(terms);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return out;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.total_degree() == 0);
}

unsigned MultiPoly::degree(std::size_t var) const {
  check_var(*this, var);
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

unsigned MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

RingValue MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_before(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ring_.zero();
}

RingValue MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total_degree() == 0) return terms_.back().coeff;
  return ring_.zero();
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return terms_.front();
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("polynomial ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
  }
  if (nvars_ != other.nvars_) {
    throw InputError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                     std::to_string(other.nvars_));
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly MultiPoly::merged(const MultiPoly& rhs, bool subtract) const {
  check_compatible(rhs);
  MultiPoly out(ring_, nvars_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && canonical_before(a->mono, b->mono))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || canonical_before(b->mono, a->mono)) {
      out.terms_.push_back({b->mono, subtract ? -b->coeff : b->coeff});
      ++b;
    } else {
      RingValue c = subtract ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) { return *this = merged(rhs, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this = merged(rhs, true); }
MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.ring_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, RingValue, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(m, s.coeff);
      if (inserted) {
        it->second *= t.coeff;
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
  }
  sort_terms(out.terms_);
  return out;
}

MultiPoly MultiPoly::scaled(const RingValue& c) const {
  MultiPoly out(ring_, nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    RingValue v = t.coeff * c;
    if (!v.is_zero()) out.terms_.push_back({t.mono, std::move(v)});
  }
  return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const RingValue& c) const {
  MultiPoly out(ring_, nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    RingValue v = t.coeff * c;
    if (!v.is_zero()) out.terms_.push_back({t.mono * m, std::move(v)});
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ring_.one(), nvars_);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  check_var(f, var);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * f.ring().from_int(e)});
  }
  return MultiPoly::from_terms(f.ring(), f.nvars(), std::move(out));
}

MultiPoly multi_homogenize(const MultiPoly& f, std::span<const unsigned> degrees) {
  const std::size_t n = f.nvars();
  if (degrees.size() != n) throw InputError("degree vector length differs from variable count");
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < f.degree(i)) {
      throw InputError("degree bound " + std::to_string(degrees[i]) + " below deg_" + std::to_string(i + 1) +
                       " = " + std::to_string(f.degree(i)));
    }
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, t.mono[i]);
      m.set(n + i, degrees[i] - t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(f.ring(), 2 * n, std::move(out));
}

MultiPoly total_homogenize(const MultiPoly& f, unsigned degree) {
  const std::size_t n = f.nvars();
  if (degree < f.total_degree()) {
    throw InputError("homogenizing degree " + std::to_string(degree) + " below total degree " +
                     std::to_string(f.total_degree()));
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set(n, degree - t.mono.total_degree());
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(f.ring(), n + 1, std::move(out));
}

RingValue evaluate(const MultiPoly& f, std::span<const RingValue> point) {
  if (point.size() != f.nvars()) throw InputError("evaluation point has the wrong length");
  for (const auto& v : point) {
    if (!(v.ring() == f.ring())) throw RingMismatch("evaluation point over a different ring");
  }
  std::vector<std::vector<RingValue>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    unsigned d = f.degree(i);
    powers[i].reserve(d + 1);
    powers[i].push_back(f.ring().one());
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  RingValue acc = f.ring().zero();
  for (const auto& t : f.terms()) {
    RingValue v = t.coeff;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] != 0) v *= powers[i][t.mono[i]];
    }
    acc += v;
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& f, std::size_t var, const RingValue& value) {
  check_var(f, var);
  std::vector<RingValue> powers{f.ring().one()};
  for (unsigned e = 1; e <= f.degree(var); ++e) powers.push_back(powers.back() * value);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    out.push_back({m, t.coeff * powers[e]});
  }
  return MultiPoly::from_terms(f.ring(), f.nvars(), std::move(out));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var) {
  check_var(f, var);
  std::vector<std::vector<Term>> buckets(f.degree(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.ring(), f.nvars(), std::move(b)));
  return out;
}

MultiPoly remap_variables(const MultiPoly& f, std::size_t new_nvars, std::span<const std::size_t> mapping) {
  if (mapping.size() != f.nvars()) throw InputError("variable mapping has the wrong length");
  for (auto target : mapping) {
    if (target >= new_nvars) throw InputError("variable mapping target out of range");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] != 0) m.set(mapping[i], m[mapping[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(f.ring(), new_nvars, std::move(out));
}

MultiPoly dehomogenize_pairs(const MultiPoly& g, std::size_t n) {
  if (g.nvars() != 2 * n) throw InputError("paired form must have 2n variables");
  std::vector<Term> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(g.ring(), n, std::move(out));
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (!(a.ring() == b.ring()) || a.nvars() != b.nvars()) throw RingMismatch("divide_exact operand mismatch");
  const Term& lead = b.leading_term();
  MultiPoly remainder = a;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading_term();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    auto c = exact_div(top.coeff, lead.coeff);
    if (!c) return std::nullopt;
    Monomial m = top.mono.quotient(lead.mono);
    remainder -= b.times_monomial(m, *c);
    quotient.push_back({m, std::move(*c)});
  }
  return MultiPoly::from_terms(a.ring(), a.nvars(), std::move(quotient));
}

bool is_multiaffine(const MultiPoly& f) {
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] > 1) return false;
    }
  }
  return true;
}

std::vector<P1Point> projective_line(const RingDescriptor& ring) {
  if (ring.kind() != RingKind::prime_field) throw InputError("projective_line needs a finite field");
  std::vector<P1Point> out;
  for (std::uint64_t r = 0; r < ring.modulus(); ++r) out.push_back(P1Point::affine(ring.from_residue(r)));
  out.push_back(P1Point::infinity(ring));
  return out;
}

bool grid_is_zero(const MultiPoly& g, std::span<const unsigned> degrees,
                  std::span<const std::vector<P1Point>> pointsets) {
  const std::size_t n = degrees.size();
  if (g.nvars() != 2 * n) throw InputError("paired form must have 2n variables");
  if (pointsets.size() != n) throw InputError("one pointset per variable pair is required");
  bool grid_is_large = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ps = pointsets[i];
    for (std::size_t a = 0; a < ps.size(); ++a) {
      if (!(ps[a].x.ring() == g.ring()) || !(ps[a].y.ring() == g.ring())) {
        throw RingMismatch("grid point over a different ring");
      }
      if (!ps[a].is_normal_form()) throw InputError("grid point is not in P^1 normal form");
      for (std::size_t b = 0; b < a; ++b) {
        if (ps[a] == ps[b]) throw InputError("grid pointset contains a repeated point");
      }
    }
    const auto line = g.ring().size();
    const std::size_t needed = degrees[i] + 1;
    if (ps.size() < needed) {
      if (line && ps.size() == *line + 1) {
        grid_is_large = false;
      } else {
        throw InputError("pair " + std::to_string(i + 1) + " needs " + std::to_string(needed) + " points, got " +
                         std::to_string(ps.size()));
      }
    }
    for (const auto& t : g.terms()) {
      if (t.mono[i] + t.mono[n + i] != degrees[i]) {
        throw InputError("polynomial is not homogeneous of degree " + std::to_string(degrees[i]) + " in pair " +
                         std::to_string(i + 1));
      }
    }
  }
  const bool vanishes = kernels::grid_vanishes(g, pointsets, kernels::Execution::parallel);
  if (grid_is_large && vanishes != g.is_zero()) {
    throw InternalInconsistency("grid evaluation disagrees with the term map");
  }
  return vanishes;
}

}  // namespace minorforge
