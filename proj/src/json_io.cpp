#include "minorforge/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "minorforge/errors.hpp"

namespace minorforge::json_io {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

// Sorted 1-based index list -> bitmask.
std::uint64_t subset_from_json(const json& s, std::size_t n) {
  if (!s.is_array()) throw InputError("\"S\" must be an array of indices");
  std::uint64_t mask = 0;
  for (const auto& e : s) {
    const std::size_t i = as_count(e, "subset element");
    if (i < 1 || i > n) throw InputError("subset element " + std::to_string(i) + " outside [1, n]");
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (mask & bit) throw InputError("repeated subset element " + std::to_string(i));
    mask |= bit;
  }
  return mask;
}

json subset_to_json(std::uint64_t mask) {
  json out = json::array();
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

json point_to_json(const P1Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

}  // namespace

RingDescriptor resolve_ring(const json& doc, const std::optional<RingDescriptor>& flag) {
  std::optional<RingDescriptor> in_doc;
  if (doc.is_object() && doc.contains("ring")) {
    if (!doc.at("ring").is_string()) throw InputError("\"ring\" must be a string");
    in_doc = RingDescriptor::parse(doc.at("ring").get<std::string>());
  }
  if (flag && in_doc && !(*flag == *in_doc)) {
    throw RingMismatch("--ring " + flag->to_string() + " disagrees with the input's ring " + in_doc->to_string());
  }
  if (flag) return *flag;
  if (in_doc) return *in_doc;
  throw InputError("no ring given (use --ring or a \"ring\" field)");
}

RingValue parse_value(const RingDescriptor& ring, const json& v) {
  if (v.is_string()) return ring.parse_value(v.get<std::string>());
  if (v.is_number_integer()) return ring.parse_value(v.dump());
  throw InputError("ring values must be strings or integers, got " + v.dump());
}

json to_json(const RingValue& v) { return v.to_string(); }

json to_json(const MultiPoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json exp = json::array();
    for (std::size_t i = 0; i < f.nvars(); ++i) exp.push_back(t.mono[i]);
    terms.push_back({{"exp", exp}, {"c", to_json(t.coeff)}});
  }
  return {{"format", kFormat}, {"ring", f.ring().to_string()}, {"nvars", f.nvars()}, {"terms", terms}};
}

json to_json(const MinorVector& a) {
  json entries = json::array();
  for (std::uint64_t s = 0; s <= a.full_mask(); ++s) entries.push_back({{"S", subset_to_json(s)}, {"v", to_json(a.at(s))}});
  return {{"format", kFormat}, {"ring", a.ring().to_string()}, {"n", a.n()}, {"entries", entries}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const SymMatrix& m) {
  return {{"format", kFormat}, {"ring", m.ring().to_string()}, {"n", m.size()}, {"rows", to_json(m.rows())}};
}

json to_json(const GroupElement& g) {
  json perm = json::array();
  for (auto p : g.perm()) perm.push_back(p + 1);
  json sl2 = json::array();
  for (const auto& l : g.locals()) {
    sl2.push_back(json::array({json::array({to_json(l.a()), to_json(l.b())}), json::array({to_json(l.c()), to_json(l.d())})}));
  }
  return {{"format", kFormat}, {"ring", g.ring().to_string()}, {"perm", perm}, {"sl2", sl2}};
}

json to_json(const PluckerSquareVector& q) {
  json entries = json::array();
  for (std::size_t k = 0; k < q.subsets().size(); ++k) {
    entries.push_back({{"S", subset_to_json(q.subsets()[k])}, {"v", to_json(q.values()[k])}});
  }
  return {{"format", kFormat}, {"ring", q.ring().to_string()}, {"d", q.d()}, {"n", q.n()}, {"entries", entries}};
}

json to_json(const OrbitEquationId& id) {
  json point = json::array();
  for (const auto& p : id.point) point.push_back(point_to_json(p));
  return {{"triple", {id.triple[0] + 1, id.triple[1] + 1, id.triple[2] + 1}}, {"point", point}};
}

json to_json(const DetRep& rep) {
  return {{"format", kFormat},
          {"ring", rep.w.ring().to_string()},
          {"lambda", to_json(rep.lambda)},
          {"m", rep.w.size()},
          {"V", to_json(rep.v)},
          {"W", to_json(rep.w.rows())}};
}

json to_json(const MembershipFailure& f) {
  json idx = json::array();
  for (auto i : f.indices) idx.push_back(i + 1);
  json out = {{"kind", to_string(f.kind)}, {"indices", idx}, {"detail", f.detail}};
  if (f.value) out["value"] = to_json(*f.value);
  if (f.polynomial) out["polynomial"] = to_json(*f.polynomial);
  return out;
}

json to_json(const HypdetReport& r) {
  json out = {{"format", kFormat}, {"verdict", r.pass ? "pass" : "fail"}, {"equations", r.equations}};
  json pairs = json::array();
  for (const auto& p : r.pair_failures) pairs.push_back({{"i", p.i + 1}, {"j", p.j + 1}, {"value", to_json(p.value)}});
  out["pair_failures"] = pairs;
  if (r.failed_equation) {
    out["failed_equation"] = to_json(*r.failed_equation);
    out["value"] = to_json(*r.failed_value);
  } else {
    out["failed_equation"] = nullptr;
  }
  return out;
}

MultiPoly poly_from_json(const json& doc, const std::optional<RingDescriptor>& ring_flag) {
  const RingDescriptor ring = resolve_ring(doc, ring_flag);
  const std::size_t nvars = as_count(field(doc, "nvars"), "nvars");
  if (nvars > kMaxVariables) throw InputError("too many variables");
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    const json& exp = field(t, "exp");
    if (!exp.is_array() || exp.size() != nvars) throw InputError("term exponent must have nvars entries");
    Monomial m;
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, static_cast<unsigned>(as_count(exp[i], "exponent")));
    out.push_back({m, parse_value(ring, field(t, "c"))});
  }
  return MultiPoly::from_terms(ring, nvars, std::move(out));
}

MinorVector vector_from_json(const json& doc, const std::optional<RingDescriptor>& ring_flag) {
  const RingDescriptor ring = resolve_ring(doc, ring_flag);
  const std::size_t n = as_count(field(doc, "n"), "n");
  MinorVector a(ring, n);
  const json& entries = field(doc, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  std::vector<bool> seen(a.size(), false);
  for (const auto& e : entries) {
    const std::uint64_t s = subset_from_json(field(e, "S"), n);
    if (seen[s]) throw InputError("subset listed twice");
    seen[s] = true;
    a.set(s, parse_value(ring, field(e, "v")));
  }
  return a;
}

Matrix matrix_from_json(const json& doc, const RingDescriptor& ring) {
  const json& rows = field(doc, "rows");
  if (!rows.is_array()) throw InputError("\"rows\" must be an array");
  Matrix m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<RingValue> r;
    for (const auto& e : row) r.push_back(parse_value(ring, e));
    if (!m.empty() && r.size() != m[0].size()) throw InputError("ragged matrix");
    m.push_back(std::move(r));
  }
  return m;
}

SymMatrix sym_matrix_from_json(const json& doc, const std::optional<RingDescriptor>& ring_flag) {
  const RingDescriptor ring = resolve_ring(doc, ring_flag);
  Matrix m = matrix_from_json(doc, ring);
  if (doc.contains("n") && as_count(doc.at("n"), "n") != m.size()) throw InputError("\"n\" disagrees with the row count");
  return SymMatrix::from_rows(ring, m);
}

GroupElement group_from_json(const json& doc, const std::optional<RingDescriptor>& ring_flag) {
  const RingDescriptor ring = resolve_ring(doc, ring_flag);
  const json& perm = field(doc, "perm");
  const json& sl2 = field(doc, "sl2");
  if (!perm.is_array() || !sl2.is_array()) throw InputError("\"perm\" and \"sl2\" must be arrays");
  std::vector<std::size_t> p;
  for (const auto& e : perm) {
    const std::size_t v = as_count(e, "perm entry");
    if (v < 1) throw InputError("perm entries are 1-based");
    p.push_back(v - 1);
  }
  std::vector<SL2Element> locals;
  for (const auto& blk : sl2) {
    if (!blk.is_array() || blk.size() != 2 || !blk[0].is_array() || !blk[1].is_array() || blk[0].size() != 2 ||
        blk[1].size() != 2) {
      throw InputError("each sl2 block must be [[a,b],[c,d]]");
    }
    locals.emplace_back(parse_value(ring, blk[0][0]), parse_value(ring, blk[0][1]), parse_value(ring, blk[1][0]),
                        parse_value(ring, blk[1][1]));
  }
  return {std::move(p), std::move(locals)};
}

PluckerSquareVector plucker_from_json(const json& doc, const std::optional<RingDescriptor>& ring_flag) {
  const RingDescriptor ring = resolve_ring(doc, ring_flag);
  const std::size_t d = as_count(field(doc, "d"), "d");
  const std::size_t n = as_count(field(doc, "n"), "n");
  PluckerSquareVector q(ring, d, n);
  const json& entries = field(doc, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  for (const auto& e : entries) q.set(subset_from_json(field(e, "S"), n), parse_value(ring, field(e, "v")));
  return q;
}

json read_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace minorforge::json_io
