#include "minorforge/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "minorforge/errors.hpp"
#include "minorforge/grassmann_detrep.hpp"
#include "minorforge/group_action.hpp"
#include "minorforge/hyperdet.hpp"
#include "minorforge/json_io.hpp"
#include "minorforge/kernels.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/squares.hpp"

namespace minorforge::cli {

using json_io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

json envelope(const std::string& command) { return {{"format", json_io::kFormat}, {"command", command}}; }

std::optional<RingDescriptor> ring_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return RingDescriptor::parse(text);
}

kernels::Execution execution_for(int jobs) {
  if (jobs > 1) {
    kernels::set_threads(jobs);
    return kernels::Execution::parallel;
  }
  return kernels::Execution::serial;
}

bool hypdet_style_pass(const MinorVector& a, const std::vector<P1Point>& points) {
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t mi = std::uint64_t{1} << i;
      const std::uint64_t mj = std::uint64_t{1} << j;
      if (!ring_sqrt(a.at(mi) * a.at(mj) - a.at(mi | mj))) return false;
    }
  }
  OrbitEvaluator eval(a, points);
  return eval.first_nonzero(kernels::Execution::serial) == eval.count();
}

// The multiquadratic form of the F3 anomaly, in paired variables x1 x2 x3 y1 y2 y3.
MultiPoly f3_anomaly_form() {
  const auto f3 = RingDescriptor::prime_field(3);
  auto v = [&](std::size_t i) { return MultiPoly::variable(f3, 6, i); };
  const MultiPoly x1 = v(0), x2 = v(1), x3 = v(2), y1 = v(3), y2 = v(4), y3 = v(5);
  const MultiPoly u = x2 * y3 - x3 * y2;
  const MultiPoly w = x2 * x3 + y2 * y3;
  return x1 * x1 * u * u - (x1 * y1 * (x2 * y3 + x3 * y2) * (x2 * x3 - y2 * y3)).scaled(f3.from_int(2)) +
         y1 * y1 * w * w;
}

json f3_anomaly_report() {
  const auto f3 = RingDescriptor::prime_field(3);
  const MultiPoly g = f3_anomaly_form();
  const MultiPoly disc = discriminant_pair(g, 0);
  auto v = [&](std::size_t i) { return MultiPoly::variable(f3, 6, i); };
  const MultiPoly x2 = v(1), x3 = v(2), y2 = v(4), y3 = v(5);
  const MultiPoly expected = (x2 * y2 * (x2 + y2) * (x2 - y2) * x3 * y3 * (x3 + y3) * (x3 - y3)).scaled(f3.from_int(16));
  const std::vector<unsigned> degrees{0, 4, 4};
  const std::vector<std::vector<P1Point>> grid{{P1Point::affine(f3.one())}, projective_line(f3), projective_line(f3)};
  const bool vanishes = grid_is_zero(disc, degrees, grid);
  const auto root = poly_sqrt(g);
  return {{"ring", "fp:3"},
          {"form", json_io::to_json(g)},
          {"discriminant", json_io::to_json(disc)},
          {"discriminant_matches_factored_form", disc == expected},
          {"discriminant_is_zero", disc.is_zero()},
          {"grid_points", kernels::grid_size(grid)},
          {"grid_vanishes", vanishes},
          {"form_is_square", root.is_square}};
}

int cmd_forward(const std::string& ring, const std::string& path, std::ostream& out) {
  const SymMatrix a = json_io::sym_matrix_from_json(json_io::read_file(path), ring_flag(ring));
  json doc = json_io::to_json(principal_minors(a));
  doc["command"] = "forward";
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_decide(const std::string& method, const std::string& ring, const std::string& path, bool witness, int jobs,
               std::ostream& out) {
  const MinorVector a = json_io::vector_from_json(json_io::read_file(path), ring_flag(ring));
  json doc = envelope("decide");
  doc["method"] = method;
  doc["ring"] = a.ring().to_string();
  doc["n"] = a.n();
  if (!a.at(0).is_one()) {
    MembershipFailure f{FailureKind::a_empty_not_one, {}, a.at(0), std::nullopt, "a_empty = " + a.at(0).to_string()};
    doc["verdict"] = method == "delta" ? "not_in_image" : "fail";
    doc["failure"] = json_io::to_json(f);
    out << doc.dump(2) << "\n";
    return kFail;
  }
  if (method == "delta") {
    const auto cert = decide_membership_delta(a);
    doc["verdict"] = cert.in_image ? "in_image" : "not_in_image";
    if (cert.failure) doc["failure"] = json_io::to_json(*cert.failure);
    if (cert.in_image) {
      json roots = json::array();
      for (const auto& [ij, h] : cert.square_roots) {
        roots.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"root", json_io::to_json(h)}});
      }
      doc["square_roots"] = roots;
      if (witness) doc["witness"] = json_io::to_json(*cert.witness);
    }
    out << doc.dump(2) << "\n";
    return cert.in_image ? kOk : kFail;
  }
  const HypdetMode mode = method == "hypdet" ? HypdetMode::exact : HypdetMode::real_over_rationals;
  if (mode == HypdetMode::real_over_rationals && a.ring().kind() == RingKind::prime_field) {
    throw UnsupportedRing("--method real needs --ring int or rat");
  }
  const auto report = decide_membership_hypdet(a, mode, execution_for(jobs));
  json r = json_io::to_json(report);
  for (auto& [key, value] : r.items()) {
    if (key != "format") doc[key] = value;
  }
  if (!report.pass) {
    if (!report.pair_failures.empty()) {
      doc["failure"] = {{"kind", to_string(mode == HypdetMode::exact ? FailureKind::pair_not_square
                                                                    : FailureKind::pair_negative)}};
    } else {
      doc["failure"] = {{"kind", to_string(FailureKind::hypdet_equation_nonzero)}};
    }
  }
  if (report.pass && witness && report.certificate) doc["witness"] = json_io::to_json(*report.certificate->witness);
  out << doc.dump(2) << "\n";
  return report.pass ? kOk : kFail;
}

std::vector<unsigned> parse_degrees(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size() || v < 0 || v > 255) throw InputError("bad degree");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw InputError("malformed --degrees '" + text + "'");
    }
  }
  return out;
}

int cmd_act(const std::string& ring, const std::string& gamma_path, const std::string& vector_path,
            const std::string& poly_path, const std::string& degrees, std::ostream& out) {
  const json gdoc = json_io::read_file(gamma_path);
  json doc = envelope("act");
  if (!vector_path.empty()) {
    const MinorVector a = json_io::vector_from_json(json_io::read_file(vector_path), ring_flag(ring));
    const GroupElement g = json_io::group_from_json(gdoc, a.ring());
    const MinorVector b = act_on_minor_vector(g, a);
    doc = json_io::to_json(b);
    doc["command"] = "act";
    doc["polynomial"] = json_io::to_json(minor_polynomial(b));
  } else {
    const MultiPoly f = json_io::poly_from_json(json_io::read_file(poly_path), ring_flag(ring));
    const GroupElement g = json_io::group_from_json(gdoc, f.ring());
    const auto d = parse_degrees(degrees);
    doc["polynomial"] = json_io::to_json(act_on_poly(g, f, d));
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_orbit(std::size_t n, const std::string& ring, const std::string& vector_path, bool list_only, int jobs,
              std::ostream& out) {
  if (n < 3) throw InputError("--n must be at least 3");
  const RingDescriptor r = RingDescriptor::parse(ring);
  json doc = envelope("orbit");
  doc["n"] = n;
  doc["ring"] = r.to_string();
  if (list_only || vector_path.empty()) {
    json ids = json::array();
    for (const auto& id : orbit_equation_ids(n, r)) ids.push_back(json_io::to_json(id));
    doc["count"] = ids.size();
    doc["equations"] = ids;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  const MinorVector a = json_io::vector_from_json(json_io::read_file(vector_path), r);
  if (a.n() != n) throw InputError("vector has n = " + std::to_string(a.n()) + ", expected " + std::to_string(n));
  OrbitEvaluator eval(a, evaluation_set(r));
  const std::size_t first = eval.first_nonzero(execution_for(jobs));
  json values = json::array();
  for (std::size_t i = 0; i < eval.count(); ++i) {
    json e = json_io::to_json(eval.id(i));
    e["value"] = json_io::to_json(eval.value(i));
    values.push_back(e);
  }
  doc["count"] = eval.count();
  doc["values"] = values;
  if (first < eval.count()) {
    json f = json_io::to_json(eval.id(first));
    f["value"] = json_io::to_json(eval.value(first));
    doc["first_failure"] = f;
  } else {
    doc["first_failure"] = nullptr;
  }
  out << doc.dump(2) << "\n";
  return first < eval.count() ? kFail : kOk;
}

int cmd_grass(std::size_t d, std::size_t n, const std::string& ring, const std::string& matrix_path,
              const std::string& q_path, int jobs, std::ostream& out) {
  json doc = envelope("grass");
  if (!matrix_path.empty()) {
    const json mdoc = json_io::read_file(matrix_path);
    const RingDescriptor r = json_io::resolve_ring(mdoc, ring_flag(ring));
    const Matrix v = json_io::matrix_from_json(mdoc, r);
    if (v.size() != d || (d > 0 && v[0].size() != n)) throw InputError("matrix is not d x n");
    doc = json_io::to_json(squared_plucker(r, v));
    doc["command"] = "grass";
    out << doc.dump(2) << "\n";
    return kOk;
  }
  const PluckerSquareVector q = json_io::plucker_from_json(json_io::read_file(q_path), ring_flag(ring));
  if (q.d() != d || q.n() != n) throw InputError("q does not match --d/--n");
  const auto res = gr2_membership(q, execution_for(jobs));
  json r = json_io::to_json(res.report);
  for (std::size_t k = 0; k < res.pair_subsets.size(); ++k) {
    json s = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      if (res.pair_subsets[k] >> i & 1U) s.push_back(i + 1);
    }
    r["pair_failures"][k]["S"] = s;
  }
  for (auto& [key, value] : r.items()) {
    if (key != "format") doc[key] = value;
  }
  out << doc.dump(2) << "\n";
  return res.report.pass ? kOk : kFail;
}

int cmd_detrep(const std::string& ring, const std::string& path, std::ostream& out) {
  const MultiPoly f = json_io::poly_from_json(json_io::read_file(path), ring_flag(ring));
  json doc = envelope("detrep");
  if (f.ring().is_field() && !f.is_zero() && is_multiaffine(f)) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      for (std::size_t j = i + 1; j < f.nvars(); ++j) {
        const MultiPoly delta = rayleigh_delta(f, i, j);
        if (!poly_sqrt(delta).is_square) {
          doc["verdict"] = "no_representation";
          doc["pair"] = {i + 1, j + 1};
          doc["delta"] = json_io::to_json(delta);
          out << doc.dump(2) << "\n";
          return kFail;
        }
      }
    }
  }
  const DetRep rep = multiaffine_detrep(f);
  doc["verdict"] = "representation";
  doc["verified"] = verify_detrep(f, rep);
  const json r = json_io::to_json(rep);
  for (const auto& [key, value] : r.items()) {
    if (key != "format") doc[key] = value;
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_f3(std::size_t n, std::size_t samples, std::uint64_t seed, bool exhaustive, bool anomaly, std::ostream& out) {
  json doc = envelope("f3-search");
  if (anomaly) {
    doc["anomaly"] = f3_anomaly_report();
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (n < 3) throw InputError("--n must be at least 3");
  const auto cmp = f3_compare(n, samples, seed, exhaustive);
  doc["n"] = n;
  doc["mode"] = exhaustive ? "exhaustive" : "sampled";
  if (!exhaustive) doc["seed"] = seed;
  doc["evaluation_set"] = "P1(F3)";
  doc["vectors"] = cmp.vectors;
  doc["table"] = {{"delta_in_hypdet_pass", cmp.both_in},
                  {"delta_in_hypdet_fail", cmp.delta_only},
                  {"delta_out_hypdet_pass", cmp.hypdet_only},
                  {"delta_out_hypdet_fail", cmp.both_out}};
  doc["agreements"] = cmp.both_in + cmp.both_out;
  json dis = json::array();
  for (const auto& a : cmp.disagreements) dis.push_back(json_io::to_json(a));
  doc["candidate_counterexamples"] = dis;
  out << doc.dump(2) << "\n";
  return cmp.delta_only + cmp.hypdet_only == 0 ? kOk : kFail;
}

}  // namespace

F3Comparison f3_compare(std::size_t n, std::size_t samples, std::uint64_t seed, bool exhaustive) {
  const auto f3 = RingDescriptor::prime_field(3);
  const auto points = projective_line(f3);
  const std::size_t dim = std::size_t{1} << n;
  F3Comparison cmp;
  auto classify = [&](const MinorVector& a) {
    const bool delta = decide_membership_delta(a).in_image;
    const bool hyp = hypdet_style_pass(a, points);
    ++cmp.vectors;
    if (delta && hyp) ++cmp.both_in;
    if (!delta && !hyp) ++cmp.both_out;
    if (delta && !hyp) ++cmp.delta_only;
    if (!delta && hyp) ++cmp.hypdet_only;
    if (delta != hyp && cmp.disagreements.size() < 10) cmp.disagreements.push_back(a);
  };
  MinorVector a(f3, n);
  a.set(0, f3.one());
  if (exhaustive) {
    if (n > 4) throw InputError("--exhaustive supports n <= 4");
    std::size_t total = 1;
    for (std::size_t k = 1; k < dim; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t s = 1; s < dim; ++s) {
        a.set(s, f3.from_residue(c % 3));
        c /= 3;
      }
      classify(a);
    }
    return cmp;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, 2);
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t s = 1; s < dim; ++s) a.set(s, f3.from_int(digit(rng)));
    classify(a);
  }
  return cmp;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal minor assignment over Z, Q and F_p", "minorforge"};
  app.require_subcommand(1);

  std::string ring, matrix, vector, poly, gamma, degrees, qfile, method = "delta";
  bool witness = false, list_only = false, exhaustive = false, anomaly = false;
  int jobs = 1;
  std::size_t n = 0, d = 0, samples = 1000;
  std::uint64_t seed = 1;

  auto* forward = app.add_subcommand("forward", "principal minors of a symmetric matrix");
  forward->add_option("--ring", ring, "int, rat or fp:<p>");
  forward->add_option("--matrix", matrix, "SymMatrix JSON file")->required();

  auto* decide = app.add_subcommand("decide", "decide membership in the image of the principal minor map");
  decide->add_option("--method", method, "delta, hypdet or real")->check(CLI::IsMember({"delta", "hypdet", "real"}));
  decide->add_option("--ring", ring, "int, rat or fp:<p>");
  decide->add_option("--vector", vector, "MinorVector JSON file")->required();
  decide->add_flag("--witness", witness, "include the reconstructed matrix");
  decide->add_option("--jobs", jobs, "worker threads for orbit equations");

  auto* act = app.add_subcommand("act", "apply an element of SL2^n x| S_n");
  act->add_option("--ring", ring, "int, rat or fp:<p>");
  act->add_option("--gamma", gamma, "GroupElement JSON file")->required();
  auto* act_vec = act->add_option("--vector", vector, "MinorVector JSON file");
  auto* act_poly = act->add_option("--poly", poly, "polynomial JSON file");
  act->add_option("--degrees", degrees, "degree bounds d1,...,dn (with --poly)");
  act_vec->excludes(act_poly);

  auto* orbit = app.add_subcommand("orbit", "list or evaluate hyperdeterminant orbit equations");
  orbit->add_option("--n", n, "number of indices")->required();
  orbit->add_option("--ring", ring, "int, rat or fp:<p>")->required();
  orbit->add_option("--vector", vector, "MinorVector JSON file");
  orbit->add_flag("--list-only", list_only, "only list equation ids");
  orbit->add_option("--jobs", jobs, "worker threads");

  auto* grass = app.add_subcommand("grass", "squared Pluecker vectors and Gr^2 membership");
  grass->add_option("--d", d, "subspace dimension")->required();
  grass->add_option("--n", n, "ambient dimension")->required();
  grass->add_option("--ring", ring, "rat or fp:<p>");
  auto* grass_m = grass->add_option("--matrix", matrix, "d x n matrix JSON file");
  auto* grass_q = grass->add_option("--q", qfile, "PluckerSquareVector JSON file");
  grass->add_option("--jobs", jobs, "worker threads");
  grass_m->excludes(grass_q);

  auto* detrep = app.add_subcommand("detrep", "multiaffine determinantal representation");
  detrep->add_option("--ring", ring, "rat or fp:<p>");
  detrep->add_option("--poly", poly, "polynomial JSON file")->required();

  auto* f3 = app.add_subcommand("f3-search", "compare the Delta method with hyperdeterminant-style conditions over F3");
  f3->add_option("--n", n, "number of indices");
  f3->add_option("--samples", samples, "random vectors to test");
  f3->add_option("--seed", seed, "random seed");
  f3->add_flag("--exhaustive", exhaustive, "enumerate every vector with a_empty = 1");
  f3->add_flag("--anomaly", anomaly, "report the F3 discriminant anomaly instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (forward->parsed()) return cmd_forward(ring, matrix, out);
    if (decide->parsed()) return cmd_decide(method, ring, vector, witness, jobs, out);
    if (act->parsed()) {
      if (vector.empty() == poly.empty()) throw InputError("act needs exactly one of --vector or --poly");
      if (!poly.empty() && degrees.empty()) throw InputError("act --poly needs --degrees");
      return cmd_act(ring, gamma, vector, poly, degrees, out);
    }
    if (orbit->parsed()) return cmd_orbit(n, ring, vector, list_only, jobs, out);
    if (grass->parsed()) {
      if (matrix.empty() == qfile.empty()) throw InputError("grass needs exactly one of --matrix or --q");
      return cmd_grass(d, n, ring, matrix, qfile, jobs, out);
    }
    if (detrep->parsed()) return cmd_detrep(ring, poly, out);
    if (f3->parsed()) return cmd_f3(n, samples, seed, exhaustive, anomaly, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const NoRepresentation& e) {
    err << "no representation: " << e.what() << "\n";
    return kFail;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}

}  // namespace minorforge::cli
