#include "hball/cli.hpp"

#include <algorithm>

#include "hball/construction.hpp"
#include "hball/homology.hpp"
#include "hball/io.hpp"
#include "hball/obstruction.hpp"

namespace hball {

using ojson = nlohmann::ordered_json;

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int exit_for(Verdict v) {
  if (v == Verdict::constructible) return exit_constructible;
  if (is_impossible(v)) return exit_impossible;
  return exit_unknown;
}

const std::string& arg(const CommandRequest& r, std::size_t i, const char* what) {
  if (r.args.size() <= i) throw InputError(r.subcommand + " needs " + what);
  return r.args[i];
}

CountVector h_arg(const CommandRequest& r) {
  CountVector v = parse_vector(arg(r, 0, "an h-vector"));
  if (v.role == Role::f) v = convert(v, Role::h);
  if (v.role == Role::g) throw InputError(r.subcommand + " takes an h- or f-vector");
  if (r.dim && *r.dim != v.d) throw InputError("--dim does not match the vector length");
  return v;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

CommandResult finish(const CommandRequest& r, int code, const ojson& report, bool report_to_file = true) {
  const std::string text = dump(report);
  if (report_to_file && !r.output.empty()) write_text_file(r.output, text);
  return {code, text};
}

CommandResult run_convert(const CommandRequest& r) {
  const CountVector v = parse_vector(arg(r, 0, "a vector"));
  ojson j;
  j["input"] = format_vector(v);
  for (Role t : {Role::f, Role::h, Role::g}) {
    const CountVector c = convert(v, t);
    j[t == Role::f ? "f" : t == Role::h ? "h" : "g"] = c.entries;
  }
  return finish(r, exit_constructible, j);
}

CommandResult run_check(const CommandRequest& r) {
  const CountVector h = h_arg(r);
  const ObstructionReport rep = verdict(h, {r.recursive_splits, r.cap_absent_edges});
  ojson j = report_to_json(rep);
  if (h.size() == 7) {
    const Conjecture61 c = conjecture61_predicate(h, r.m_nonneg);
    ojson cj{{"m_nonneg", r.m_nonneg}, {"holds", c.holds}};
    if (c.witness) cj["witness"] = *c.witness;
    j["conjecture61"] = cj;
  }
  return finish(r, exit_for(rep.verdict), j);
}

CommandResult run_construct(const CommandRequest& r) {
  const CountVector h = h_arg(r);
  const ConstructionConditions cc = construction_conditions(h);
  ojson j;
  j["h"] = h.entries;
  if (!cc.satisfied()) {
    j["constructed"] = false;
    j["reason"] = cc.failure();
    return finish(r, exit_unknown, j, false);
  }
  VerifiedBall ball = construct_verified(h);
  j["constructed"] = true;
  j["facets"] = ball.complex.num_facets();
  j["vertices"] = ball.complex.num_vertices();
  j["topology"] = to_string(ball.topology.kind);
  if (!r.output.empty()) {
    write_text_file(r.output, dump(complex_to_json(ball.complex, &ball.certificate)));
    j["complex_file"] = r.output;
  } else {
    j["complex"] = complex_to_json(ball.complex, &ball.certificate);
  }
  return {exit_constructible, dump(j)};
}

CommandResult run_verify(const CommandRequest& r) {
  const ComplexFile file = read_complex_file(arg(r, 0, "a complex file"));
  const SimplicialComplex& c = file.complex;
  if (c.is_void()) throw InputError("the complex has no facets");
  ojson j;
  bool ok = true;
  const CountVector h = h_vector(c);
  j["h"] = h.entries;
  j["f"] = f_vector(c).entries;
  if (r.args.size() > 1) {
    CountVector want = parse_vector(r.args[1]);
    if (want.role == Role::f) want = convert(want, Role::h);
    const bool same = want.entries == h.entries;
    j["expected_h_matches"] = same;
    ok = ok && same;
  }
  if (file.certificate) {
    std::vector<Face> sorted = file.certificate->order;
    std::sort(sorted.begin(), sorted.end());
    const bool covers = sorted == c.facets();
    bool shells = false;
    try {
      shells = certificate_matches(*file.certificate);
    } catch (const NotAShelling& e) {
      j["shelling_error"] = e.what();
    }
    j["certificate_covers_facets"] = covers;
    j["certificate_valid"] = shells;
    if (shells) j["certificate_h_matches"] = h_from_certificate(*file.certificate).entries == h.entries;
    ok = ok && covers && shells && h_from_certificate(*file.certificate).entries == h.entries;
  }
  const TopologicalClass t = classify(c);
  j["topology"] = to_string(t.kind);
  if (!t.reason.empty()) j["topology_reason"] = t.reason;
  if (t.boundary) j["boundary_facets"] = t.boundary->num_facets();
  ok = ok && t.kind == TopologyKind::homology_ball;
  j["accepted"] = ok;
  return finish(r, ok ? exit_constructible : exit_impossible, j);
}

CommandResult run_family(const CommandRequest& r) {
  if (!r.x || !r.y || !r.dim) throw InputError("family needs --x, --y and --dim");
  const ObstructionReport rep = family_certificate({*r.x, *r.y, *r.dim});
  return finish(r, exit_for(rep.verdict), report_to_json(rep));
}

CommandResult run_betti(const CommandRequest& r) {
  const CountVector h = h_arg(r);
  if (!is_m_vector(h.entries).ok) throw InputError("betti needs an M-vector");
  const ObstructionReport rep = betti_split_verdict(h, r.recursive_splits);
  return finish(r, exit_for(rep.verdict), report_to_json(rep));
}

CommandResult run_splits(const CommandRequest& r) {
  const CountVector h = h_arg(r);
  ojson list = ojson::array();
  for (const auto& s : enumerate_splits(h, r.recursive_splits)) list.push_back(ojson::array({s.first.entries, s.second.entries}));
  ojson j{{"h", h.entries}, {"recursive", r.recursive_splits}, {"count", list.size()}, {"splits", list}};
  return finish(r, exit_constructible, j);
}

CommandResult run_skeleton(const CommandRequest& r) {
  const ObstructionReport rep = skeleton_search(h_arg(r), r.cap_absent_edges);
  return finish(r, exit_for(rep.verdict), report_to_json(rep));
}

// Glues the lexicographically first boundary ridges of the two balls, order-preserving.
CommandResult run_glue(const CommandRequest& r) {
  const ComplexFile a = read_complex_file(arg(r, 0, "two complex files"));
  const ComplexFile b = read_complex_file(arg(r, 1, "two complex files"));
  const SimplicialComplex ba = ridge_boundary(a.complex), bb = ridge_boundary(b.complex);
  if (ba.is_void() || bb.is_void()) throw InputError("both complexes need a boundary ridge");
  GlueMap map{{GluePair{ba.facets().front(), bb.facets().front(), {}}}};
  const SimplicialComplex g = glue(a.complex, b.complex, map);
  const CountVector ha = h_vector(a.complex), hb = h_vector(b.complex), hg = h_vector(g);
  std::vector<Count> expect(ha.size());
  for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = ha[i] + hb[i];
  expect[0] = 1;
  if (expect.size() > 1) expect[1] += 1;
  ojson j;
  j["ridge_a"] = ba.facets().front().vertices();
  j["ridge_b"] = bb.facets().front().vertices();
  j["h_a"] = ha.entries;
  j["h_b"] = hb.entries;
  j["h"] = hg.entries;
  j["arithmetic_ok"] = hg.entries == expect;
  j["hochster_beta_top"] = hochster_beta_top(g);
  if (!r.output.empty()) {
    write_text_file(r.output, dump(complex_to_json(g)));
    j["complex_file"] = r.output;
  } else {
    j["complex"] = complex_to_json(g);
  }
  return {exit_constructible, dump(j)};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"convert", "check", "construct", "verify", "family",
                                              "betti",   "splits", "skeleton", "glue"};
  return names;
}

CommandResult dispatch(const CommandRequest& r) {
  try {
    if (r.subcommand == "convert") return run_convert(r);
    if (r.subcommand == "check") return run_check(r);
    if (r.subcommand == "construct") return run_construct(r);
    if (r.subcommand == "verify") return run_verify(r);
    if (r.subcommand == "family") return run_family(r);
    if (r.subcommand == "betti") return run_betti(r);
    if (r.subcommand == "splits") return run_splits(r);
    if (r.subcommand == "skeleton") return run_skeleton(r);
    if (r.subcommand == "glue") return run_glue(r);
    throw InputError("unknown subcommand '" + r.subcommand + "'");
  } catch (const ConstructionError& e) {
    return {exit_unknown, dump(ojson{{"error", e.what()}, {"stage", e.stage()}})};
  } catch (const std::exception& e) {
    return {exit_input_error, dump(ojson{{"error", e.what()}})};
  }
}

}  // namespace hball
