// Command line front end: exact Betti diagram decomposition, bound suites,
// subadditivity checks, DG obstruction tests, monomial resolution, and the
// Jacobian-ideal resolution verifier.
//
// Exit codes: 0 all checks hold, 1 some verified inequality or identity
// failed (or an obstruction was found), 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bettilab/bounds.hpp"
#include "bettilab/decompose.hpp"
#include "bettilab/dg_obstruction.hpp"
#include "bettilab/diagram.hpp"
#include "bettilab/io.hpp"
#include "bettilab/jacobian.hpp"
#include "bettilab/monomial.hpp"
#include "bettilab/subadditivity.hpp"

using nlohmann::ordered_json;
using namespace bettilab;

namespace {

constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["lhs"] = rat_to_string(r.lhs);
  j["relation"] = cmp_symbol(r.relation);
  j["rhs"] = rat_to_string(r.rhs);
  j["holds"] = r.holds;
  if (!r.inputs.empty()) {
    ordered_json in = ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json reports_json(const std::vector<BoundReport>& rs) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) a.push_back(report_json(r));
  return a;
}

bool all_hold(const std::vector<BoundReport>& rs) {
  for (const auto& r : rs)
    if (!r.holds) return false;
  return true;
}

ordered_json diagram_json_obj(const BettiDiagram& D) {
  ordered_json j;
  j["integral"] = D.integral();
  j["entries"] = ordered_json::array();
  for (const auto& [key, v] : D.entries())
    j["entries"].push_back({key.first, key.second, rat_to_string(v)});
  return j;
}

ordered_json intseq_json(const std::vector<int>& v) {
  return ordered_json(v);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct DiagramInput {
  std::string path;
  std::string format;  // "", "json", "tsv"
  bool rows_are_offsets = false;
};

BettiDiagram load_diagram(const DiagramInput& in, ParseWarnings* warn) {
  std::string text = read_file(in.path);
  std::string fmt = in.format;
  if (fmt.empty()) {
    auto dot = in.path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : in.path.substr(dot + 1);
    fmt = ext == "tsv" ? "tsv" : "json";
  }
  if (fmt == "tsv") return parse_diagram_tsv(text, in.rows_are_offsets, warn);
  return parse_diagram_json(text, warn);
}

void add_diagram_opts(CLI::App* cmd, DiagramInput& in) {
  cmd->add_option("--input", in.path, "Betti diagram file")->required();
  cmd->add_option("--format", in.format, "Input format: json or tsv (default: by extension)")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_flag("--rows-are-offsets", in.rows_are_offsets,
                "TSV middle column is the display row j-i");
}

TSequence load_t(const std::string& path, std::optional<int> p) {
  return TSequence(parse_int_sequence(read_file(path)), p);
}

TauSequence load_tau(const std::string& path) {
  return TauSequence(parse_int_sequence(read_file(path)));
}

int run_decompose(const DiagramInput& in, int codim) {
  ParseWarnings warn;
  BettiDiagram D = load_diagram(in, &warn);
  Decomposition dec = decompose(D, codim);
  ordered_json j;
  j["command"] = "decompose";
  j["codim"] = codim;
  j["complete"] = dec.complete;
  if (dec.offending_column) j["offending_column"] = *dec.offending_column;
  j["terms"] = ordered_json::array();
  for (const auto& t : dec.terms) {
    ordered_json term;
    term["weight"] = rat_to_string(t.weight);
    term["degrees"] = intseq_json(t.dseq.degrees());
    j["terms"].push_back(term);
  }
  bool round_trip = false;
  if (dec.complete && !dec.terms.empty()) {
    round_trip = reconstruct(dec.terms) == D;
    j["round_trip"] = round_trip;
  }
  Rat wsum = 0;
  for (const auto& t : dec.terms) wsum += t.weight;
  j["weight_sum"] = rat_to_string(wsum);
  if (!warn.messages.empty()) j["warnings"] = warn.messages;
  emit(j);
  return dec.complete && round_trip ? 0 : 1;
}

int run_bounds(const DiagramInput& in, int d, int codim, bool p3, bool p4,
               std::optional<int> general_j) {
  ParseWarnings warn;
  BettiDiagram D = load_diagram(in, &warn);
  std::vector<BoundReport> reports;
  auto [lo, hi] = mu_bounds(D, d, codim);
  reports.push_back(lo);
  reports.push_back(hi);
  reports.push_back(beta_c_lower(D, d, codim));
  std::vector<int> dbar = upper_degree_sequence(D);
  if (p3) {
    auto more = betti_upper_small_p(d, 3, dbar, &D);
    reports.insert(reports.end(), more.begin(), more.end());
  }
  if (p4) {
    auto more = betti_upper_small_p(d, 4, dbar, &D);
    reports.insert(reports.end(), more.begin(), more.end());
  }
  if (general_j) {
    int j = *general_j;
    if (j < 2 || j > D.pdim()) throw std::runtime_error("--general index out of range");
    Rat beta_j = D.column_total(j);
    reports.push_back(betti_upper_general(d, D.pdim(), j, dbar[static_cast<std::size_t>(j)],
                                          &beta_j));
  }
  ordered_json j;
  j["command"] = "bounds";
  j["d"] = d;
  j["codim"] = codim;
  j["reports"] = reports_json(reports);
  if (!warn.messages.empty()) j["warnings"] = warn.messages;
  emit(j);
  return all_hold(reports) ? 0 : 1;
}

int run_subadd(const std::string& t_path, const std::string& tau_path, bool koszul,
               std::optional<int> p, std::optional<int> q, std::optional<int> depth_gap) {
  TSequence t = load_t(t_path, p);
  TauSequence tau = koszul ? TauSequence::koszul() : load_tau(tau_path);

  std::vector<BoundReport> reports = check_ptibi(t, tau);
  auto reg = reg_intertwine(t, tau, p);
  reports.insert(reports.end(), reg.begin(), reg.end());
  if (koszul) {
    auto kb = koszul_bounds(t, t.known() - 1, q, depth_gap);
    reports.insert(reports.end(), kb.begin(), kb.end());
  }

  ordered_json j;
  j["command"] = "subadd";
  j["t"] = intseq_json(t.values());
  j["tau"] = koszul ? ordered_json("koszul") : ordered_json("file");
  j["reports"] = reports_json(reports);

  ordered_json slopes = ordered_json::array();
  bool slope_ok = true;
  for (int i = 1; i + 1 <= t.known(); ++i) {
    LinearSlopeResult r = check_linear_slope(t, tau, i);
    if (r.kind == LinearSlopeResult::Kind::Inapplicable && r.report == std::nullopt &&
        !tau.value(i + 1))
      continue;  // nothing evaluable at this index
    ordered_json s;
    s["i"] = i;
    switch (r.kind) {
      case LinearSlopeResult::Kind::Inapplicable: s["kind"] = "inapplicable"; break;
      case LinearSlopeResult::Kind::Equal: s["kind"] = "equal"; break;
      case LinearSlopeResult::Kind::Below: s["kind"] = "below"; break;
      case LinearSlopeResult::Kind::Above: s["kind"] = "above"; break;
    }
    s["bound_holds"] = r.bound_holds;
    if (!r.detail.empty()) s["detail"] = r.detail;
    if (r.report) s["report"] = report_json(*r.report);
    slopes.push_back(s);
    if (!r.bound_holds) slope_ok = false;
  }
  j["linear_slope"] = slopes;

  PropagateBounds pb = propagate(t, tau);
  ordered_json prop;
  if (pb.t_next) {
    prop["t_next_index"] = t.known();
    prop["t_next_bound"] = *pb.t_next;
    prop["t_conditional"] = pb.t_conditional;
    if (!pb.t_missing_tau.empty()) prop["t_missing_tau"] = intseq_json(pb.t_missing_tau);
  }
  if (pb.tau_next) {
    prop["tau_next_index"] = tau.known();
    prop["tau_next_bound"] = *pb.tau_next;
    prop["tau_conditional"] = pb.tau_conditional;
    if (!pb.tau_missing_t.empty()) prop["tau_missing_t"] = intseq_json(pb.tau_missing_t);
  }
  j["propagate"] = prop;
  emit(j);
  return all_hold(reports) && slope_ok ? 0 : 1;
}

int run_dg_check(const DiagramInput& in, bool have_input, std::optional<int> m,
                 const std::string& t_path, const std::string& tau_path, bool ht_ok) {
  ordered_json j;
  j["command"] = "dg-check";
  if (m) {
    if (!have_input) throw std::runtime_error("--m requires --input");
    ParseWarnings warn;
    BettiDiagram D = load_diagram(in, &warn);
    StrandVerdict v = strand_generation_test(D, *m);
    j["mode"] = "strand-generation";
    j["m"] = *m;
    j["linear_strand_support"] = intseq_json(v.linear_strand_support);
    j["consistent"] = v.consistent;
    if (v.obstruction) {
      ordered_json o;
      o["i"] = v.obstruction->i;
      o["j"] = v.obstruction->j;
      o["detail"] = v.obstruction->detail;
      j["obstruction"] = o;
    }
    if (!warn.messages.empty()) j["warnings"] = warn.messages;
    emit(j);
    return v.consistent ? 0 : 1;
  }
  if (tau_path.empty()) throw std::runtime_error("need --m or --tau");
  TauSequence tau = load_tau(tau_path);
  TSequence t = t_path.empty()
                    ? TSequence(upper_degree_sequence(load_diagram(in, nullptr)))
                    : load_t(t_path, std::nullopt);
  SubaddObstructionVerdict v = subadditivity_obstruction(t, tau, ht_ok);
  j["mode"] = "dg-subadditivity";
  j["ht_ok"] = ht_ok;
  j["applicable"] = v.applicable;
  j["consistent"] = v.consistent;
  if (v.witness_i) j["witness_i"] = *v.witness_i;
  j["checks"] = reports_json(v.checks);
  emit(j);
  return v.consistent ? 0 : 1;
}

int run_resolve(const std::string& ideal_path, std::uint64_t char_p) {
  std::string text = read_file(ideal_path);
  MonomialIdeal I = parse_ideal(text);
  BettiDiagram D = betti_table(I, char_p);
  ordered_json j = diagram_json_obj(D);
  ordered_json meta;
  meta["nvars"] = I.nvars;
  meta["generators"] = static_cast<int>(I.gens.size());
  meta["characteristic"] = char_p;
  meta["squarefree"] = is_squarefree(I);
  auto eq = equigenerated_degree(I);
  if (eq) meta["equigenerated_degree"] = *eq;
  meta["height"] = height(I);
  j["ideal"] = meta;
  emit(j);
  return 0;
}

int run_jacobian(int d, std::uint64_t prime, std::uint64_t seed, int trials) {
  JacobianResolution R = build_jacobian(d);
  ComplexCheck cc = verify_complex(R);
  GradingCheck gc = verify_grading(R);
  RankCheck rc = verify_ranks(R, prime, trials, seed);
  FittingReport fr = verify_fitting_minors(R);
  SocleReport sr = verify_socle(R);
  TailReport tr = tail_monotonicity(d);

  ordered_json j;
  j["command"] = "jacobian";
  j["d"] = d;
  j["prime"] = prime;
  j["seed"] = seed;

  ordered_json jc;
  jc["phi1_phi2_zero"] = cc.d12;
  jc["phi2_phi3_zero"] = cc.d23;
  jc["phi3_phi4_zero"] = cc.d34;
  j["complex"] = jc;

  ordered_json jg;
  jg["phi1"] = gc.phi1;
  jg["phi2"] = gc.phi2;
  jg["phi3"] = gc.phi3;
  jg["phi4"] = gc.phi4;
  j["grading"] = jg;

  ordered_json jr;
  jr["ranks"] = {rc.r1, rc.r2, rc.r3, rc.r4};
  jr["expected"] = rc.expected();
  j["ranks"] = jr;

  auto witness_json = [](const MinorWitness& w) {
    ordered_json o;
    o["found"] = w.found;
    if (w.found) {
      o["rows"] = ordered_json(w.rows);
      o["cols"] = ordered_json(w.cols);
      o["minor"] = w.value;
    }
    return o;
  };
  ordered_json jf;
  jf["phi2_z_pow_3d"] = witness_json(fr.phi2_z3d);
  jf["phi2_x_pow_3d_minus_3_y3"] = witness_json(fr.phi2_x3d3y3);
  jf["phi3_z_pow_d_plus_2"] = witness_json(fr.phi3_zd2);
  jf["phi3_x_pow_d_minus_1_y3"] = witness_json(fr.phi3_xd1y3);
  jf["phi3_mixed"] = witness_json(fr.phi3_mixed);
  {
    ordered_json cs = ordered_json::array();
    for (const auto& c : fr.mixed_coefficients) cs.push_back(rat_to_string(c));
    jf["mixed_coefficients"] = cs;
  }
  jf["case_xz_covered"] = fr.case_xz_covered;
  jf["case_yz_covered"] = fr.case_yz_covered;
  jf["height_ok"] = fr.ok();
  j["fitting"] = jf;

  ordered_json js;
  js["socle_outside_ideal"] = sr.socle_outside_ideal;
  js["x_multiple_inside"] = sr.x_multiple_inside;
  js["y_multiple_inside"] = sr.y_multiple_inside;
  js["z_multiple_inside"] = sr.z_multiple_inside;
  js["w_multiple_inside"] = sr.w_multiple_inside;
  js["pfaffians_match"] = sr.pfaffians_match;
  js["socle_degree"] = sr.socle_degree;
  js["tail_shift"] = sr.tail_shift;
  js["degrees_ok"] = sr.degrees_ok;
  j["socle"] = js;

  ordered_json jt;
  jt["dbar3"] = tr.dbar3;
  jt["dbar4"] = tr.dbar4;
  jt["verdict"] = tr.verdict == TailVerdict::Increasing          ? "increasing"
                  : tr.verdict == TailVerdict::Equal             ? "equal"
                                                                 : "strictly_decreasing";
  jt["matches_claim"] = tr.matches_claim;
  j["tail"] = jt;

  emit(j);
  bool ok = cc.all() && gc.all() && rc.expected() && fr.ok() && sr.ok() && tr.matches_claim;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for graded Betti diagrams"};
  app.require_subcommand(1);

  DiagramInput dec_in;
  int dec_codim = 1;
  auto* cmd_dec = app.add_subcommand("decompose", "Cone decomposition into pure diagrams");
  add_diagram_opts(cmd_dec, dec_in);
  cmd_dec->add_option("--codim", dec_codim, "Height of the ideal")->required();

  DiagramInput b_in;
  int b_d = 0, b_codim = 0;
  bool b_p3 = false, b_p4 = false;
  std::optional<int> b_general;
  auto* cmd_b = app.add_subcommand("bounds", "Degree and Betti number bound suite");
  add_diagram_opts(cmd_b, b_in);
  cmd_b->add_option("--d", b_d, "Common generator degree")->required();
  cmd_b->add_option("--codim", b_codim, "Height of the ideal")->required();
  cmd_b->add_flag("--p3", b_p3, "Closed-form beta bounds for projective dimension 3");
  cmd_b->add_flag("--p4", b_p4, "Closed-form beta bounds for projective dimension 4");
  cmd_b->add_option("--general", b_general, "Endpoint bound for beta_j, pdim >= 5");

  std::string s_t, s_tau;
  bool s_koszul = false;
  std::optional<int> s_p, s_q, s_gap;
  auto* cmd_s = app.add_subcommand("subadd", "Subadditivity and regularity intertwining checks");
  cmd_s->add_option("--t", s_t, "File with the t-sequence (t_0 t_1 ...)")->required();
  auto* opt_tau = cmd_s->add_option("--tau", s_tau, "File with the tau-sequence");
  cmd_s->add_flag("--koszul", s_koszul, "Assume tau_i = i for all i");
  cmd_s->add_option("--p", s_p, "Projective dimension (t file is then complete)");
  cmd_s->add_option("--q", s_q, "Linearity index q for the N_q cap");
  cmd_s->add_option("--depth-gap", s_gap, "Cap for the consecutive-step inequality");
  opt_tau->excludes("--koszul");

  DiagramInput g_in;
  std::optional<int> g_m;
  std::string g_t, g_tau;
  bool g_ht_ok = false;
  auto* cmd_g = app.add_subcommand("dg-check", "DG-algebra obstruction tests");
  auto* opt_in = cmd_g->add_option("--input", g_in.path, "Betti diagram file");
  cmd_g->add_option("--format", g_in.format, "Input format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd_g->add_flag("--rows-are-offsets", g_in.rows_are_offsets,
                  "TSV middle column is the display row j-i");
  cmd_g->add_option("--m", g_m, "Strand generation test up to homological degree m");
  cmd_g->add_option("--t", g_t, "t-sequence file (default: from the input diagram)");
  cmd_g->add_option("--tau", g_tau, "tau-sequence file for the subadditivity obstruction");
  cmd_g->add_flag("--ht-ok", g_ht_ok, "Assert the height >= 2 hypothesis");

  std::string r_ideal;
  std::uint64_t r_char = 0;
  auto* cmd_r = app.add_subcommand("resolve", "Betti table of a monomial ideal");
  cmd_r->add_option("--ideal", r_ideal, "Monomial ideal file")->required();
  cmd_r->add_option("--char", r_char, "Field characteristic (0 or a prime below 2^32)");

  int j_d = 0, j_trials = 5;
  std::uint64_t j_prime = kDefaultPrime, j_seed = 0;
  auto* cmd_j = app.add_subcommand("jacobian", "Verify the explicit Jacobian-ideal resolution");
  cmd_j->add_option("--d", j_d, "Degree parameter, d >= 2")->required();
  cmd_j->add_option("--prime", j_prime, "Prime for randomized rank checks")
      ->envname("BETTILAB_PRIME");
  cmd_j->add_option("--seed", j_seed, "Seed for randomized rank checks")
      ->envname("BETTILAB_SEED");
  cmd_j->add_option("--trials", j_trials, "Evaluation points per rank check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_dec->parsed()) return run_decompose(dec_in, dec_codim);
    if (cmd_b->parsed()) return run_bounds(b_in, b_d, b_codim, b_p3, b_p4, b_general);
    if (cmd_s->parsed()) {
      if (!s_koszul && s_tau.empty())
        throw std::runtime_error("need --tau FILE or --koszul");
      return run_subadd(s_t, s_tau, s_koszul, s_p, s_q, s_gap);
    }
    if (cmd_g->parsed())
      return run_dg_check(g_in, opt_in->count() > 0, g_m, g_t, g_tau, g_ht_ok);
    if (cmd_r->parsed()) return run_resolve(r_ideal, r_char);
    if (cmd_j->parsed()) {
      if (j_prime >= (1ull << 32) || !is_prime_u32(j_prime))
        throw std::runtime_error("--prime must be a prime below 2^32");
      return run_jacobian(j_d, j_prime, j_seed, j_trials);
    }
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
