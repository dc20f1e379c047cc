#include "bettilab/jacobian.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace bettilab {

namespace {

constexpr int NV = 4;  // x, y, z, w

MultiPoly mono(int ex, int ey, int ez, int ew, const Rat& c = 1) {
  return MultiPoly::monomial(NV, {ex, ey, ez, ew}, c);
}

// pairs (a<b) in lex order, shared by both Koszul matrices
const std::pair<int, int> kPairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// column (a<b) carries +v_b at row a and -v_a at row b
PolyMatrix koszul_matrix(const std::vector<MultiPoly>& v) {
  PolyMatrix K(4, 6, NV);
  for (int c = 0; c < 6; ++c) {
    auto [a, b] = kPairs[c];
    K.at(a, c) = v[static_cast<std::size_t>(b)];
    K.at(b, c) = -v[static_cast<std::size_t>(a)];
  }
  return K;
}

// nonzero c with p = c*q, if any
std::optional<Rat> proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end()) return std::nullopt;
  Rat c = it->second / c0;
  if (!(p - q * c).is_zero()) return std::nullopt;
  return c;
}

// image of p modulo the two given variables
MultiPoly residue(const MultiPoly& p, int var_a, int var_b) {
  MultiPoly acc(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<std::size_t>(var_a)] > 0 || e[static_cast<std::size_t>(var_b)] > 0)
      continue;
    acc = acc + MultiPoly::monomial(p.nvars(), e, c);
  }
  return acc;
}

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

DegreeLedger degree_ledger(int d) {
  if (d < 2) throw std::invalid_argument("degree_ledger: d >= 2 required");
  DegreeLedger L;
  L.d = d;
  L.f1.assign(4, d);
  L.f2 = {d + 1, 2 * d, 2 * d, 2 * d, 2 * d, 2 * d, 2 * d};
  L.f3 = {2 * d + 1, 2 * d + 1, 2 * d + 1, 2 * d + 1, 3 * d - 1};
  L.f4 = {2 * d + 2};
  return L;
}

BettiDiagram implied_diagram(int d) {
  DegreeLedger L = degree_ledger(d);
  std::map<std::pair<int, int>, Rat> e;
  e[{0, 0}] = 1;
  for (int s : L.f1) e[{1, s}] += 1;
  for (int s : L.f2) e[{2, s}] += 1;
  for (int s : L.f3) e[{3, s}] += 1;
  for (int s : L.f4) e[{4, s}] += 1;
  return BettiDiagram::from_entries(e, true);
}

JacobianResolution build_jacobian(int d) {
  if (d < 2) throw std::invalid_argument("build_jacobian: d >= 2 required");
  JacobianResolution R;
  R.d = d;
  // partial derivatives of x^d y + y^d z + z^d w, with d/dx scaled by 1/d
  R.gens = {
      mono(d - 1, 1, 0, 0),
      mono(d, 0, 0, 0) + mono(0, d - 1, 1, 0, d),
      mono(0, d, 0, 0) + mono(0, 0, d - 1, 1, d),
      mono(0, 0, d, 0),
  };
  R.ell_x = mono(1, 0, 0, 0);
  R.ell_y = mono(0, 1, 0, 0, -1);
  R.ell_z = mono(0, 0, 1, 0, d);
  R.ell_w = mono(0, 0, 0, 1, -Rat(d) * d);
  R.socle = mono(d - 1, 0, d - 1, 0);
  std::vector<MultiPoly> ell = {R.ell_x, R.ell_y, R.ell_z, R.ell_w};

  DegreeLedger L = degree_ledger(d);

  R.phi1 = PolyMatrix(1, 4, NV);
  for (int j = 0; j < 4; ++j) R.phi1.at(0, j) = R.gens[static_cast<std::size_t>(j)];
  R.phi1.row_shifts = {0};
  R.phi1.col_shifts = L.f1;

  PolyMatrix Kg = koszul_matrix(R.gens);
  R.phi2 = PolyMatrix(4, 7, NV);
  for (int i = 0; i < 4; ++i) {
    R.phi2.at(i, 0) = ell[static_cast<std::size_t>(i)];
    for (int j = 0; j < 6; ++j) R.phi2.at(i, j + 1) = Kg.at(i, j);
  }
  R.phi2.row_shifts = L.f1;
  R.phi2.col_shifts = L.f2;

  // syzygy of phi2 completing the resolution: (socle, A)^t with
  // A = (-z^{d-1}, 0, dy^{d-1}, 0, 0, -dx^{d-1}) over the pair columns
  std::vector<MultiPoly> A = {
      mono(0, 0, d - 1, 0, -1), MultiPoly(NV), mono(0, d - 1, 0, 0, d),
      MultiPoly(NV),            MultiPoly(NV), mono(d - 1, 0, 0, 0, -Rat(d)),
  };
  PolyMatrix Kl = koszul_matrix(ell);
  R.phi3 = PolyMatrix(7, 5, NV);
  for (int j = 0; j < 4; ++j) R.phi3.at(0, j) = R.gens[static_cast<std::size_t>(j)];
  R.phi3.at(0, 4) = R.socle;
  for (int p = 0; p < 6; ++p) {
    for (int j = 0; j < 4; ++j) R.phi3.at(p + 1, j) = Kl.at(j, p);
    R.phi3.at(p + 1, 4) = A[static_cast<std::size_t>(p)];
  }
  R.phi3.row_shifts = L.f2;
  R.phi3.col_shifts = L.f3;

  R.phi4 = PolyMatrix(5, 1, NV);
  for (int i = 0; i < 4; ++i) R.phi4.at(i, 0) = ell[static_cast<std::size_t>(i)];
  R.phi4.row_shifts = L.f3;
  R.phi4.col_shifts = L.f4;

  // alternating matrix whose maximal Pfaffians generate (J, socle)
  R.a_g = PolyMatrix(5, 5, NV);
  auto set_alt = [&](int i, int j, const MultiPoly& v) {
    R.a_g.at(i, j) = v;
    R.a_g.at(j, i) = -v;
  };
  set_alt(0, 1, mono(0, 0, d - 1, 0));
  set_alt(0, 3, mono(1, 0, 0, 0, -1));
  set_alt(0, 4, mono(0, d - 1, 0, 0));
  set_alt(1, 3, mono(0, 1, 0, 0, -1));
  set_alt(2, 3, mono(0, 0, 1, 0, d));
  set_alt(2, 4, mono(d - 1, 0, 0, 0));
  set_alt(3, 4, mono(0, 0, 0, 1, -Rat(d)));
  return R;
}

ComplexCheck verify_complex(const JacobianResolution& R) {
  ComplexCheck C;
  C.d12 = (R.phi1 * R.phi2).is_zero();
  C.d23 = (R.phi2 * R.phi3).is_zero();
  C.d34 = (R.phi3 * R.phi4).is_zero();
  return C;
}

GradingCheck verify_grading(const JacobianResolution& R) {
  GradingCheck G;
  G.phi1 = R.phi1.graded_consistent();
  G.phi2 = R.phi2.graded_consistent();
  G.phi3 = R.phi3.graded_consistent();
  G.phi4 = R.phi4.graded_consistent();
  return G;
}

RankCheck verify_ranks(const JacobianResolution& R, std::uint64_t p, int trials,
                       std::uint64_t seed) {
  RankCheck K;
  K.r1 = rank_random(R.phi1, p, trials, seed);
  K.r2 = rank_random(R.phi2, p, trials, seed + 1);
  K.r3 = rank_random(R.phi3, p, trials, seed + 2);
  K.r4 = rank_random(R.phi4, p, trials, seed + 3);
  return K;
}

FittingReport verify_fitting_minors(const JacobianResolution& R) {
  const int d = R.d;
  FittingReport F;

  auto scan = [&](const PolyMatrix& M, int order, auto&& visit) {
    std::vector<std::vector<int>> rsets, csets;
    subsets_of(M.rows(), order, rsets);
    subsets_of(M.cols(), order, csets);
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        MultiPoly minor = M.submatrix(rs, cs).determinant();
        if (!minor.is_zero()) visit(rs, cs, minor);
      }
  };

  auto record = [](MinorWitness& w, const std::vector<int>& rs, const std::vector<int>& cs,
                   const MultiPoly& minor) {
    if (w.found) return;
    w.found = true;
    w.rows = rs;
    w.cols = cs;
    w.value = minor.str();
  };

  MultiPoly z3d = mono(0, 0, 3 * d, 0);
  MultiPoly x3y3 = mono(3 * (d - 1), 3, 0, 0);
  scan(R.phi2, 3, [&](const auto& rs, const auto& cs, const MultiPoly& minor) {
    if (proportional(minor, z3d)) record(F.phi2_z3d, rs, cs, minor);
    if (proportional(minor, x3y3)) record(F.phi2_x3d3y3, rs, cs, minor);
  });

  MultiPoly zd2 = mono(0, 0, d + 2, 0);
  MultiPoly xd1y3 = mono(d - 1, 3, 0, 0);
  MultiPoly yd2 = mono(0, d + 2, 0, 0);
  MultiPoly y2zw = mono(0, 2, d - 1, 1);
  scan(R.phi3, 4, [&](const auto& rs, const auto& cs, const MultiPoly& minor) {
    if (proportional(minor, zd2)) record(F.phi3_zd2, rs, cs, minor);
    if (proportional(minor, xd1y3)) record(F.phi3_xd1y3, rs, cs, minor);
    // two-term shape s*(y^{d+2} + c y^2 z^{d-1} w)
    if (minor.terms().size() == 2) {
      auto ia = minor.terms().find({0, d + 2, 0, 0});
      auto ib = minor.terms().find({0, 2, d - 1, 1});
      if (ia != minor.terms().end() && ib != minor.terms().end()) {
        Rat c = ib->second / ia->second;
        record(F.phi3_mixed, rs, cs, minor);
        if (std::find(F.mixed_coefficients.begin(), F.mixed_coefficients.end(), c) ==
            F.mixed_coefficients.end())
          F.mixed_coefficients.push_back(c);
      }
    }
    if (!F.case_xz_covered && !residue(minor, 0, 2).is_zero()) F.case_xz_covered = true;
    if (!F.case_yz_covered && !residue(minor, 1, 2).is_zero()) F.case_yz_covered = true;
  });

  return F;
}

SocleReport verify_socle(const JacobianResolution& R) {
  const int d = R.d;
  SocleReport S;
  S.socle_outside_ideal = !graded_membership(R.socle, R.gens).has_value();
  auto times_in = [&](int var) {
    MultiPoly h = MultiPoly::variable(NV, var) * R.socle;
    auto cof = graded_membership(h, R.gens);
    if (!cof) return false;
    MultiPoly check(NV);
    for (std::size_t i = 0; i < R.gens.size(); ++i) check = check + (*cof)[i] * R.gens[i];
    return (check - h).is_zero();
  };
  S.x_multiple_inside = times_in(0);
  S.y_multiple_inside = times_in(1);
  S.z_multiple_inside = times_in(2);
  S.w_multiple_inside = times_in(3);

  // maximal Pfaffians vs gens + socle, up to nonzero scalars, as multisets
  std::vector<MultiPoly> pf = pfaffians_max(R.a_g);
  std::vector<MultiPoly> targets = R.gens;
  targets.push_back(R.socle);
  std::vector<bool> used(targets.size(), false);
  bool all_matched = true;
  for (const auto& p : pf) {
    bool hit = false;
    for (std::size_t t = 0; t < targets.size() && !hit; ++t) {
      if (used[t]) continue;
      if (proportional(p, targets[t])) {
        used[t] = true;
        hit = true;
      }
    }
    if (!hit) all_matched = false;
  }
  S.pfaffians_match = all_matched && std::all_of(used.begin(), used.end(), [](bool b) { return b; });

  S.socle_degree = R.socle.degree();
  S.tail_shift = degree_ledger(d).f4[0];
  S.degrees_ok = S.socle_degree == 2 * d - 2 && S.tail_shift == 2 * d + 2;
  return S;
}

TailReport tail_monotonicity(int d) {
  if (d < 2) throw std::invalid_argument("tail_monotonicity: d >= 2 required");
  TailReport T;
  T.dbar3 = std::max(2 * d + 1, 3 * d - 1);
  T.dbar4 = 2 * d + 2;
  if (T.dbar3 < T.dbar4)
    T.verdict = TailVerdict::Increasing;
  else if (T.dbar3 == T.dbar4)
    T.verdict = TailVerdict::Equal;
  else
    T.verdict = TailVerdict::StrictlyDecreasing;
  TailVerdict want = d == 2   ? TailVerdict::Increasing
                     : d == 3 ? TailVerdict::Equal
                              : TailVerdict::StrictlyDecreasing;
  T.matches_claim = T.verdict == want;
  return T;
}

}  // namespace bettilab
