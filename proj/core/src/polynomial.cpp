#include "bettilab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bettilab {

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Expo(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int idx) {
  if (idx < 0 || idx >= nvars) throw std::invalid_argument("variable index out of range");
  Expo e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(idx)] = 1;
  return monomial(nvars, std::move(e));
}

MultiPoly MultiPoly::monomial(int nvars, Expo e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(n_);
  Expo e(static_cast<std::size_t>(n_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int v = 0; v < n_; ++v)
        e[static_cast<std::size_t>(v)] =
            e1[static_cast<std::size_t>(v)] + e2[static_cast<std::size_t>(v)];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(n_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(n_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= n_) throw std::invalid_argument("variable index out of range");
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Expo e2 = e;
    e2[static_cast<std::size_t>(var)] = k - 1;
    r.add_term(e2, c * k);
  }
  return r;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (d == -2) d = t;
    if (t != d) return false;
  }
  return true;
}

std::optional<std::pair<MultiPoly::Expo, Rat>> MultiPoly::monomial_form() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::pair{terms_.begin()->first, terms_.begin()->second};
}

std::uint64_t MultiPoly::eval_mod(const std::vector<std::uint64_t>& point,
                                  std::uint64_t p) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point size mismatch");
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t v = rat_mod(c, p);
    for (int i = 0; i < n_; ++i)
      v = v * mod_pow(point[static_cast<std::size_t>(i)],
                      static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]), p) %
          p;
    acc = (acc + v) % p;
  }
  return acc;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + why);
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
  Lexer lx{text};
  MultiPoly out(nvars);
  bool first_term = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (!first_term) {
      lx.fail("expected '+' or '-' between terms");
    }
    first_term = false;

    Rat coeff = sign;
    Expo e(static_cast<std::size_t>(nvars), 0);
    bool any_factor = false;
    for (;;) {
      char f = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff *= Rat(lx.integer());
        any_factor = true;
      } else if (f == 'x') {
        ++lx.pos;
        Int idx = lx.integer();
        if (idx < 1 || idx > nvars) lx.fail("variable index out of range");
        int exp = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          Int ev = lx.integer();
          if (ev < 0 || ev > 1000000) lx.fail("bad exponent");
          exp = ev.convert_to<int>();
        }
        e[static_cast<std::size_t>(idx.convert_to<int>() - 1)] += exp;
        any_factor = true;
      } else {
        lx.fail("expected coefficient or variable");
      }
      if (lx.peek() == '*') {
        ++lx.pos;
        continue;
      }
      break;
    }
    if (!any_factor) lx.fail("empty term");
    out.add_term(e, coeff);
  }
  if (first_term) throw std::invalid_argument("polynomial parse error: empty input");
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // reverse lex so leading monomials print first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat abs = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed_coeff = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](int v) { return v > 0; });
    if (abs != 1 || !has_vars) {
      os << rat_to_string(abs);
      printed_coeff = true;
    }
    bool need_star = printed_coeff;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << "x" << v + 1;
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), n_(nvars),
      a_(static_cast<std::size_t>(rows) * cols, MultiPoly(nvars)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: bad shape");
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
  PolyMatrix r(rows_, o.cols_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      MultiPoly acc(n_);
      for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  r.row_shifts = col_shifts;
  r.col_shifts = row_shifts;
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
  PolyMatrix r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), n_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      r.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
  return r;
}

MultiPoly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  if (rows_ == 0) return MultiPoly::constant(n_, 1);
  if (rows_ == 1) return at(0, 0);
  MultiPoly det(n_);
  std::vector<int> all_cols(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) all_cols[static_cast<std::size_t>(j)] = j;
  std::vector<int> rest_rows;
  for (int i = 1; i < rows_; ++i) rest_rows.push_back(i);
  for (int i = 0; i < rows_; ++i) {
    if (at(i, 0).is_zero()) continue;
    std::vector<int> rows_sel;
    for (int r = 0; r < rows_; ++r)
      if (r != i) rows_sel.push_back(r);
    std::vector<int> cols_sel(all_cols.begin() + 1, all_cols.end());
    MultiPoly minor = submatrix(rows_sel, cols_sel).determinant();
    MultiPoly contrib = at(i, 0) * minor;
    det = (i % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

bool PolyMatrix::is_alternating() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (!(at(i, j) + at(j, i)).is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::graded_consistent() const {
  if (static_cast<int>(row_shifts.size()) != rows_ ||
      static_cast<int>(col_shifts.size()) != cols_)
    throw std::logic_error("graded_consistent: shifts not populated");
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const MultiPoly& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) return false;
      if (e.degree() != col_shifts[static_cast<std::size_t>(j)] -
                            row_shifts[static_cast<std::size_t>(i)])
        return false;
    }
  return true;
}

MultiPoly pfaffian4(const PolyMatrix& B) {
  if (B.rows() != 4 || B.cols() != 4 || !B.is_alternating())
    throw std::invalid_argument("pfaffian4: need a 4x4 alternating matrix");
  return B.at(0, 1) * B.at(2, 3) - B.at(0, 2) * B.at(1, 3) + B.at(0, 3) * B.at(1, 2);
}

std::vector<MultiPoly> pfaffians_max(const PolyMatrix& A) {
  if (A.rows() != 5 || A.cols() != 5 || !A.is_alternating())
    throw std::invalid_argument("pfaffians_max: need a 5x5 alternating matrix");
  std::vector<MultiPoly> out;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> sel;
    for (int i = 0; i < 5; ++i)
      if (i != skip) sel.push_back(i);
    out.push_back(pfaffian4(A.submatrix(sel, sel)));
  }
  return out;
}

std::vector<MultiPoly::Expo> monomials_of_degree(int nvars, int deg) {
  std::vector<MultiPoly::Expo> out;
  if (deg < 0) return out;
  MultiPoly::Expo cur(static_cast<std::size_t>(nvars), 0);
  // lexicographic enumeration by recursion on the first variable
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
    cur[static_cast<std::size_t>(var)] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

std::optional<std::vector<MultiPoly>> graded_membership(const MultiPoly& h,
                                                        const std::vector<MultiPoly>& gens) {
  if (!h.is_homogeneous()) throw std::invalid_argument("graded_membership: h not homogeneous");
  int n = h.nvars();
  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("graded_membership: variable count mismatch");
    if (g.is_zero() || !g.is_homogeneous())
      throw std::invalid_argument("graded_membership: generators must be nonzero homogeneous");
  }
  if (h.is_zero()) return std::vector<MultiPoly>(gens.size(), MultiPoly(n));
  int dh = h.degree();

  // Unknowns: one coefficient per (generator, cofactor monomial).
  struct Unknown {
    std::size_t gen;
    MultiPoly::Expo mono;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int cd = dh - gens[gi].degree();
    if (cd < 0) continue;
    for (auto& m : monomials_of_degree(n, cd)) unknowns.push_back({gi, std::move(m)});
  }

  // Equations: one per monomial of degree dh appearing anywhere.
  std::map<MultiPoly::Expo, int> row_of;
  auto row_index = [&](const MultiPoly::Expo& e) {
    auto [it, fresh] = row_of.emplace(e, static_cast<int>(row_of.size()));
    (void)fresh;
    return it->second;
  };
  for (const auto& [e, c] : h.terms()) {
    (void)c;
    row_index(e);
  }
  std::vector<std::map<int, Rat>> cols(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    MultiPoly prod = gens[unknowns[u].gen] * MultiPoly::monomial(n, unknowns[u].mono);
    for (const auto& [e, c] : prod.terms()) cols[u][row_index(e)] = c;
  }

  RatMat A(static_cast<int>(row_of.size()), static_cast<int>(unknowns.size()));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [r, c] : cols[u]) A.at(r, static_cast<int>(u)) = c;
  std::vector<Rat> b(row_of.size(), Rat(0));
  for (const auto& [e, c] : h.terms()) b[static_cast<std::size_t>(row_of.at(e))] = c;

  auto x = A.solve(b);
  if (!x) return std::nullopt;

  std::vector<MultiPoly> cof(gens.size(), MultiPoly(n));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if ((*x)[u] == 0) continue;
    cof[unknowns[u].gen] =
        cof[unknowns[u].gen] + MultiPoly::monomial(n, unknowns[u].mono, (*x)[u]);
  }
  return cof;
}

int rank_random(const PolyMatrix& M, std::uint64_t p, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("rank_random: trials >= 1 required");
  if (!is_prime_u32(p)) throw std::invalid_argument("rank_random: p must be a prime below 2^32");
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    // per-trial generator so trials are order-independent
    std::mt19937_64 eng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(t + 1)));
    std::vector<std::uint64_t> point(static_cast<std::size_t>(M.nvars()));
    for (auto& v : point) v = eng() % p;
    FpMat num(M.rows(), M.cols(), p);
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) num.at(i, j) = M.at(i, j).eval_mod(point, p);
    best = std::max(best, num.rank());
  }
  return best;
}

}  // namespace bettilab
