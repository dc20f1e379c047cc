#include "bettilab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bettilab/polynomial.hpp"

namespace bettilab {

namespace {

using nlohmann::ordered_json;

void note_monotonicity(const BettiDiagram& D, ParseWarnings* warn) {
  if (!warn) return;
  auto low = lower_degree_sequence(D);
  for (std::size_t i = 1; i < low.size(); ++i)
    if (low[i] <= low[i - 1]) {
      warn->lower_sequence_non_increasing = true;
      warn->messages.push_back("lower degree sequence not strictly increasing at column " +
                               std::to_string(i));
      return;
    }
}

Rat value_from_json(const ordered_json& v) {
  if (v.is_string()) {
    auto r = rat_from_string(v.get<std::string>());
    if (!r) throw std::runtime_error("diagram: bad rational \"" + v.get<std::string>() + "\"");
    return *r;
  }
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw std::runtime_error("diagram: entry value must be a string or integer");
}

// strips a trailing # comment, returns trimmed line
std::string strip_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

BettiDiagram parse_diagram_json(const std::string& text, ParseWarnings* warn) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("diagram: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("integral") || !j.contains("entries"))
    throw std::runtime_error("diagram: expected {\"integral\": ..., \"entries\": [...]}");
  if (!j["integral"].is_boolean()) throw std::runtime_error("diagram: integral must be boolean");
  if (!j["entries"].is_array()) throw std::runtime_error("diagram: entries must be an array");
  BettiDiagram::EntryMap entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::runtime_error("diagram: each entry must be [i, j, value]");
    int i = e[0].get<int>();
    int deg = e[1].get<int>();
    if (entries.count({i, deg})) throw std::runtime_error("diagram: duplicate entry");
    entries[{i, deg}] = value_from_json(e[2]);
  }
  BettiDiagram D = BettiDiagram::from_entries(std::move(entries), j["integral"].get<bool>());
  note_monotonicity(D, warn);
  return D;
}

BettiDiagram parse_diagram_tsv(const std::string& text, bool rows_are_offsets,
                               ParseWarnings* warn) {
  std::istringstream in(text);
  std::string raw;
  bool header_seen = false;
  BettiDiagram::EntryMap entries;
  while (std::getline(in, raw)) {
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    std::istringstream row(line);
    if (!header_seen) {
      std::string a, b, c;
      row >> a >> b >> c;
      if (a != "i" || b != "j" || c != "beta")
        throw std::runtime_error("diagram: expected header `i\tj\tbeta`");
      header_seen = true;
      continue;
    }
    long long i, mid;
    std::string val;
    if (!(row >> i >> mid >> val)) throw std::runtime_error("diagram: bad row: " + line);
    std::string extra;
    if (row >> extra) throw std::runtime_error("diagram: trailing data: " + line);
    auto r = rat_from_string(val);
    if (!r) throw std::runtime_error("diagram: bad value: " + val);
    long long deg = rows_are_offsets ? mid + i : mid;
    auto key = std::make_pair(static_cast<int>(i), static_cast<int>(deg));
    if (entries.count(key)) throw std::runtime_error("diagram: duplicate entry");
    entries[key] = *r;
  }
  if (!header_seen) throw std::runtime_error("diagram: missing header");
  bool integral = true;
  for (const auto& [k, v] : entries) {
    (void)k;
    if (!is_integer(v)) integral = false;
  }
  BettiDiagram D = BettiDiagram::from_entries(std::move(entries), integral);
  note_monotonicity(D, warn);
  return D;
}

std::string diagram_to_json(const BettiDiagram& D) {
  ordered_json j;
  j["integral"] = D.integral();
  j["entries"] = ordered_json::array();
  for (const auto& [key, v] : D.entries())
    j["entries"].push_back({key.first, key.second, rat_to_string(v)});
  return j.dump(2) + "\n";
}

std::vector<int> parse_int_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<int> out;
  while (std::getline(in, raw)) {
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    std::istringstream row(line);
    long long v;
    while (row >> v) {
      if (v < -1000000000LL || v > 1000000000LL)
        throw std::runtime_error("sequence: value out of range");
      out.push_back(static_cast<int>(v));
    }
    if (!row.eof()) throw std::runtime_error("sequence: non-integer token in: " + line);
  }
  return out;
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int nvars = -1;
  std::vector<std::vector<int>> gens;
  while (std::getline(in, raw)) {
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    if (nvars < 0) {
      std::istringstream row(line);
      std::string kw;
      row >> kw >> nvars;
      if (kw != "vars" || nvars < 1 || !row.eof())
        throw std::runtime_error("ideal: expected header `vars n`");
      continue;
    }
    MultiPoly p = MultiPoly::parse(line, nvars);
    auto m = p.monomial_form();
    if (!m) throw std::runtime_error("ideal: not a monomial: " + line);
    gens.push_back(m->first);
  }
  if (nvars < 0) throw std::runtime_error("ideal: missing `vars n` header");
  if (gens.empty()) throw std::runtime_error("ideal: no generators");
  return make_monomial_ideal(nvars, std::move(gens));
}

std::string ideal_to_string(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "vars " << I.nvars << "\n";
  for (const auto& g : I.gens) os << MultiPoly::monomial(I.nvars, g).str() << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace bettilab
