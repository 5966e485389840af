#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "ftq/arithdata.hpp"

namespace ftq {

namespace {

struct Value {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // column of the first character of text
};

struct Section {
  std::size_t line = 0;
  std::map<std::string, Value> entries;
};

const std::map<std::string, std::set<std::string>>& required_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"datum", {"ell", "trace_in_K", "split", "unit_rank_K", "ker_nm1_rank"}},
      {"cl_K", {"free_rank", "invariant_factors"}},
      {"cl_A", {"free_rank", "invariant_factors"}},
      {"nm0", {"matrix"}},
      {"steinitz", {"coords"}},
      {"coker_nm1", {"free_rank", "invariant_factors"}},
      {"sigma", {"matrix"}},
  };
  return keys;
}

const std::set<std::string>& optional_datum_keys() {
  static const std::set<std::string> keys = {"s_contains_ell"};
  return keys;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class Parser {
 public:
  Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw DatumParseError(source_, line, col, msg);
  }
  [[noreturn]] void fail(const Value& v, const std::string& msg) const { fail(v.line, v.column, msg); }

  std::map<std::string, Section> split_sections(const std::string& text) {
    std::map<std::string, Section> sections;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    Section* current = nullptr;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw.substr(0, raw.find('#'));
      std::size_t b = 0;
      while (b < line.size() && is_space(line[b])) ++b;
      std::size_t e = line.size();
      while (e > b && is_space(line[e - 1])) --e;
      if (b == e) continue;
      if (line[b] == '[') {
        if (line[e - 1] != ']') fail(lineno, e, "unterminated section header");
        const std::string name = line.substr(b + 1, e - b - 2);
        if (!required_keys().count(name)) fail(lineno, b + 2, "unknown section [" + name + "]");
        if (sections.count(name)) fail(lineno, b + 1, "duplicate section [" + name + "]");
        current = &sections[name];
        current->line = lineno;
        continue;
      }
      if (!current) fail(lineno, b + 1, "key outside of any section");
      const std::size_t eq = line.find('=', b);
      if (eq == std::string::npos || eq >= e) fail(lineno, b + 1, "expected 'key = value'");
      std::size_t ke = eq;
      while (ke > b && is_space(line[ke - 1])) --ke;
      const std::string key = line.substr(b, ke - b);
      if (key.empty()) fail(lineno, b + 1, "empty key");
      std::size_t vb = eq + 1;
      while (vb < e && is_space(line[vb])) ++vb;
      Value v{line.substr(vb, e - vb), lineno, vb + 1};
      if (current->entries.count(key)) fail(lineno, b + 1, "duplicate key '" + key + "'");
      current->entries.emplace(key, std::move(v));
    }
    last_line_ = lineno;

    for (const auto& [name, keys] : required_keys()) {
      const auto it = sections.find(name);
      if (it == sections.end()) fail(last_line_ + 1, 1, "missing required section [" + name + "]");
      for (const auto& [key, value] : it->second.entries) {
        const bool known = keys.count(key) || (name == "datum" && optional_datum_keys().count(key));
        if (!known) fail(value, "unknown key '" + key + "' in section [" + name + "]");
      }
      for (const auto& key : keys)
        if (!it->second.entries.count(key))
          fail(it->second.line, 1, "missing required key '" + key + "' in section [" + name + "]");
    }
    return sections;
  }

  Int parse_int(const std::string& tok, std::size_t line, std::size_t col) const {
    std::string_view s = tok;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail(line, col, "expected an integer, got '" + tok + "'");
    return v;
  }

  Int parse_int(const Value& v) const { return parse_int(v.text, v.line, v.column); }

  std::size_t parse_count(const Value& v) const {
    const Int x = parse_int(v);
    if (x < 0) fail(v, "expected a nonnegative integer");
    return static_cast<std::size_t>(x);
  }

  bool parse_bool(const Value& v) const {
    if (v.text == "true") return true;
    if (v.text == "false") return false;
    fail(v, "expected 'true' or 'false', got '" + v.text + "'");
  }

  // Comma-separated integers; the empty string is the empty list.
  std::vector<Int> parse_list(const Value& v) const {
    std::vector<Int> out;
    if (v.text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = v.text.find(',', pos);
      const std::size_t end = comma == std::string::npos ? v.text.size() : comma;
      std::size_t b = pos, e = end;
      while (b < e && is_space(v.text[b])) ++b;
      while (e > b && is_space(v.text[e - 1])) --e;
      out.push_back(parse_int(v.text.substr(b, e - b), v.line, v.column + b));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  FinGenAbGroup parse_group(const Section& s) const {
    const std::size_t r = parse_count(s.entries.at("free_rank"));
    const Value& fv = s.entries.at("invariant_factors");
    try {
      return FinGenAbGroup(r, parse_list(fv));
    } catch (const std::invalid_argument& e) {
      fail(fv, e.what());
    }
  }

  IntMatrix parse_matrix(const Value& v, std::size_t rows, std::size_t cols) const {
    std::vector<std::vector<Int>> parsed;
    std::size_t pos = 0;
    std::size_t entries = 0;
    while (pos <= v.text.size()) {
      const std::size_t semi = v.text.find(';', pos);
      const std::size_t end = semi == std::string::npos ? v.text.size() : semi;
      std::vector<Int> row;
      std::size_t i = pos;
      while (i < end) {
        while (i < end && is_space(v.text[i])) ++i;
        if (i >= end) break;
        std::size_t j = i;
        while (j < end && !is_space(v.text[j])) ++j;
        row.push_back(parse_int(v.text.substr(i, j - i), v.line, v.column + i));
        ++entries;
        i = j;
      }
      parsed.push_back(std::move(row));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    IntMatrix m(rows, cols);
    if (rows * cols == 0) {
      if (entries != 0) fail(v, "expected an empty matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols));
      return m;
    }
    if (parsed.size() != rows) fail(v, "expected " + std::to_string(rows) + " rows, got " + std::to_string(parsed.size()));
    for (std::size_t i = 0; i < rows; ++i) {
      if (parsed[i].size() != cols)
        fail(v, "row " + std::to_string(i + 1) + " has " + std::to_string(parsed[i].size()) + " entries, expected " + std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = parsed[i][j];
    }
    return m;
  }

 private:
  std::string source_;
  std::size_t last_line_ = 0;
};

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

void write_group(std::ostringstream& os, const char* name, const FinGenAbGroup& g) {
  os << '[' << name << "]\n"
     << "free_rank = " << g.free_rank() << '\n'
     << "invariant_factors = " << join(g.invariant_factors()) << "\n\n";
}

}  // namespace

ArithmeticDatum parse_datum(const std::string& text, const std::string& source_name) {
  Parser p(source_name);
  const auto sections = p.split_sections(text);
  const Section& head = sections.at("datum");

  ArithmeticDatum d;
  d.ell = p.parse_int(head.entries.at("ell"));
  d.trace_in_K = p.parse_bool(head.entries.at("trace_in_K"));
  d.split = p.parse_bool(head.entries.at("split"));
  d.unit_rank_K = p.parse_count(head.entries.at("unit_rank_K"));
  d.ker_nm1_rank = p.parse_count(head.entries.at("ker_nm1_rank"));
  if (const auto it = head.entries.find("s_contains_ell"); it != head.entries.end())
    d.s_contains_ell = p.parse_bool(it->second);

  if (d.ell == 2 || !is_prime(d.ell))
    throw ConsistencyError("ell_odd_prime", "ell = " + std::to_string(d.ell) + " must be an odd prime");

  d.cl_K = p.parse_group(sections.at("cl_K"));
  d.cl_A = p.parse_group(sections.at("cl_A"));
  d.coker_nm1 = p.parse_group(sections.at("coker_nm1"));

  const Value& nm0v = sections.at("nm0").entries.at("matrix");
  IntMatrix nm0m = p.parse_matrix(nm0v, d.cl_K.num_generators(), d.cl_A.num_generators());
  try {
    d.nm0 = GroupHom(d.cl_A, d.cl_K, std::move(nm0m));
  } catch (const std::invalid_argument& e) {
    throw ConsistencyError("nm0_well_defined", e.what());
  }

  const Value& sv = sections.at("steinitz").entries.at("coords");
  d.steinitz = p.parse_list(sv);
  if (d.steinitz.size() != d.cl_K.num_generators())
    p.fail(sv, "steinitz needs " + std::to_string(d.cl_K.num_generators()) + " coordinates, got " + std::to_string(d.steinitz.size()));

  const FinGenAbGroup ker = kernel(d.nm0).group;
  const Value& sigv = sections.at("sigma").entries.at("matrix");
  IntMatrix sigm = p.parse_matrix(sigv, ker.num_generators(), ker.num_generators());
  try {
    d.sigma = Involution(GroupHom(ker, ker, std::move(sigm)));
  } catch (const std::invalid_argument& e) {
    throw ConsistencyError("sigma_involution", e.what());
  }

  for (const char* key : {"ell", "trace_in_K", "split", "cl_K", "cl_A", "nm0", "steinitz", "unit_rank_K",
                          "ker_nm1_rank", "coker_nm1", "sigma"})
    d.provenance[key] = Provenance::ingested;
  d.validate();
  return d;
}

ArithmeticDatum load_datum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatumParseError(path.string(), 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str(), path.string());
}

std::string save_datum(const ArithmeticDatum& d) {
  std::ostringstream os;
  os << "[datum]\n"
     << "ell = " << d.ell << '\n'
     << "trace_in_K = " << (d.trace_in_K ? "true" : "false") << '\n'
     << "split = " << (d.split ? "true" : "false") << '\n'
     << "unit_rank_K = " << d.unit_rank_K << '\n'
     << "ker_nm1_rank = " << d.ker_nm1_rank << '\n'
     << "s_contains_ell = " << (d.s_contains_ell ? "true" : "false") << "\n\n";
  write_group(os, "cl_K", d.cl_K);
  write_group(os, "cl_A", d.cl_A);
  os << "[nm0]\nmatrix = " << d.nm0.matrix().to_string() << "\n\n";
  os << "[steinitz]\ncoords = " << join(d.steinitz) << "\n\n";
  write_group(os, "coker_nm1", d.coker_nm1);
  os << "[sigma]\nmatrix = " << d.sigma.underlying().matrix().to_string() << '\n';
  return os.str();
}

}  // namespace ftq
