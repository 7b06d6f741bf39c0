#include "bforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace bforge {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::Parse, where + ": " + msg);
}

std::string locate(const std::string& name, int line, int col = 0) {
  std::string out = name + ":" + std::to_string(line);
  if (col > 0) out += ":" + std::to_string(col);
  return out;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits into non-empty whitespace separated fields.
std::vector<std::string> fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Content lines with their 1-based numbers; blanks and "#" comments skipped.
std::vector<std::pair<int, std::string>> content_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    out.emplace_back(number, body);
  }
  return out;
}

long parse_long(const std::string& token, const std::string& where) {
  if (token.empty()) parse_fail(where, "expected an integer");
  size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    parse_fail(where, "bad integer '" + token + "'");
  }
  if (pos != token.size())
    parse_fail(where, "trailing characters in integer '" + token + "'");
  return value;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Character-level polynomial scanner with column tracking for diagnostics.
class PolyScanner {
 public:
  PolyScanner(const std::string& text, const NamedRing& ring,
              const TermOrder& order, std::string where)
      : text_(text), ring_(ring), order_(order), where_(std::move(where)) {
    for (int i = 0; i < ring.width; ++i) {
      index_of_[ring.names[static_cast<size_t>(i)]] = i;
    }
  }

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    if (done()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        advance();
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Term term = read_term();
      term.coeff *= sign;
      if (term.coeff != 0) terms.push_back(std::move(term));
      first = false;
      skip_space();
    }
    return Polynomial(order_, std::move(terms));
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string at = where_ + ":" + std::to_string(pos_ + 1);
    throw Error(ErrorCode::Parse, at + ": " + msg);
  }

  std::string read_number() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      advance();
    if (pos_ == start) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  std::string read_name() {
    size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_'))
      advance();
    return text_.substr(start, pos_ - start);
  }

  // Coefficient times a product of powered variables; factors join with '*'.
  Term read_term() {
    Rational coeff = 1;
    std::vector<int> exp(static_cast<size_t>(ring_.width), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (done()) fail("unexpected end of term");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = read_number();
        Rational value(num);
        skip_space();
        if (!done() && peek() == '/') {
          advance();
          skip_space();
          std::string den = read_number();
          Rational d(den);
          if (d == 0) fail("zero denominator");
          value /= d;
        }
        coeff *= value;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t name_col = pos_;
        std::string name = read_name();
        auto it = index_of_.find(name);
        if (it == index_of_.end()) {
          pos_ = name_col;
          fail("unknown variable '" + name + "'");
        }
        int power = 1;
        skip_space();
        if (!done() && peek() == '^') {
          advance();
          skip_space();
          if (!done() && peek() == '-') fail("negative exponent");
          power = static_cast<int>(parse_long(read_number(), where_));
        }
        exp[static_cast<size_t>(it->second)] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!done() && peek() == '*') {
        advance();
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    return Term{Exponent(std::move(exp)), std::move(coeff)};
  }

  const std::string& text_;
  const NamedRing& ring_;
  const TermOrder& order_;
  std::string where_;
  size_t pos_ = 0;
  std::map<std::string, int> index_of_;
};

// Descending rlex on leading exponents, ties broken by the whole term list;
// gives one canonical generator order independent of construction history.
bool generator_before(const Polynomial& a, const Polynomial& b) {
  TermOrder rl = TermOrder::rlex(a.width());
  int cmp = rl.compare(a.leading().exp, b.leading().exp);
  if (cmp != 0) return cmp > 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t k = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < k; ++i) {
    int c = rl.compare(ta[i].exp, tb[i].exp);
    if (c != 0) return c > 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff > tb[i].coeff;
  }
  return ta.size() > tb.size();
}

std::vector<Polynomial> canonical_generators(const Ideal& ideal) {
  TermOrder rl = TermOrder::rlex(ideal.width());
  std::vector<Polynomial> out;
  for (const Polynomial& g : ideal.generators()) {
    if (g.is_zero()) continue;
    out.push_back(poly_monic(g.with_order(rl)));
  }
  std::sort(out.begin(), out.end(), generator_before);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* config_keys[] = {"bound",   "seed",         "entropy_bound",
                             "retries", "spair_budget", "enum_budget"};

}  // namespace

NamedRing default_ring(int width) {
  if (width < 0) throw Error(ErrorCode::Parse, "negative ring width");
  NamedRing ring;
  ring.width = width;
  if (width <= 5) {
    const char* letters[] = {"x", "y", "z", "t", "u"};
    for (int i = 0; i < width; ++i) ring.names.emplace_back(letters[i]);
  } else {
    for (int i = 0; i < width; ++i)
      ring.names.push_back("x" + std::to_string(i + 1));
  }
  return ring;
}

NamedRing symbolic_ring(int n) {
  NamedRing ring;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      ring.names.push_back("Y" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  NamedRing xs = default_ring(n);
  ring.names.insert(ring.names.end(), xs.names.begin(), xs.names.end());
  ring.width = static_cast<int>(ring.names.size());
  return ring;
}

Exponent parse_exponent_csv(const std::string& text, int expected_width) {
  std::string body = strip(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
    body = strip(body.substr(1, body.size() - 2));
  std::vector<int> entries;
  std::string token;
  std::istringstream in(body);
  while (std::getline(in, token, ',')) {
    long v = parse_long(strip(token), "exponent");
    if (v < 0) parse_fail("exponent", "negative entry");
    entries.push_back(static_cast<int>(v));
  }
  if (entries.empty()) parse_fail("exponent", "no entries");
  if (expected_width >= 0 &&
      static_cast<int>(entries.size()) != expected_width) {
    parse_fail("exponent", "expected " + std::to_string(expected_width) +
                               " entries, got " +
                               std::to_string(entries.size()));
  }
  return Exponent(std::move(entries));
}

std::string exponent_to_csv(const Exponent& e) {
  std::string out;
  for (int i = 0; i < e.width(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text, const NamedRing& ring,
                            const TermOrder& order) {
  if (ring.width != order.width())
    throw Error(ErrorCode::WidthMismatch, "ring and order widths differ");
  return PolyScanner(text, ring, order, "polynomial").run();
}

std::string monomial_to_string(const Exponent& e, const NamedRing& ring) {
  std::string out;
  for (int i = 0; i < e.width(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names[static_cast<size_t>(i)];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string polynomial_to_string(const Polynomial& f, const NamedRing& ring) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = f.terms();
  TermOrder rl = TermOrder::rlex(f.width());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) {
                     return rl.compare(a.exp, b.exp) > 0;
                   });
  std::string out;
  for (const Term& t : terms) {
    bool negative = t.coeff < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(t.coeff);
    std::string mono = monomial_to_string(t.exp, ring);
    if (mono == "1") {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_to_string(mag) + "*" + mono;
    }
  }
  return out;
}

ParsedIdeal parse_ideal_text(const std::string& text, const std::string& name) {
  std::optional<NamedRing> ring;
  std::vector<Polynomial> gens;
  for (const auto& [number, body] : content_lines(text)) {
    std::string where = locate(name, number);
    auto toks = fields(body);
    if (toks[0] == "ring") {
      if (ring) parse_fail(where, "duplicate ring line");
      if (toks.size() < 2) parse_fail(where, "ring line needs a width");
      long w = parse_long(toks[1], where);
      if (w < 1) parse_fail(where, "ring width must be positive");
      NamedRing r;
      r.width = static_cast<int>(w);
      if (toks.size() == 2) {
        r = default_ring(r.width);
      } else {
        if (static_cast<int>(toks.size()) - 2 != r.width)
          parse_fail(where, "expected " + std::to_string(w) + " names");
        for (size_t i = 2; i < toks.size(); ++i) {
          if (!valid_name(toks[i]))
            parse_fail(where, "bad variable name '" + toks[i] + "'");
          r.names.push_back(toks[i]);
        }
        std::set<std::string> unique(r.names.begin(), r.names.end());
        if (unique.size() != r.names.size())
          parse_fail(where, "repeated variable name");
      }
      ring = std::move(r);
    } else if (toks[0] == "gen") {
      if (!ring) parse_fail(where, "gen before ring line");
      size_t at = body.find("gen");
      std::string rest = strip(body.substr(at + 3));
      if (rest.empty()) parse_fail(where, "empty generator");
      Polynomial g =
          PolyScanner(rest, *ring, TermOrder::rlex(ring->width), where).run();
      gens.push_back(std::move(g));
    } else {
      parse_fail(where, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!ring) parse_fail(name, "missing ring line");
  int width = ring->width;
  return ParsedIdeal{std::move(*ring), Ideal(width, std::move(gens))};
}

ParsedIdeal parse_ideal_file(const std::string& path) {
  return parse_ideal_text(read_file(path),
                          std::filesystem::path(path).filename().string());
}

std::string ideal_to_text(const Ideal& ideal, const NamedRing& ring) {
  if (ring.width != ideal.width())
    throw Error(ErrorCode::WidthMismatch, "ring does not match ideal width");
  std::string out = "ring " + std::to_string(ring.width);
  for (const std::string& n : ring.names) out += " " + n;
  out += "\n";
  for (const Polynomial& g : canonical_generators(ideal)) {
    out += "gen " + polynomial_to_string(g, ring) + "\n";
  }
  return out;
}

std::string monomial_ideal_to_text(const MonomialIdeal& m,
                                   const NamedRing& ring) {
  return ideal_to_text(Ideal::from_monomial(m), ring);
}

RawSystem parse_system_text(const std::string& text, const std::string& name) {
  RawSystem raw;
  bool have_n = false, have_d = false, have_rho = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (const auto& [number, body] : content_lines(text)) {
    std::string where = locate(name, number);
    auto toks = fields(body);
    const std::string& head = toks[0];
    std::vector<std::string> rest(toks.begin() + 1, toks.end());
    if (head == "nvars") {
      if (have_n) parse_fail(where, "duplicate nvars");
      if (rest.size() != 1) parse_fail(where, "nvars takes one value");
      long v = parse_long(rest[0], where);
      if (v < 1) parse_fail(where, "nvars must be positive");
      raw.n = static_cast<int>(v);
      have_n = true;
    } else if (head == "degree") {
      if (have_d) parse_fail(where, "duplicate degree");
      if (rest.size() != 1) parse_fail(where, "degree takes one value");
      long v = parse_long(rest[0], where);
      if (v < 0) parse_fail(where, "degree must be nonnegative");
      raw.d = static_cast<int>(v);
      have_d = true;
    } else if (head == "rho" || head == "A" || head == "C") {
      rows.emplace_back(head, std::move(rest));
      rows.back().second.insert(rows.back().second.begin(), where);
    } else {
      parse_fail(where, "unknown directive '" + head + "'");
    }
  }
  if (!have_n) parse_fail(name, "missing nvars line");
  if (!have_d) parse_fail(name, "missing degree line");
  for (auto& [head, data] : rows) {
    std::string where = data[0];
    std::vector<std::string> rest(data.begin() + 1, data.end());
    if (static_cast<int>(rest.size()) != raw.n)
      parse_fail(where, "expected " + std::to_string(raw.n) + " entries");
    std::vector<int> entries;
    for (const std::string& tok : rest)
      entries.push_back(static_cast<int>(parse_long(tok, where)));
    if (head == "rho") {
      if (have_rho) parse_fail(where, "duplicate rho");
      raw.rho = SignedExponent(std::move(entries));
      have_rho = true;
    } else {
      for (int v : entries)
        if (v < 0) parse_fail(where, "negative exponent entry");
      auto& target = head == "A" ? raw.a : raw.c;
      target.insert(Exponent(std::move(entries)));
    }
  }
  if (!have_rho) parse_fail(name, "missing rho line");
  return raw;
}

RawSystem parse_system_file(const std::string& path) {
  return parse_system_text(read_file(path),
                           std::filesystem::path(path).filename().string());
}

std::string system_to_text(const BinomialSystem& sys) {
  std::string out = "nvars " + std::to_string(sys.width()) + "\n";
  out += "degree " + std::to_string(sys.degree()) + "\n";
  out += "rho";
  for (int i = 0; i < sys.width(); ++i)
    out += " " + std::to_string(sys.move()[i]);
  out += "\n";
  TermOrder rl = TermOrder::rlex(sys.width());
  auto emit_rows = [&](const char* tag, const std::set<Exponent>& rows) {
    std::vector<Exponent> sorted(rows.begin(), rows.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const Exponent& a, const Exponent& b) {
                return rl.compare(a, b) > 0;
              });
    for (const Exponent& e : sorted) {
      out += tag;
      for (int i = 0; i < e.width(); ++i) out += " " + std::to_string(e[i]);
      out += "\n";
    }
  };
  emit_rows("A", sys.monomial_set());
  emit_rows("C", sys.binomial_set());
  return out;
}

std::vector<ChainEdge> load_chain_file(const std::string& path) {
  std::string name = std::filesystem::path(path).filename().string();
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::map<std::string, ParsedIdeal> cache;
  auto load = [&](const std::string& rel, const std::string& where) {
    auto it = cache.find(rel);
    if (it != cache.end()) return it->second;
    std::filesystem::path full = base / rel;
    if (!std::filesystem::exists(full))
      parse_fail(where, "no such ideal file '" + rel + "'");
    auto parsed = parse_ideal_file(full.string());
    return cache.emplace(rel, std::move(parsed)).first->second;
  };
  std::vector<ChainEdge> edges;
  for (const auto& [number, body] : content_lines(read_file(path))) {
    std::string where = locate(name, number);
    auto toks = fields(body);
    if (toks[0] == "ideal") {
      if (toks.size() != 2) parse_fail(where, "ideal takes one path");
      load(toks[1], where);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4)
        parse_fail(where, "edge takes a relation and two paths");
      ChainRelation rel = relation_from_name(toks[1]);
      ParsedIdeal src = load(toks[2], where);
      ParsedIdeal dst = load(toks[3], where);
      if (src.ideal.width() != dst.ideal.width())
        parse_fail(where, "edge endpoints live in different rings");
      edges.push_back(ChainEdge{rel, std::move(src.ideal),
                                std::move(dst.ideal), std::nullopt,
                                toks[2] + " -> " + toks[3]});
    } else {
      parse_fail(where, "unknown directive '" + toks[0] + "'");
    }
  }
  return edges;
}

std::string hilbert_to_text(const HilbertData& data,
                            const std::optional<RationalPoly>& poly) {
  std::string out;
  for (size_t d = 0; d < data.values.size(); ++d) {
    out += std::to_string(d) + ": " + std::to_string(data.values[d]) + "\n";
  }
  if (poly) out += "poly: " + poly->to_string() + "\n";
  return out;
}

Limits WorkspaceConfig::limits() const {
  Limits lim;
  lim.spair_budget = spair_budget;
  lim.enum_budget = enum_budget;
  lim.retries = retries;
  lim.entropy_bound = entropy_bound;
  return lim;
}

std::string WorkspaceConfig::to_text() const {
  std::string out;
  out += "bound = " + std::to_string(bound) + "\n";
  out += "seed = " + std::to_string(seed) + "\n";
  out += "entropy_bound = " + std::to_string(entropy_bound) + "\n";
  out += "retries = " + std::to_string(retries) + "\n";
  out += "spair_budget = " + std::to_string(spair_budget) + "\n";
  out += "enum_budget = " + std::to_string(enum_budget) + "\n";
  return out;
}

WorkspaceConfig parse_config_text(const std::string& text,
                                  const std::string& name) {
  WorkspaceConfig config;
  for (const auto& [number, body] : content_lines(text)) {
    std::string where = locate(name, number);
    size_t eq = body.find('=');
    if (eq == std::string::npos) parse_fail(where, "expected key = value");
    std::string key = strip(body.substr(0, eq));
    std::string value = strip(body.substr(eq + 1));
    bool known = false;
    for (const char* k : config_keys) known = known || key == k;
    if (!known) parse_fail(where, "unknown key '" + key + "'");
    if (key == "seed") {
      if (value.empty() ||
          value.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(where, "seed must be a nonnegative integer");
      errno = 0;
      char* end = nullptr;
      unsigned long long v = std::strtoull(value.c_str(), &end, 10);
      if (errno != 0 || end == value.c_str() || *end != '\0')
        parse_fail(where, "bad seed value");
      config.seed = v;
      continue;
    }
    long v = parse_long(value, where);
    if (v <= 0) parse_fail(where, key + " must be positive");
    if (key == "bound") {
      config.bound = static_cast<int>(v);
    } else if (key == "entropy_bound") {
      config.entropy_bound = v;
    } else if (key == "retries") {
      config.retries = static_cast<int>(v);
    } else if (key == "spair_budget") {
      config.spair_budget = v;
    } else {
      config.enum_budget = v;
    }
  }
  return config;
}

WorkspaceConfig load_config(const std::optional<std::string>& path) {
  WorkspaceConfig config;
  if (path) {
    config = parse_config_text(
        read_file(*path), std::filesystem::path(*path).filename().string());
  } else if (std::filesystem::exists("borel-forge.toml")) {
    config = parse_config_text(read_file("borel-forge.toml"),
                               "borel-forge.toml");
  }
  if (const char* env = std::getenv("BFORGE_SEED")) {
    std::string value = env;
    if (value.empty() ||
        value.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "BFORGE_SEED: bad seed value");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
      throw Error(ErrorCode::Parse, "BFORGE_SEED: bad seed value");
    config.seed = v;
  }
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, path + ": cannot open for writing");
  out << content;
}

}  // namespace bforge
