#include "ehalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ehalg {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";
constexpr std::string_view kDelta = "\xCE\x94";

struct Token {
  std::string text;
  std::size_t col;
};

struct Line {
  std::size_t number;
  std::string content;
  std::vector<Token> tokens;  // whole line
};

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s, std::size_t from = 0) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string content(text.substr(pos, end - pos));
    if (!content.empty() && content.back() == '\r') content.pop_back();
    if (auto hash = content.find('#'); hash != std::string::npos) content.erase(hash);
    auto tokens = tokenize(content);
    if (!tokens.empty()) out.push_back({number, std::move(content), std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

// "key: values" split; the key may contain spaces (as in "theta g").
struct KeyLine {
  std::size_t number;
  std::string key;
  std::size_t key_col;
  std::vector<Token> values;
};

std::optional<KeyLine> as_key_line(const Line& l) {
  auto colon = l.content.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto key_tokens = tokenize(l.content.substr(0, colon));
  if (key_tokens.empty()) return std::nullopt;
  std::string key;
  for (const auto& t : key_tokens) key += (key.empty() ? "" : " ") + t.text;
  return KeyLine{l.number, key, key_tokens.front().col, tokenize(l.content, colon + 1)};
}

KeyLine expect_key_line(const Line& l) {
  auto k = as_key_line(l);
  if (!k) parse_error(l.number, l.tokens.front().col, "expected 'key: value'");
  return *k;
}

std::size_t parse_count(const KeyLine& k, std::size_t max) {
  if (k.values.size() != 1) parse_error(k.number, k.key_col, "'" + k.key + "' takes a single number");
  const Token& t = k.values[0];
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) parse_error(k.number, t.col, "expected a number");
  if (n == 0 || n > max)
    parse_error(k.number, t.col, "'" + k.key + "' must be between 1 and " + std::to_string(max));
  return n;
}

void check_format(const std::vector<Line>& lines) {
  if (lines.empty()) parse_error(1, 1, "empty input");
  auto k = expect_key_line(lines[0]);
  if (k.key != "format") parse_error(k.number, k.key_col, "first line must be 'format: 1'");
  if (k.values.size() != 1 || k.values[0].text != "1")
    parse_error(k.number, k.values.empty() ? k.key_col : k.values[0].col, "unsupported format version");
}

class NameTable {
 public:
  NameTable(std::vector<std::string> names, std::string what) : names_(std::move(names)), what_(std::move(what)) {}
  std::size_t resolve(std::size_t line, const Token& t) const {
    auto it = std::find(names_.begin(), names_.end(), t.text);
    if (it == names_.end()) parse_error(line, t.col, "unknown " + what_ + " '" + t.text + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::string what_;
};

std::vector<std::string> name_list(const std::optional<KeyLine>& k, std::size_t n, const std::string& what) {
  std::vector<std::string> out;
  if (!k) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }
  if (k->values.size() != n)
    parse_error(k->number, k->key_col,
                "expected " + std::to_string(n) + " " + what + " names, found " + std::to_string(k->values.size()));
  std::set<std::string> seen;
  for (const auto& t : k->values) {
    if (t.text == "->" || t.text == "." || t.text.find(':') != std::string::npos)
      parse_error(k->number, t.col, "'" + t.text + "' cannot be used as a name");
    if (!seen.insert(t.text).second) parse_error(k->number, t.col, "duplicate " + what + " name '" + t.text + "'");
    out.push_back(t.text);
  }
  return out;
}

// Reads `n` table rows after the key line at index i; advances i past them.
std::vector<Line> table_rows(const std::vector<Line>& lines, std::size_t& i, const KeyLine& k, std::size_t n) {
  if (!k.values.empty()) parse_error(k.number, k.values[0].col, "table rows go on the following lines");
  std::vector<Line> rows;
  for (std::size_t r = 0; r < n; ++r) {
    if (i + 1 >= lines.size()) parse_error(k.number, k.key_col, "expected " + std::to_string(n) + " table rows");
    const Line& row = lines[++i];
    if (row.tokens.size() != n)
      parse_error(row.number, row.tokens.front().col,
                  "expected " + std::to_string(n) + " entries, found " + std::to_string(row.tokens.size()));
    rows.push_back(row);
  }
  return rows;
}

void check_name(const std::string& s, const std::string& what) {
  bool ok = !s.empty() && s != "->" && s != "." && s.find(':') == std::string::npos &&
            s.find('#') == std::string::npos &&
            std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  require(ok, ErrorKind::InvalidArgument, "cannot serialize " + what + " name '" + s + "'");
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

std::string field_spec(const Field& f) { return f.is_prime() ? "F " + std::to_string(f.characteristic()) : "Q"; }

SystemFile parse_system(std::string_view text) {
  auto lines = logical_lines(text);
  check_format(lines);
  std::map<std::string, KeyLine> keys;
  std::vector<Line> mult_rows;
  std::map<std::string, KeyLine> theta_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    KeyLine k = expect_key_line(lines[i]);
    if (k.key.rfind("theta ", 0) == 0) {
      std::string elem = k.key.substr(6);
      if (!theta_lines.emplace(elem, k).second) parse_error(k.number, k.key_col, "second theta line for '" + elem + "'");
      continue;
    }
    static const std::set<std::string> known = {"field", "semigroup", "names", "mult", "star", "space", "points"};
    if (!known.count(k.key)) parse_error(k.number, k.key_col, "unknown key '" + k.key + "'");
    if (keys.count(k.key)) parse_error(k.number, k.key_col, "duplicate key '" + k.key + "'");
    if (k.key == "mult") {
      auto it = keys.find("semigroup");
      if (it == keys.end()) parse_error(k.number, k.key_col, "'semigroup' must come before 'mult'");
      mult_rows = table_rows(lines, i, k, parse_count(it->second, 4096));
    }
    keys.emplace(k.key, k);
  }
  auto get = [&](const std::string& key) -> std::optional<KeyLine> {
    auto it = keys.find(key);
    return it == keys.end() ? std::nullopt : std::optional<KeyLine>(it->second);
  };
  auto need = [&](const std::string& key) {
    auto k = get(key);
    if (!k) parse_error(lines.back().number, 1, "missing '" + key + "' line");
    return *k;
  };
  SystemFile out{std::nullopt, SystemSpec{InverseSemigroup(1, {0}, {0}), {}, {}}};
  if (auto f = get("field")) {
    std::string spec;
    for (const auto& t : f->values) spec += t.text + " ";
    try {
      out.field = Field::parse(spec);
    } catch (const Error& e) {
      parse_error(f->number, f->values.empty() ? f->key_col : f->values[0].col, e.what());
    }
  }
  KeyLine sg = need("semigroup");
  std::size_t n = parse_count(sg, 4096);
  NameTable elems(name_list(get("names"), n, "element"), "element");
  need("mult");
  std::vector<std::size_t> mult;
  for (const auto& row : mult_rows)
    for (const auto& t : row.tokens) mult.push_back(elems.resolve(row.number, t));
  KeyLine st = need("star");
  if (st.values.size() != n) parse_error(st.number, st.key_col, "star needs " + std::to_string(n) + " entries");
  std::vector<std::size_t> star;
  for (const auto& t : st.values) star.push_back(elems.resolve(st.number, t));
  KeyLine sp = need("space");
  std::size_t m = parse_count(sp, 4096);
  NameTable points(name_list(get("points"), m, "point"), "point");
  std::vector<PartialBijection> theta;
  for (std::size_t s = 0; s < n; ++s) {
    auto it = theta_lines.find(elems.names()[s]);
    if (it == theta_lines.end()) parse_error(sg.number, sg.key_col, "no theta line for element '" + elems.names()[s] + "'");
    const KeyLine& k = it->second;
    auto arrow = std::find_if(k.values.begin(), k.values.end(), [](const Token& t) { return t.text == "->"; });
    if (arrow == k.values.end()) parse_error(k.number, k.key_col, "theta line needs 'domain -> image'");
    std::vector<Token> dom(k.values.begin(), arrow), img(arrow + 1, k.values.end());
    if (dom.size() != img.size()) parse_error(k.number, arrow->col, "domain and image lists differ in length");
    std::vector<std::size_t> table(m, npos);
    std::set<std::size_t> used;
    for (std::size_t j = 0; j < dom.size(); ++j) {
      std::size_t x = points.resolve(k.number, dom[j]), y = points.resolve(k.number, img[j]);
      if (table[x] != npos) parse_error(k.number, dom[j].col, "point '" + dom[j].text + "' listed twice");
      if (!used.insert(y).second) parse_error(k.number, img[j].col, "theta is not injective at '" + img[j].text + "'");
      table[x] = y;
    }
    theta.emplace_back(std::move(table));
  }
  for (const auto& [name, k] : theta_lines)
    if (std::find(elems.names().begin(), elems.names().end(), name) == elems.names().end())
      parse_error(k.number, k.key_col, "theta line for unknown element '" + name + "'");
  out.spec = SystemSpec{InverseSemigroup(n, std::move(mult), std::move(star), elems.names()), points.names(),
                        std::move(theta)};
  return out;
}

GroupoidFile parse_groupoid(std::string_view text) {
  auto lines = logical_lines(text);
  check_format(lines);
  std::map<std::string, KeyLine> keys;
  std::vector<Line> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    KeyLine k = expect_key_line(lines[i]);
    static const std::set<std::string> known = {"field", "groupoid", "names", "units", "d", "r", "compose"};
    if (!known.count(k.key)) parse_error(k.number, k.key_col, "unknown key '" + k.key + "'");
    if (keys.count(k.key)) parse_error(k.number, k.key_col, "duplicate key '" + k.key + "'");
    if (k.key == "compose") {
      auto it = keys.find("groupoid");
      if (it == keys.end()) parse_error(k.number, k.key_col, "'groupoid' must come before 'compose'");
      rows = table_rows(lines, i, k, parse_count(it->second, 64));
    }
    keys.emplace(k.key, k);
  }
  auto get = [&](const std::string& key) -> std::optional<KeyLine> {
    auto it = keys.find(key);
    return it == keys.end() ? std::nullopt : std::optional<KeyLine>(it->second);
  };
  auto need = [&](const std::string& key) {
    auto k = get(key);
    if (!k) parse_error(lines.back().number, 1, "missing '" + key + "' line");
    return *k;
  };
  std::optional<Field> field;
  if (auto f = get("field")) {
    std::string spec;
    for (const auto& t : f->values) spec += t.text + " ";
    try {
      field = Field::parse(spec);
    } catch (const Error& e) {
      parse_error(f->number, f->values.empty() ? f->key_col : f->values[0].col, e.what());
    }
  }
  KeyLine gk = need("groupoid");
  std::size_t n = parse_count(gk, 64);
  NameTable elems(name_list(get("names"), n, "element"), "element");
  KeyLine uk = need("units");
  std::vector<std::size_t> units;
  for (const auto& t : uk.values) units.push_back(elems.resolve(uk.number, t));
  auto per_element = [&](const std::string& key) {
    KeyLine k = need(key);
    if (k.values.size() != n) parse_error(k.number, k.key_col, "'" + key + "' needs " + std::to_string(n) + " entries");
    std::vector<std::size_t> out;
    for (const auto& t : k.values) out.push_back(elems.resolve(k.number, t));
    return out;
  };
  auto d = per_element("d");
  auto r = per_element("r");
  need("compose");
  std::vector<std::size_t> compose;
  for (const auto& row : rows)
    for (const auto& t : row.tokens) compose.push_back(t.text == "." ? npos : elems.resolve(row.number, t));
  return GroupoidFile{field, FiniteGroupoid(elems.names(), std::move(units), std::move(d), std::move(r),
                                            std::move(compose))};
}

std::string serialize_system(const SystemFile& file) {
  const SystemSpec& spec = file.spec;
  const InverseSemigroup& s = spec.semigroup;
  for (const auto& name : s.names()) check_name(name, "element");
  for (const auto& name : spec.points) check_name(name, "point");
  std::ostringstream out;
  out << "format: 1\n";
  if (file.field) out << "field: " << field_spec(*file.field) << "\n";
  out << "semigroup: " << s.size() << "\n";
  out << "names: " << join(s.names()) << "\n";
  out << "mult:\n";
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < s.size(); ++b) row.push_back(s.name(s.mul(a, b)));
    out << "  " << join(row) << "\n";
  }
  std::vector<std::string> star;
  for (std::size_t a = 0; a < s.size(); ++a) star.push_back(s.name(s.star(a)));
  out << "star: " << join(star) << "\n";
  out << "space: " << spec.points.size() << "\n";
  out << "points: " << join(spec.points) << "\n";
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::vector<std::string> dom, img;
    for (auto x : spec.theta[a].domain()) {
      dom.push_back(spec.points[x]);
      img.push_back(spec.points[spec.theta[a](x)]);
    }
    out << "theta " << s.name(a) << ":" << (dom.empty() ? "" : " " + join(dom)) << " ->"
        << (img.empty() ? "" : " " + join(img)) << "\n";
  }
  return out.str();
}

std::string serialize_groupoid(const GroupoidFile& file) {
  const FiniteGroupoid& g = file.groupoid;
  for (const auto& name : g.labels()) check_name(name, "element");
  auto names = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(g.label(i));
    return join(out);
  };
  std::ostringstream out;
  out << "format: 1\n";
  if (file.field) out << "field: " << field_spec(*file.field) << "\n";
  out << "groupoid: " << g.size() << "\n";
  out << "names: " << join(g.labels()) << "\n";
  out << "units: " << names(g.units()) << "\n";
  out << "d: " << names(g.d_table()) << "\n";
  out << "r: " << names(g.r_table()) << "\n";
  out << "compose:\n";
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < g.size(); ++b) row.push_back(g.compose(a, b) == npos ? "." : g.label(g.compose(a, b)));
    out << "  " << join(row) << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_groupoid(std::string_view text) {
  auto lines = logical_lines(text);
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (auto k = as_key_line(lines[i]); k && k->key != "field") return k->key == "groupoid";
  return false;
}

Vec parse_element(const CrossedProduct& cp, std::string_view text) {
  const Field& f = cp.field();
  const AmpleSystem& sys = cp.system();
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), ErrorKind::Parse, "empty generator");
  std::vector<std::pair<bool, std::string>> terms;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && i > start)) {
      require(i > start, ErrorKind::Parse, "empty term in generator '" + s + "'");
      terms.emplace_back(negative, s.substr(start, i - start));
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  Vec out = f.zero_vec(cp.dim());
  for (auto& [neg, body] : terms) {
    Scalar c = f.one();
    std::string target = body;
    if (auto dot = body.find(kMiddleDot); dot != std::string::npos) {
      c = f.parse_scalar(body.substr(0, dot));
      target = body.substr(dot + kMiddleDot.size());
    } else if (auto star = body.find('*'); star != std::string::npos && star > 0 &&
               std::all_of(body.begin(), body.begin() + static_cast<long>(star),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; })) {
      c = f.parse_scalar(body.substr(0, star));
      target = body.substr(star + 1);
    }
    if (neg) c = f.neg(c);
    auto find_elem = [&](const std::string& name) {
      std::size_t e = sys.semigroup().find(name);
      require(e < sys.semigroup().size(), ErrorKind::Parse, "unknown element '" + name + "' in generator");
      return e;
    };
    Vec term;
    if (target.rfind(std::string(kDelta) + "_", 0) == 0 || target.rfind("D_", 0) == 0) {
      std::size_t e = find_elem(target.substr(target[0] == 'D' ? 2 : kDelta.size() + 1));
      term = cp.element(e, indicator(f, sys.space_size(), sys.theta(e).range()));
    } else {
      auto colon = target.find(':');
      require(colon != std::string::npos, ErrorKind::Parse, "term '" + body + "' is not of the form point:element");
      std::string point = target.substr(0, colon);
      std::size_t y = sys.find_point(point);
      require(y < sys.space_size(), ErrorKind::Parse, "unknown point '" + point + "' in generator");
      std::size_t e = find_elem(target.substr(colon + 1));
      require(sys.in_range(e, y), ErrorKind::InvalidArgument,
              "point '" + point + "' is outside the range of '" + sys.semigroup().name(e) + "'");
      term = cp.delta(y, e);
    }
    vec_axpy(f, out, c, term);
  }
  return out;
}

}  // namespace ehalg
