#include "afflag/element_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace afflag {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  s = trim(s);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::vector<Int> parse_int_list(std::string_view s) {
  std::vector<Int> out;
  s = trim(s);
  if (s.empty()) return out;
  for (auto part : split(s, ',')) out.push_back(parse_int(part));
  return out;
}

}  // namespace

AffinePerm parse_element(int n, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty element text");
  if (s == "id" || s == "e") return AffinePerm::identity(n);
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("window form must end with ']'");
    std::vector<Int> window = parse_int_list(s.substr(1, s.size() - 2));
    if (static_cast<int>(window.size()) != n)
      throw std::invalid_argument("window invariant violated: expected " + std::to_string(n) +
                                  " entries, got " + std::to_string(window.size()));
    return AffinePerm(std::move(window));
  }
  std::vector<int> letters;
  if (s.find('s') != std::string_view::npos) {
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || tok[0] != 's')
        throw std::invalid_argument("malformed word token '" + tok + "', expected s<index>");
      letters.push_back(static_cast<int>(parse_int(std::string_view(tok).substr(1))));
    }
  } else {
    for (Int l : parse_int_list(s)) letters.push_back(static_cast<int>(l));
  }
  for (int l : letters)
    if (l < 0 || l >= n)
      throw std::invalid_argument("word letter " + std::to_string(l) + " out of range 0.." +
                                  std::to_string(n - 1));
  return AffinePerm::from_word(n, letters);
}

std::vector<int> parse_partition(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced partition brackets");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  for (Int p : parse_int_list(s)) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    parts.push_back(static_cast<int>(p));
  }
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  return parts;
}

std::string window_string(const AffinePerm& w) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.window().size(); ++i) os << (i ? "," : "") << w.window()[i];
  os << ']';
  return os.str();
}

std::string word_string(const AffinePerm& w) {
  if (w.is_identity()) return "id";
  std::ostringstream os;
  const auto word = w.canonical_reduced_word();
  for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << 's' << word[i];
  return os.str();
}

std::string reflection_string(const Reflection& t) {
  std::ostringstream os;
  os << "t(" << t.a << "," << t.b << ")";
  return os.str();
}

std::string weight_string(const Weight& lambda) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= lambda.rank(); ++i) os << (i > 1 ? "," : "") << lambda.coord(i);
  os << ')';
  return os.str();
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first) os << '*';
    os << 'y' << v + 1;
    if (m[v] > 1) os << '^' << m[v];
    first = false;
  }
  return os.str();
}

// Appends "c*m" style terms with leading sign handling.
void append_term(std::ostringstream& os, bool first, Int c, const std::string& body) {
  Int abs = c < 0 ? -c : c;
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  if (abs != 1 || body.empty()) {
    os << abs;
    if (!body.empty()) os << '*';
  }
  os << body;
}

}  // namespace

std::string spoly_string(const SPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    append_term(os, first, c, monomial_string(m));
    first = false;
  }
  return os.str();
}

std::string nilcox_string(const NilCoxElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    append_term(os, first, c, "A" + window_string(w));
    first = false;
  }
  return os.str();
}

std::string partition_string(const std::vector<int>& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string symfunc_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    append_term(os, first, c, "m" + partition_string(p));
    first = false;
  }
  return os.str();
}

}  // namespace afflag
