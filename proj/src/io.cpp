#include "slie/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>
#include <utility>

namespace slie {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

Scalar parse_rational(const std::string& tok, std::size_t line) {
  static const std::regex re(R"(\d+(/\d+)?)");
  if (!std::regex_match(tok, re)) throw ParseError(line, "malformed rational '" + tok + "'");
  const auto slash = tok.find('/');
  if (slash != std::string::npos && tok.find_first_not_of('0', slash + 1) == std::string::npos)
    throw ParseError(line, "zero denominator in '" + tok + "'");
  Scalar q(tok);
  q.canonicalize();
  return q;
}

// sum of [sign] [rational] name terms, or the literal 0
Vector parse_combination(const SuperAlgebra& a, std::string_view text, std::size_t line) {
  Vector v = zero_vector(a.size());
  const std::string s = trim(text);
  if (s == "0") return v;
  if (s.empty()) throw ParseError(line, "empty right-hand side");
  std::size_t p = 0;
  bool expect_term = true;
  int sign = 1;
  auto skip = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  while (true) {
    skip();
    if (p >= s.size()) break;
    if (s[p] == '+' || s[p] == '-') {
      if (s[p] == '-') sign = -sign;
      ++p;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw ParseError(line, "expected '+' or '-' before '" + s.substr(p) + "'");
    Scalar coef(1);
    if (std::isdigit(static_cast<unsigned char>(s[p]))) {
      std::size_t q = p;
      while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '/')) ++q;
      coef = parse_rational(s.substr(p, q - p), line);
      p = q;
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        skip();
      }
    }
    std::size_t q = p;
    while (q < s.size() && is_name_char(s[q])) ++q;
    if (q == p) throw ParseError(line, "expected a basis name in '" + s + "'");
    const std::string name = s.substr(p, q - p);
    auto idx = a.index_of(name);
    if (!idx) throw ParseError(line, "unknown basis name '" + name + "'");
    v[*idx] += sign * coef;
    p = q;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError(line, "dangling sign in '" + s + "'");
  return v;
}

}  // namespace

SuperAlgebra parse_algebra(std::string_view doc, ParseMode mode) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t no = 0, start = 0;
    while (start <= doc.size()) {
      auto end = doc.find('\n', start);
      if (end == std::string_view::npos) end = doc.size();
      ++no;
      auto raw = doc.substr(start, end - start);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      auto t = trim(raw);
      if (!t.empty()) lines.emplace_back(no, std::move(t));
      start = end + 1;
    }
  }

  auto header = [&](std::size_t k, const std::string& keyword) {
    if (k >= lines.size()) throw ParseError(0, "missing '" + keyword + "' line");
    auto w = words(lines[k].second);
    if (w.empty() || w.front() != keyword)
      throw ParseError(lines[k].first, "expected '" + keyword + "' line");
    w.erase(w.begin());
    return w;
  };
  auto name = header(0, "superalgebra");
  if (name.size() != 1) throw ParseError(lines[0].first, "expected exactly one algebra name");
  auto even = header(1, "even");
  auto odd = header(2, "odd");
  for (const auto& list : {even, odd})
    for (const auto& n : list)
      if (n.empty() || !std::all_of(n.begin(), n.end(), is_name_char) ||
          std::isdigit(static_cast<unsigned char>(n.front())))
        throw ParseError(0, "invalid basis name '" + n + "'");

  SuperAlgebra shell;
  try {
    shell = SuperAlgebra(name.front(), even, odd);
  } catch (const std::exception& ex) {
    throw ParseError(lines[std::min<std::size_t>(2, lines.size() - 1)].first, ex.what());
  }

  static const std::regex bracket(R"(\[\s*([^,\s\]]+)\s*,\s*([^,\s\]]+)\s*\]\s*=(.*))");
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Vector, std::size_t>> given;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const auto& [no, text] = lines[k];
    std::smatch m;
    if (!std::regex_match(text, m, bracket)) throw ParseError(no, "expected '[a,b] = ...'");
    auto i = shell.index_of(m[1]);
    auto j = shell.index_of(m[2]);
    if (!i) throw ParseError(no, "unknown basis name '" + m[1].str() + "'");
    if (!j) throw ParseError(no, "unknown basis name '" + m[2].str() + "'");
    auto value = parse_combination(shell, m[3].str(), no);
    if (given.count({*i, *j})) throw ParseError(no, "duplicate bracket [" + m[1].str() + "," + m[2].str() + "]");
    if (*i == *j && shell.parity(*i) == Parity::Even && !is_zero(value))
      throw ParseError(no, "skew-symmetry: [" + m[1].str() + "," + m[1].str() + "] must vanish for even " + m[1].str());
    if (auto mirror = given.find({*j, *i}); mirror != given.end() && *i != *j) {
      const int sign = -koszul_sign(shell.parity(*i), shell.parity(*j));
      Vector expect = mirror->second.first;
      for (auto& c : expect) c *= sign;
      if (expect != value)
        throw ParseError(no, "skew-symmetry: [" + m[1].str() + "," + m[2].str() + "] inconsistent with line " +
                                 std::to_string(mirror->second.second));
    }
    given[{*i, *j}] = {std::move(value), no};
  }

  std::vector<SuperAlgebra::Entry> entries;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> line_of;
  for (const auto& [key, val] : given) {
    entries.push_back({key.first, key.second, val.first});
    line_of[key] = val.second;
  }
  auto a = SuperAlgebra::from_brackets(name.front(), even, odd, entries);

  if (mode == ParseMode::Strict) {
    auto violations = validate(a);
    if (!violations.empty()) {
      const auto& v = violations.front();
      std::size_t no = 0;
      if (v.basis.size() == 2) {
        auto it = line_of.find({v.basis[0] - 1, v.basis[1] - 1});
        if (it == line_of.end()) it = line_of.find({v.basis[1] - 1, v.basis[0] - 1});
        if (it != line_of.end()) no = it->second;
      }
      throw ParseError(no, v.axiom + ": " + v.detail);
    }
  }
  return a;
}

std::string print_algebra(const SuperAlgebra& a) {
  std::ostringstream out;
  const auto& names = a.basis_names();
  out << "superalgebra " << a.name() << "\neven";
  for (std::size_t i = 0; i < a.dim().even; ++i) out << ' ' << names[i];
  out << "\nodd";
  for (std::size_t i = a.dim().even; i < a.size(); ++i) out << ' ' << names[i];
  out << '\n';
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) {
      const auto& v = a.structure(i, j);
      if (is_zero(v)) continue;
      out << '[' << names[i] << ',' << names[j] << "] = " << format_vector(a, v) << '\n';
    }
  return out.str();
}

Vector parse_vector(const SuperAlgebra& a, std::string_view text) {
  const std::string s = trim(text);
  if (std::any_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
    return parse_combination(a, s, 0);
  Vector v;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    for (const auto& w : words(tok)) {
      bool neg = false;
      std::string body = w;
      if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        neg = body.front() == '-';
        body.erase(body.begin());
      }
      Scalar q = parse_rational(body, 0);
      v.push_back(neg ? Scalar(-q) : q);
    }
  }
  if (v.size() != a.size())
    throw ParseError(0, "vector has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(a.size()));
  return v;
}

}  // namespace slie
