#pragma once

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "modlie/liealg.hpp"

namespace modlie {

/// Line-oriented algebra definition:
///
///     algebra sl2
///     field F 5            # or: field Q
///     basis e f h
///     bracket e f = h
///     bracket h e = 2*e
///     bracket h f = -2*f
///
/// `#` starts a comment. Unlisted pairs bracket to zero.
struct AlgebraFile {
  std::string name;
  LieAlgebra algebra;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message, {line});
}

/// `0` or signed terms `[coeff *] id` joined by + and -.
inline Vec parse_rhs(std::string_view text, const Field& field, const std::map<std::string, std::size_t>& index,
                     std::size_t line) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Vec out = zero_vector(field, index.size());
  if (s == "0") return out;
  if (s.empty()) parse_fail(line, "empty right-hand side");
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      parse_fail(line, "expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    std::string coeff = "1";
    std::string id = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = term.substr(0, star);
      id = term.substr(star + 1);
    }
    if (!is_identifier(id)) parse_fail(line, "expected a basis name in term '" + term + "'");
    const auto it = index.find(id);
    if (it == index.end()) parse_fail(line, "unknown basis element '" + id + "'");
    Scalar c = field.zero();
    try {
      c = field.parse(coeff);
    } catch (const Error& e) {
      parse_fail(line, "bad coefficient '" + coeff + "'");
    }
    out[it->second] += negative ? -c : c;
  }
  return out;
}

}  // namespace detail

inline AlgebraFile parse_algebra_file(std::string_view text) {
  std::string name;
  std::optional<Field> field;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<BracketEntry> table;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];
    if (keyword == "algebra") {
      if (tokens.size() != 2) detail::parse_fail(lineno, "expected 'algebra <name>'");
      if (!name.empty()) detail::parse_fail(lineno, "duplicate 'algebra' line");
      name = tokens[1];
    } else if (keyword == "field") {
      if (field) detail::parse_fail(lineno, "duplicate 'field' line");
      if (tokens.size() == 2 && tokens[1] == "Q") {
        field = Field::rationals();
      } else if (tokens.size() == 3 && tokens[1] == "F") {
        const std::string& ptext = tokens[2];
        if (ptext.empty() || ptext.size() > 10 ||
            ptext.find_first_not_of("0123456789") != std::string::npos) {
          detail::parse_fail(lineno, "bad characteristic '" + ptext + "'");
        }
        try {
          field = Field::prime(std::stoull(ptext));
        } catch (const Error& e) {
          detail::parse_fail(lineno, e.what());
        }
      } else {
        detail::parse_fail(lineno, "expected 'field Q' or 'field F <p>'");
      }
    } else if (keyword == "basis") {
      if (!labels.empty()) detail::parse_fail(lineno, "duplicate 'basis' line");
      if (tokens.size() < 2) detail::parse_fail(lineno, "empty basis");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!detail::is_identifier(tokens[i])) detail::parse_fail(lineno, "bad basis name '" + tokens[i] + "'");
        if (!index.emplace(tokens[i], labels.size()).second) {
          detail::parse_fail(lineno, "duplicate basis name '" + tokens[i] + "'");
        }
        labels.push_back(tokens[i]);
      }
    } else if (keyword == "bracket") {
      if (!field || labels.empty()) detail::parse_fail(lineno, "'bracket' before 'field' and 'basis'");
      const auto eq = line.find('=');
      if (eq == std::string::npos) detail::parse_fail(lineno, "expected 'bracket <id> <id> = <rhs>'");
      const auto lhs = detail::split_ws(line.substr(0, eq));
      if (lhs.size() != 3) detail::parse_fail(lineno, "expected two basis names before '='");
      const auto a = index.find(lhs[1]);
      const auto b = index.find(lhs[2]);
      if (a == index.end()) detail::parse_fail(lineno, "unknown basis element '" + lhs[1] + "'");
      if (b == index.end()) detail::parse_fail(lineno, "unknown basis element '" + lhs[2] + "'");
      Vec value = detail::parse_rhs(line.substr(eq + 1), *field, index, lineno);
      if (a->second == b->second) {
        if (!is_zero(value)) detail::parse_fail(lineno, "[" + lhs[1] + "," + lhs[1] + "] must be 0");
        continue;
      }
      const auto key = std::minmax(a->second, b->second);
      if (!seen_pairs.insert(key).second) {
        detail::parse_fail(lineno, "pair (" + lhs[1] + "," + lhs[2] + ") bracketed twice");
      }
      table.push_back({a->second, b->second, std::move(value)});
    } else {
      detail::parse_fail(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!field) detail::parse_fail(lineno, "missing 'field' line");
  if (labels.empty()) detail::parse_fail(lineno, "missing 'basis' line");
  if (name.empty()) name = "unnamed";
  return {name, LieAlgebra::from_table(*field, std::move(labels), table)};
}

inline std::string format_combination(const LieAlgebra& L, const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Scalar c = v[k];
    bool negative = false;
    if (!L.field().is_prime() && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!c.is_one()) out += c.to_string() + "*";
    out += L.labels()[k];
  }
  return out.empty() ? "0" : out;
}

/// Inverse of parse_algebra_file: nonzero brackets for pairs i < j.
inline std::string emit_algebra_file(const LieAlgebra& L, std::string_view name) {
  std::ostringstream out;
  out << "algebra " << name << "\n";
  out << "field " << (L.field().is_prime() ? "F " + std::to_string(L.field().characteristic()) : "Q") << "\n";
  out << "basis";
  for (const auto& l : L.labels()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vec v = L.bracket_basis(i, j);
      if (is_zero(v)) continue;
      out << "bracket " << L.labels()[i] << " " << L.labels()[j] << " = " << format_combination(L, v) << "\n";
    }
  }
  return out.str();
}

/// Matrix literal `[[a,b],[c,d]]` with scalar syntax of the field.
inline Matrix parse_matrix(std::string_view text, const Field& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
    throw Error(ErrorKind::ParseError, "matrix must look like [[a,b],[c,d]]");
  }
  const std::string body = s.substr(2, s.size() - 4);
  std::vector<Vec> rows;
  std::size_t start = 0;
  while (true) {
    const auto end = body.find("],[", start);
    const std::string row = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
    Vec r;
    std::size_t p = 0;
    while (p <= row.size()) {
      const auto comma = row.find(',', p);
      const std::string tok = row.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
      r.push_back(field.parse(tok));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(r));
    if (end == std::string::npos) break;
    start = end + 3;
  }
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix rows");
  }
  return Matrix::from_rows(field, cols, rows);
}

/// One matrix per non-comment line, either bare (basis order) or `label = [[...]]`.
inline std::vector<Matrix> parse_matrix_list(std::string_view text, const LieAlgebra& L) {
  std::vector<std::optional<Matrix>> slots(L.dim());
  std::vector<Matrix> ordered;
  bool labelled = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (detail::split_ws(line).empty()) continue;
    try {
      if (const auto eq = line.find('='); eq != std::string::npos) {
        const auto lhs = detail::split_ws(line.substr(0, eq));
        if (lhs.size() != 1) detail::parse_fail(lineno, "expected '<label> = [[...]]'");
        const auto idx = L.index_of(lhs[0]);
        if (!idx) detail::parse_fail(lineno, "unknown basis element '" + lhs[0] + "'");
        if (slots[*idx]) detail::parse_fail(lineno, "matrix for '" + lhs[0] + "' given twice");
        slots[*idx] = parse_matrix(line.substr(eq + 1), L.field());
        labelled = true;
      } else {
        ordered.push_back(parse_matrix(line, L.field()));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError && e.witness().empty()) detail::parse_fail(lineno, e.what());
      throw;
    }
  }
  if (labelled && !ordered.empty()) detail::parse_fail(lineno, "mix of labelled and unlabelled matrices");
  if (!labelled) return ordered;
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) detail::parse_fail(lineno, "no matrix for '" + L.labels()[i] + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

}  // namespace modlie
