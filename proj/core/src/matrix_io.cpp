#include "kplab/matrix_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "kplab/errors.hpp"

namespace kplab {

namespace {

struct Token {
  std::string text;
  int line;    // 1-based
  int column;  // 1-based
};

// Lines of tokens with comments stripped and blank lines removed.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      toks.push_back({std::string(line.substr(start, i - start)), lineno,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) {
      lines.push_back(std::move(toks));
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  return lines;
}

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

ApInt parse_integer(std::string_view s, const Token& tok) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("invalid entry '" + tok.text + "'", tok.line, tok.column);
  }
  return ApInt(std::string(s), 10);
}

ApRat parse_entry(const Token& tok) {
  const std::string& s = tok.text;
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    return ApRat(parse_integer(s, tok));
  }
  const ApInt num = parse_integer(std::string_view(s).substr(0, slash), tok);
  const std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("invalid entry '" + tok.text + "'", tok.line, tok.column);
  }
  const ApInt den(std::string(den_text), 10);
  if (den == 0) {
    throw ParseError("zero denominator in '" + tok.text + "'", tok.line, tok.column);
  }
  ApRat q(num, den);
  q.canonicalize();
  return q;
}

ExactMatrix rows_to_matrix(const std::vector<std::vector<Token>>& rows, int order) {
  ExactMatrix out(order);
  for (int i = 0; i < order; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != order) {
      throw ParseError("row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(order),
                       row.front().line, row.front().column);
    }
    for (int j = 0; j < order; ++j) {
      out.at(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

ExactMatrix parse_structured(const std::vector<std::vector<Token>>& lines) {
  const auto& header = lines.front();
  if (header.size() != 2) {
    throw ParseError("expected 'order: <integer>'", header.front().line,
                     header.front().column);
  }
  const Token& value = header[1];
  if (!all_digits(value.text)) {
    throw ParseError("invalid order '" + value.text + "'", value.line, value.column);
  }
  const long order = std::stol(value.text);
  if (order < 1) {
    throw ParseError("order must be >= 1", value.line, value.column);
  }
  if (lines.size() < 2 || lines[1].size() != 1 || lines[1][0].text != "rows:") {
    const Token& tok = lines.size() < 2 ? header.front() : lines[1][0];
    throw ParseError("expected 'rows:' after the order field", tok.line, tok.column);
  }
  const std::vector<std::vector<Token>> rows(lines.begin() + 2, lines.end());
  if (static_cast<long>(rows.size()) != order) {
    const Token& tok = rows.empty() ? lines[1][0] : rows.back().front();
    throw ParseError("expected " + std::to_string(order) + " rows, found " +
                         std::to_string(rows.size()),
                     tok.line, tok.column);
  }
  return rows_to_matrix(rows, static_cast<int>(order));
}

}  // namespace

std::string to_plain_text(const ExactMatrix& A) {
  std::ostringstream out;
  for (int i = 0; i < A.order(); ++i) {
    for (int j = 0; j < A.order(); ++j) {
      if (j > 0) {
        out << ' ';
      }
      out << A.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_structured_text(const ExactMatrix& A) {
  std::ostringstream out;
  out << "order: " << A.order() << "\nrows:\n" << to_plain_text(A);
  return out.str();
}

ExactMatrix parse_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) {
    throw ParseError("no matrix data", 1, 1);
  }
  if (lines.front().front().text == "order:") {
    return parse_structured(lines);
  }
  const int order = static_cast<int>(lines.front().size());
  if (static_cast<int>(lines.size()) != order) {
    const Token& tok = lines.back().front();
    throw ParseError("expected " + std::to_string(order) + " rows, found " +
                         std::to_string(lines.size()),
                     tok.line, tok.column);
  }
  return rows_to_matrix(lines, order);
}

}  // namespace kplab
