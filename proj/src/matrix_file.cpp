#include "maxalg/matrix_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace maxalg {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Non-empty lines of the file, each split into tokens with 1-based positions.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      const std::size_t j = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({std::string(line.substr(j, i - j)), line_no, j + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& what) { throw ParseError(what, t.line, t.column); }

Rational exact_number(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const DomainError& e) {
    fail(t, e.what());
  }
}

double float_number(const Token& t) {
  if (t.text.find('/') != std::string::npos) return exact_number(t).get_d();
  double v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) fail(t, "malformed number '" + t.text + "'");
  if (std::isnan(v)) fail(t, "NaN entry");
  if (std::isinf(v)) fail(t, "infinite entry");
  return v;
}

template <class S>
S entry(const Token& t, bool signed_ok = false) {
  if constexpr (Num<S>::additive) {
    using E = std::decay_t<decltype(std::declval<S>().exponent())>;
    if (t.text == "-inf") return S();
    if constexpr (Num<E>::exact) {
      return S(exact_number(t));
    } else {
      return S(float_number(t));
    }
  } else {
    if (t.text == ".") return Num<S>::zero();
    S v;
    if constexpr (Num<S>::exact) {
      v = exact_number(t);
    } else {
      v = float_number(t);
    }
    if (!signed_ok && Num<S>::raw_less(v, Num<S>::zero())) fail(t, "negative entry '" + t.text + "' in max-times data");
    return v;
  }
}

struct Header {
  Domain domain;
  Mode mode;
  std::size_t n;
};

Header read_header(const std::vector<std::vector<Token>>& lines) {
  if (lines.empty()) throw ParseError("empty input, expected header", 1, 1);
  const auto& h = lines.front();
  if (h.size() != 3) fail(h.front(), "header must be '<maxtimes|maxplus> <n> <exact|float>'");
  Header out{};
  if (h[0].text == "maxtimes" || h[0].text == "max-times") {
    out.domain = Domain::MaxTimes;
  } else if (h[0].text == "maxplus" || h[0].text == "max-plus") {
    out.domain = Domain::MaxPlus;
  } else {
    fail(h[0], "unknown domain '" + h[0].text + "'");
  }
  const auto& nt = h[1].text;
  const auto res = std::from_chars(nt.data(), nt.data() + nt.size(), out.n);
  if (res.ec != std::errc() || res.ptr != nt.data() + nt.size()) fail(h[1], "bad dimension '" + nt + "'");
  if (h[2].text == "exact") {
    out.mode = Mode::Exact;
  } else if (h[2].text == "float") {
    out.mode = Mode::Float;
  } else {
    fail(h[2], "unknown mode '" + h[2].text + "'");
  }
  if (lines.size() - 1 != out.n) {
    const auto& last = lines.back().back();
    throw ParseError("expected " + std::to_string(out.n) + " rows, found " + std::to_string(lines.size() - 1),
                     last.line, last.column);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != out.n) {
      const auto& t = lines[i].size() > out.n ? lines[i][out.n] : lines[i].back();
      fail(t, "row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) + " entries, expected " +
                  std::to_string(out.n));
    }
  }
  return out;
}

template <class S>
Matrix<S> read_body(const std::vector<std::vector<Token>>& lines, std::size_t n, double tol) {
  Matrix<S> m(n, n, tol);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry<S>(lines[i + 1][j]);
  return m;
}

template <class S>
std::string body_text(const Matrix<S>& m) {
  std::vector<std::vector<std::string>> cells(m.n());
  std::vector<std::size_t> width(m.n(), 0);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) {
      cells[i].push_back(entry_token(m(i, j)));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      out += cells[i][j];
      if (j + 1 < m.n()) out += std::string(width[j] - cells[i][j].size() + 1, ' ');
    }
    out += '\n';
  }
  return out;
}

MatrixFile parse_with(std::string_view text, std::optional<Mode> forced, double tol) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines);
  MatrixFile f;
  f.domain = h.domain;
  f.mode = forced.value_or(h.mode);
  const bool exact = f.mode == Mode::Exact;
  if (h.domain == Domain::MaxTimes) {
    if (exact) f.matrix = read_body<Rational>(lines, h.n, tol);
    else f.matrix = read_body<double>(lines, h.n, tol);
  } else {
    if (exact) f.matrix = read_body<ExactMaxPlus>(lines, h.n, tol);
    else f.matrix = read_body<FloatMaxPlus>(lines, h.n, tol);
  }
  return f;
}

}  // namespace

std::size_t MatrixFile::n() const {
  return std::visit([](const auto& m) { return m.n(); }, matrix);
}

MatrixFile parse_matrix(std::string_view text, double tol) { return parse_with(text, std::nullopt, tol); }

MatrixFile parse_matrix(std::string_view text, Mode mode, double tol) { return parse_with(text, mode, tol); }

std::string serialize_matrix(const MatrixFile& file) {
  std::ostringstream out;
  out << (file.domain == Domain::MaxTimes ? "maxtimes" : "maxplus") << ' ' << file.n() << ' '
      << (file.mode == Mode::Exact ? "exact" : "float") << '\n';
  out << std::visit([](const auto& m) { return body_text(m); }, file.matrix);
  return out.str();
}

AnyRealMatrix parse_real_matrix(std::string_view text, std::optional<Mode> mode) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines);
  if (h.domain != Domain::MaxTimes) fail(lines.front().front(), "real matrices use the maxtimes header");
  auto read = [&](auto tag) {
    using F = decltype(tag);
    RealMatrix<F> b(h.n, std::vector<F>(h.n));
    for (std::size_t i = 0; i < h.n; ++i)
      for (std::size_t j = 0; j < h.n; ++j) b[i][j] = entry<F>(lines[i + 1][j], true);
    return b;
  };
  if (mode.value_or(h.mode) == Mode::Exact) return read(Rational());
  return read(0.0);
}

}  // namespace maxalg
