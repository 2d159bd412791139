#include "inalg/problem.hpp"

#include <algorithm>
#include <cctype>

#include "inalg/io.hpp"

namespace inalg {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

struct Piece {
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Comma-separated pieces with their columns; empty pieces are dropped so a
/// trailing comma is harmless.
std::vector<Piece> split_commas(std::string_view s, std::size_t column) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::size_t off = start;
      auto piece = trim(s.substr(start, i - start), off);
      if (!piece.empty()) out.push_back({piece, column + off});
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void relocate(const ParseError& e, std::size_t line, std::size_t column) {
  throw ParseError(e.reason(), line, column + e.column() - 1);
}

std::int64_t parse_count(std::string_view s, std::size_t line, std::size_t column) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a nonnegative integer", line, column);
  if (s.size() > 15) throw ParseError("integer too large", line, column);
  return std::stoll(std::string(s));
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (i == text.size() || text[i] == '\n') {
        auto l = text.substr(start, i - start);
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        lines_.push_back(l);
        start = i + 1;
      }
  }

  ProblemFile parse() {
    ProblemFile p;
    bool have_block = false;
    std::optional<std::string_view> order_text;
    std::size_t order_line = 0, order_col = 0;
    struct PendingWeight {
      std::string_view text;
      std::size_t line, col;
      bool is_b;
    };
    std::vector<PendingWeight> weights;

    for (line_ = 0; line_ < lines_.size(); ++line_) {
      std::size_t off = 0;
      auto l = inalg::trim(strip_comment(lines_[line_]), off);
      std::size_t col = 1 + off;
      if (l.empty()) continue;
      auto [key, rest, rest_col] = keyword(l, col);
      if (key == "ring") {
        if (p.ring) fail("duplicate ring declaration", col);
        p.ring = parse_ring(rest, rest_col);
      } else if (key == "order") {
        if (order_text) fail("duplicate order declaration", col);
        if (rest.empty()) fail("missing order", rest_col);
        order_text = rest;
        order_line = line_ + 1;
        order_col = rest_col;
      } else if (key == "weight") {
        bool is_b = false;
        auto [which, tail, tail_col] = keyword(rest, rest_col);
        if (which == "a" || which == "b") {
          is_b = which == "b";
          rest = tail;
          rest_col = tail_col;
        }
        for (const auto& w : weights)
          if (w.is_b == is_b) fail("duplicate weight declaration", col);
        weights.push_back({rest, line_ + 1, rest_col, is_b});
      } else if (key == "ideal" || key == "algebra" || key == "pairs") {
        if (have_block) fail("only one generator block is allowed", col);
        if (!p.ring) fail("ring must be declared before the generator block", col);
        have_block = true;
        p.kind = key == "ideal" ? BlockKind::Ideal
                 : key == "algebra" ? BlockKind::Algebra
                                    : BlockKind::Pairs;
        if (!rest.empty()) {
          entries(p, rest, rest_col);
        } else {
          bool closed = false;
          while (++line_ < lines_.size()) {
            std::size_t body_off = 0;
            auto body = inalg::trim(strip_comment(lines_[line_]), body_off);
            std::size_t c = 1 + body_off;
            if (body.empty()) continue;
            if (body == "end") {
              closed = true;
              break;
            }
            entries(p, body, c);
          }
          if (!closed) {
            line_ = lines_.size() - 1;
            fail("block is not closed by `end`", 1);
          }
        }
      } else if (key == "cap") {
        p.cap = parse_count(rest, line_ + 1, rest_col);
      } else if (key == "dmax") {
        p.dmax = parse_count(rest, line_ + 1, rest_col);
      } else if (key == "jmax") {
        p.jmax = parse_count(rest, line_ + 1, rest_col);
      } else if (key == "freeness-bound") {
        p.freeness_bound = parse_count(rest, line_ + 1, rest_col);
      } else if (key == "fiber") {
        p.fiber = parse_rational(rest, line_ + 1, rest_col);
      } else {
        fail("unknown declaration `" + std::string(key) + "`", col);
      }
    }
    if (!p.ring) throw ParseError("missing ring declaration", lines_.size(), 1);
    if (!have_block) throw ParseError("missing generator block", lines_.size(), 1);
    if (order_text) {
      try {
        p.order = parse_order(*order_text, *p.ring);
      } catch (const ParseError& e) {
        relocate(e, order_line, order_col);
      }
    }
    for (const auto& w : weights) {
      auto a = parse_weight(w.text, w.line, w.col);
      if (a.size() != p.ring->nvars())
        throw ParseError("weight has " + std::to_string(a.size()) + " entries but the ring has " +
                             std::to_string(p.ring->nvars()) + " variables",
                         w.line, w.col);
      (w.is_b ? p.weight_b : p.weight_a) = std::move(a);
    }
    std::sort(p.gens.begin(), p.gens.end(),
              [](const Polynomial& f, const Polynomial& g) { return f.canonical_compare(g) < 0; });
    p.gens.erase(std::unique(p.gens.begin(), p.gens.end()), p.gens.end());
    std::sort(p.pairs.begin(), p.pairs.end());
    p.pairs.erase(std::unique(p.pairs.begin(), p.pairs.end()), p.pairs.end());
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t col) const {
    throw ParseError(what, line_ + 1, col);
  }

  static std::string_view strip_comment(std::string_view l) {
    auto h = l.find('#');
    return h == std::string_view::npos ? l : l.substr(0, h);
  }

  struct Split {
    std::string_view key, rest;
    std::size_t rest_col;
  };

  /// First whitespace-delimited word and the trimmed remainder.
  static Split keyword(std::string_view l, std::size_t col) {
    std::size_t i = 0;
    while (i < l.size() && !std::isspace(static_cast<unsigned char>(l[i]))) ++i;
    auto key = l.substr(0, i);
    std::size_t off = i;
    auto rest = inalg::trim(l.substr(i), off);
    return {key, rest, col + off};
  }

  Ring parse_ring(std::string_view s, std::size_t col) {
    std::vector<std::string> names;
    for (const auto& piece : split_commas(s, col)) {
      const auto& t = piece.text;
      bool ok = std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_';
      for (char c : t) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) fail("invalid variable name `" + std::string(t) + "`", piece.column);
      if (std::find(names.begin(), names.end(), t) != names.end())
        fail("duplicate variable `" + std::string(t) + "`", piece.column);
      names.emplace_back(t);
    }
    if (names.empty()) fail("ring needs at least one variable", col);
    return make_ring(std::move(names));
  }

  void entries(ProblemFile& p, std::string_view s, std::size_t col) {
    const std::size_t line = line_ + 1;
    for (const auto& piece : split_commas(s, col)) {
      if (p.kind == BlockKind::Pairs) {
        auto gt = piece.text.find('>');
        if (gt == std::string_view::npos) fail("expected `m > n`", piece.column);
        std::size_t lhs_off = 0, rhs_off = gt + 1;
        auto lhs = inalg::trim(piece.text.substr(0, gt), lhs_off);
        auto rhs = inalg::trim(piece.text.substr(gt + 1), rhs_off);
        Monomial m, n;
        try {
          m = parse_monomial(lhs, p.ring, line);
        } catch (const ParseError& e) {
          relocate(e, line, piece.column + lhs_off);
        }
        try {
          n = parse_monomial(rhs, p.ring, line);
        } catch (const ParseError& e) {
          relocate(e, line, piece.column + rhs_off);
        }
        p.pairs.emplace_back(std::move(m), std::move(n));
        continue;
      }
      Polynomial f(p.ring);
      try {
        f = parse_polynomial(piece.text, p.ring, line);
      } catch (const ParseError& e) {
        relocate(e, line, piece.column);
      }
      if (p.kind == BlockKind::Algebra && f.is_constant())
        fail("algebra generators must be nonconstant", piece.column);
      if (!f.is_zero()) p.gens.push_back(std::move(f));
    }
  }

  std::vector<std::string_view> lines_;
  std::size_t line_ = 0;
};

}  // namespace

OrderSpec ProblemFile::order_or_default() const {
  return order ? *order : OrderSpec::revlex(ring->nvars());
}

ProblemFile parse_problem(std::string_view text) { return FileParser(text).parse(); }

WeightVector parse_weight(std::string_view text, std::size_t line, std::size_t column) {
  std::vector<Integer> entries;
  for (const auto& piece : split_commas(text, column)) {
    const auto& t = piece.text;
    if (!std::all_of(t.begin(), t.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("weight entries must be positive integers", line, piece.column);
    Integer v(std::string{t});
    if (v <= 0) throw ParseError("weight entries must be positive", line, piece.column);
    entries.push_back(std::move(v));
  }
  if (entries.empty()) throw ParseError("empty weight", line, column);
  return WeightVector(std::move(entries));
}

Rational parse_rational(std::string_view text, std::size_t line, std::size_t column) {
  std::size_t off = 0;
  auto t = trim(text, off);
  column += off;
  if (t.empty()) throw ParseError("expected a rational number", line, column);
  bool neg = t[0] == '-';
  if (neg || t[0] == '+') t.remove_prefix(1);
  auto slash = t.find('/');
  auto num = t.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  if (!digits(num) || !digits(den)) throw ParseError("expected p or p/q", line, column);
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator", line, column);
  Rational q(Integer(std::string(num)), d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string block_keyword(BlockKind k) {
  switch (k) {
    case BlockKind::Ideal: return "ideal";
    case BlockKind::Algebra: return "algebra";
    case BlockKind::Pairs: return "pairs";
  }
  return "ideal";
}

std::string ring_header(const PolyRing& ring, const OrderSpec& ord) {
  std::string out = "ring ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out += (i ? ", " : "") + ring.name(i);
  out += "\norder " + ord.to_string(ring) + "\n";
  return out;
}

}  // namespace inalg
