#include "xl/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>

namespace xl {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PrimeField& field, std::size_t n) : field_(field), n_(n) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    while (pos_ < src_.size()) {
      const char op = src_[pos_++];
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      terms.push_back(term(op == '-'));
    }
    return Polynomial(field_, n_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_++] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  Term term(bool negative) {
    FieldElement coeff = field_.one();
    std::vector<int> exps(n_, 0);
    while (true) {
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = field_.mul(coeff, FieldElement{field_.reduce(integer())});
      } else if (ch == 'x' || ch == 'X') {
        ++pos_;
        if (peek() == '_') ++pos_;
        const auto index = integer();
        if (index < 1 || index > n_) fail("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n_));
        std::uint64_t e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
        }
        exps[index - 1] += static_cast<int>(std::min<std::uint64_t>(e, 1000));
        if (exps[index - 1] > 255) fail("exponent exceeds 255");
      } else {
        fail("expected coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    std::vector<std::uint8_t> packed(exps.begin(), exps.end());
    return Term{Monomial(std::move(packed)), negative ? field_.neg(coeff) : coeff};
  }

  std::string src_;
  std::size_t pos_ = 0;
  const PrimeField& field_;
  std::size_t n_;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PrimeField& field, std::size_t n) {
  return PolyParser(text, field, n).parse();
}

std::string to_string(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::vector<Term> terms(poly.terms().begin(), poly.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.monomial.degree() != b.monomial.degree()) return a.monomial.degree() > b.monomial.degree();
    return a.monomial > b.monomial;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) out << " + ";
    first = false;
    out << t.coeff.value();
    for (std::size_t i = 0; i < t.monomial.ambient(); ++i) {
      const int e = t.monomial.exponent(i);
      if (e == 0) continue;
      out << "*x" << (i + 1);
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

PolySystem parse_system(std::istream& in) {
  std::string line;
  std::optional<PrimeField> field;
  std::size_t n = 0;
  std::vector<Polynomial> polys;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!field) {
      std::istringstream header(t);
      std::string tok;
      std::optional<std::uint64_t> p;
      std::optional<std::size_t> vars;
      while (header >> tok) {
        try {
          if (tok.rfind("p=", 0) == 0) {
            p = std::stoull(tok.substr(2));
          } else if (tok.rfind("n=", 0) == 0) {
            vars = std::stoull(tok.substr(2));
          } else {
            throw ParseError("unknown header token '" + tok + "'");
          }
        } catch (const std::logic_error&) {
          throw ParseError("malformed header token '" + tok + "' on line " + std::to_string(line_no));
        }
      }
      if (!p || !vars || *vars < 1) throw ParseError("header must be 'p=<prime> n=<vars>' on line " + std::to_string(line_no));
      try {
        field.emplace(*p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad modulus: ") + e.what());
      }
      n = *vars;
      continue;
    }
    try {
      polys.push_back(parse_polynomial(t, *field, n));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!field) throw ParseError("missing header line 'p=<prime> n=<vars>'");
  if (polys.empty()) throw ParseError("system has no polynomials");
  return PolySystem{*field, n, std::move(polys)};
}

PolySystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_system(in);
}

std::string format_system(const PolySystem& system) {
  std::ostringstream out;
  out << "p=" << system.field.modulus() << " n=" << system.n << '\n';
  for (const auto& f : system.polys) out << to_string(f) << '\n';
  return out.str();
}

}  // namespace xl
