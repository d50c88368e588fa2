#include "nilcent/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nilcent {

size_t Monomial::hash() const {
  size_t h = deg;
  for (size_t i = 0; i < kMaxVars; ++i) h = h * 1000003u ^ e[i];
  return h;
}

size_t Monomial::support_end() const {
  for (size_t i = kMaxVars; i-- > 0;)
    if (e[i]) return i + 1;
  return 0;
}

size_t VarRegistry::add(const std::string& name) {
  if (auto i = find(name)) return *i;
  if (names_.size() >= kMaxVars) throw std::length_error("too many polynomial variables");
  names_.push_back(name);
  return names_.size() - 1;
}

std::optional<size_t> VarRegistry::find(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

std::string mono_str(const Monomial& m, const VarRegistry* vars) {
  std::string out;
  for (size_t i = 0; i < kMaxVars; ++i) {
    if (!m.e[i]) continue;
    if (!out.empty()) out += "*";
    out += vars && i < vars->size() ? vars->name(i) : "x" + std::to_string(i);
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

template <class F>
std::string poly_str(const std::vector<std::pair<Monomial, F>>& terms, const VarRegistry* vars) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string cs = c.str();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string ms = mono_str(m, vars);
    if (ms.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += ms;
    } else {
      out += cs + "*" + ms;
    }
  }
  return out;
}

}  // namespace

template <>
std::string Poly<Rational>::str(const VarRegistry* vars) const {
  return poly_str(t_, vars);
}
template <>
std::string Poly<Cyclotomic>::str(const VarRegistry* vars) const {
  return poly_str(t_, vars);
}

KPoly to_k(const QPoly& p) {
  std::vector<KPoly::Term> t;
  for (const auto& [m, c] : p.terms()) t.emplace_back(m, Cyclotomic(c));
  return KPoly(p.order(), std::move(t));
}

std::optional<QPoly> to_q(const KPoly& p) {
  std::vector<QPoly::Term> t;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational()) return std::nullopt;
    t.emplace_back(m, c.rational());
  }
  return QPoly(p.order(), std::move(t));
}

KPoly parse_poly(const std::string& text, VarRegistry& vars, MonoOrder o) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse_poly: expected a number at " + std::to_string(start));
    return text.substr(start, pos - start);
  };
  auto read_exp = [&]() -> unsigned {
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      return static_cast<unsigned>(std::stoul(read_uint()));
    }
    return 1;
  };
  KPoly total(o);
  skip();
  while (pos < text.size()) {
    KPoly term = KPoly::constant(Cyclotomic(1), o);
    skip();
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') term = KPoly::constant(Cyclotomic(-1), o);
      ++pos;
    }
    while (true) {
      skip();
      if (pos >= text.size()) throw std::invalid_argument("parse_poly: unexpected end of input");
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = read_uint();
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip();
          num += "/" + read_uint();
        }
        term = term.scaled(Cyclotomic(Rational::parse(num)));
      } else if (ch == '(') {
        int depth = 0;
        size_t start = pos;
        for (; pos < text.size(); ++pos) {
          if (text[pos] == '(') ++depth;
          if (text[pos] == ')' && --depth == 0) break;
        }
        if (pos >= text.size()) throw std::invalid_argument("parse_poly: unbalanced parenthesis");
        KPoly inner = parse_poly(text.substr(start + 1, pos - start - 1), vars, o);
        ++pos;
        term = term * inner;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name = text.substr(start, pos - start);
        unsigned k = read_exp();
        bool is_zeta = name.size() > 1 && name[0] == 'z' &&
                       std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (is_zeta) {
          term = term.scaled(Cyclotomic::root_of_unity(std::stoi(name.substr(1)), static_cast<int>(k)));
        } else {
          term = term.mul_term(Cyclotomic(1), Monomial::var(vars.add(name), k));
        }
      } else {
        throw std::invalid_argument(std::string("parse_poly: unexpected character '") + ch + "'");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    total += term;
    skip();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
      throw std::invalid_argument("parse_poly: expected '+' or '-' at " + std::to_string(pos));
  }
  return total;
}

}  // namespace nilcent
