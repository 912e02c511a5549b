#include "hb/symbol_format.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "hb/errors.hpp"

namespace hb {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

cd parse_complex(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {parse_real(s, s), 0.0};
  // Imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split_at = 0;
  for (std::size_t k = s.size() - 1; k-- > 0;) {
    if ((s[k] == '+' || s[k] == '-') && k > 0 && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view body(s.data(), s.size() - 1);
  if (split_at == 0) return {0.0, parse_real(body, s)};
  return {parse_real(body.substr(0, split_at), s), parse_real(body.substr(split_at), s)};
}

SmirnovSymbol parse_symbol(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty symbol");
  const auto parts = split(s, ';');
  const cd constant = parts[0].empty() ? cd(0.0, 0.0) : parse_complex(parts[0]);
  std::vector<PoleTerm> terms;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::string& p = parts[k];
    if (p.size() < 2 || p.front() != '(' || p.back() != ')') {
      throw ParseError("pole term must look like (B, zeta, d): '" + p + "'");
    }
    const auto fields = split(p.substr(1, p.size() - 2), ',');
    if (fields.size() != 3) throw ParseError("pole term needs three fields: '" + p + "'");
    int order = 0;
    const auto& f = fields[2];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), order);
    if (ec != std::errc() || ptr != f.data() + f.size() || order < 1) {
      throw ParseError("pole order must be a positive integer: '" + f + "'");
    }
    terms.push_back({parse_complex(fields[0]), parse_complex(fields[1]), order});
  }
  return SmirnovSymbol(constant, std::move(terms));
}

std::string format_complex(cd z) {
  if (z.imag() == 0.0) return shortest(z.real());
  std::string im = shortest(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return shortest(z.real()) + im + "i";
}

std::string format_symbol(const SmirnovSymbol& phi) {
  std::string out = format_complex(phi.constant_term());
  for (const auto& t : phi.pole_terms()) {
    out += ";(" + format_complex(t.coefficient) + "," + format_complex(t.pole) + "," + std::to_string(t.order) + ")";
  }
  return out;
}

}  // namespace hb
