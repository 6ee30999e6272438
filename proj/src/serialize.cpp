#include "bh/error.hpp"
#include "bh/symfrac.hpp"

#include <cctype>
#include <sstream>

namespace bh {

namespace {

bool all_even(const Poly& p) {
  for (auto& t : p.terms())
    for (int i = 1; i < kSlots; ++i)
      if (t.e[i] % 2) return false;
  return true;
}

void put_factor(std::string& out, const std::string& name, int k, bool latex) {
  if (!out.empty()) out += latex ? " " : "*";
  out += name;
  if (k == 1) return;
  if (latex)
    out += "^{" + std::to_string(k) + "}";
  else
    out += "^" + std::to_string(k);
}

std::string monomial_text(const Exp& e, bool xform, bool latex) {
  std::string s;
  if (e[0]) put_factor(s, "q", e[0], latex);
  for (int i = 1; i < kSlots; ++i) {
    if (!e[i]) continue;
    std::string idx = std::to_string(i);
    if (xform)
      put_factor(s, latex ? "x_{" + idx + "}" : "x" + idx, e[i] / 2, latex);
    else
      put_factor(s, latex ? "\\xi_{" + idx + "}" : "xi" + idx, e[i], latex);
  }
  return s;
}

std::string poly_text(const Poly& p, bool xform, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : p.terms()) {
    bool neg = t.c < 0;
    mpz_class a = abs(t.c);
    std::string m = monomial_text(t.e, xform, latex);
    std::string body;
    if (m.empty())
      body = a.get_str();
    else if (a == 1)
      body = m;
    else
      body = a.get_str() + (latex ? " " : "*") + m;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// --- parser -------------------------------------------------------------

struct Parser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw MathError("parse", why + " at offset " + std::to_string(i) + " in '" + s + "'");
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  long integer() {
    ws();
    size_t st = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (st == i || (i == st + 1 && !std::isdigit((unsigned char)s[st]))) fail("expected integer");
    return std::stol(s.substr(st, i - st));
  }

  // factor := ('q' | 'xi'N | 'x'N) ['^' int]
  bool factor(Exp& e) {
    ws();
    if (i >= s.size()) return false;
    int slot = -1, mult = 1;
    if (s[i] == 'q') {
      slot = 0;
      ++i;
    } else if (s[i] == 'x') {
      ++i;
      if (i < s.size() && s[i] == 'i') {
        ++i;
      } else {
        mult = 2;
      }
      size_t st = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      if (st == i) fail("expected variable index");
      slot = std::stoi(s.substr(st, i - st));
      if (slot < 1 || slot >= kSlots) fail("variable index out of range");
    } else {
      return false;
    }
    long k = 1;
    if (peek('^')) {
      ++i;
      k = integer();
    }
    e[slot] = int16_t(e[slot] + k * mult);
    return true;
  }

  Poly poly() {
    std::vector<Term> ts;
    bool first = true;
    while (true) {
      ws();
      if (i >= s.size() || s[i] == ')') break;
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
        ws();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      mpz_class c = 1;
      Exp e{};
      if (i < s.size() && std::isdigit((unsigned char)s[i])) {
        size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        c = mpz_class(s.substr(st, i - st));
        if (peek('*')) {
          ++i;
          if (!factor(e)) fail("expected factor");
        }
      } else if (!factor(e)) {
        fail("expected term");
      }
      while (peek('*')) {
        ++i;
        if (!factor(e)) fail("expected factor");
      }
      ts.push_back({e, c * sign});
    }
    if (first) fail("empty expression");
    return Poly::from_terms(std::move(ts));
  }
};

}  // namespace

std::string to_text(const Poly& p, VarStyle st) {
  return poly_text(p, st == VarStyle::x_when_even && all_even(p), false);
}

std::string to_text(const RationalFunc& f, VarStyle st) {
  bool xf = st == VarStyle::x_when_even && all_even(f.num()) && all_even(f.den());
  if (f.is_poly()) return poly_text(f.num(), xf, false);
  return "(" + poly_text(f.num(), xf, false) + ")/(" + poly_text(f.den(), xf, false) + ")";
}

std::string to_latex(const RationalFunc& f) {
  bool xf = all_even(f.num()) && all_even(f.den());
  if (f.is_poly()) return poly_text(f.num(), xf, true);
  return "\\frac{" + poly_text(f.num(), xf, true) + "}{" + poly_text(f.den(), xf, true) + "}";
}

RationalFunc parse_text(const std::string& s) {
  Parser p{s};
  p.ws();
  if (p.peek('(')) {
    ++p.i;
    Poly n = p.poly();
    if (!p.peek(')')) p.fail("expected )");
    ++p.i;
    Poly d(1);
    if (p.peek('/')) {
      ++p.i;
      if (!p.peek('(')) p.fail("expected (");
      ++p.i;
      d = p.poly();
      if (!p.peek(')')) p.fail("expected )");
      ++p.i;
    }
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return RationalFunc::fraction(n, d);
  }
  Poly n = p.poly();
  p.ws();
  if (p.i != s.size()) p.fail("trailing input");
  return RationalFunc(n);
}

nlohmann::json to_json(const RationalFunc& f, int rank) {
  auto side = [rank](const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& t : p.terms()) {
      nlohmann::json xi = nlohmann::json::array();
      for (int i = 1; i <= rank; ++i) xi.push_back(int(t.e[i]));
      arr.push_back({{"c", t.c.get_str()}, {"q", int(t.e[0])}, {"xi", xi}});
    }
    return arr;
  };
  for (auto& t : f.num().terms())
    for (int i = rank + 1; i < kSlots; ++i)
      if (t.e[i]) throw MathError("serialize", "rank too small for expression");
  return {{"num", side(f.num())}, {"den", side(f.den())}};
}

RationalFunc from_json(const nlohmann::json& j) {
  auto side = [](const nlohmann::json& arr) {
    std::vector<Term> ts;
    for (auto& t : arr) {
      Exp e{};
      e[0] = int16_t(t.at("q").get<int>());
      auto& xi = t.at("xi");
      if (xi.size() > size_t(kMaxRank)) throw MathError("parse", "too many variables");
      for (size_t i = 0; i < xi.size(); ++i) e[i + 1] = int16_t(xi[i].get<int>());
      ts.push_back({e, mpz_class(t.at("c").get<std::string>())});
    }
    return Poly::from_terms(std::move(ts));
  };
  Poly n = side(j.at("num")), d = side(j.at("den"));
  if (d.is_zero()) throw MathError("parse", "zero denominator");
  return RationalFunc::fraction(n, d);
}

}  // namespace bh
