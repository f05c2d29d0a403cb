#include "octa/rat.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace octa {

std::string rat_pq(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mantissa ["." digits] ["e" exp] with optional sign, exactly in base 10.
std::optional<Rat> parse_decimal(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = t.substr(epos + 1);
    t = t.substr(0, epos);
    if (es.empty()) return std::nullopt;
    bool eneg = false;
    if (es[0] == '+' || es[0] == '-') {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!all_digits(es) || es.size() > 6) return std::nullopt;
    exp10 = std::atol(es.c_str());
    if (eneg) exp10 = -exp10;
  }
  std::string digits;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    digits = t.substr(0, dot) + t.substr(dot + 1);
    exp10 -= static_cast<long>(t.size() - dot - 1);
  } else {
    digits = t;
  }
  if (!all_digits(digits)) return std::nullopt;
  Rat q(Int(digits, 10));
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0)
    q *= Rat(pow10);
  else
    q /= Rat(pow10);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

}  // namespace

std::optional<Rat> parse_rat(const std::string& token) {
  if (token.empty()) return std::nullopt;
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    std::string num = token.substr(0, slash);
    std::string den = token.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    std::string nb = (num[0] == '+' || num[0] == '-') ? num.substr(1) : num;
    if (!all_digits(nb) || !all_digits(den)) return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), token.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Rat(q.get_den())) == 0) return std::nullopt;
    q.canonicalize();
    return q;
  }
  return parse_decimal(token);
}

std::string shortest_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  assert(res.ec == std::errc());
  return std::string(buf, res.ptr);
}

}  // namespace octa
