#include "planewalk/rational.h"

#include "planewalk/errors.h"

#include <cctype>

namespace planewalk {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::ParallelEdge: return "ParallelEdge";
    case Errc::CoincidentCoordinates: return "CoincidentCoordinates";
    case Errc::RotationCoordMismatch: return "RotationCoordMismatch";
    case Errc::NonPlanarRotation: return "NonPlanarRotation";
    case Errc::CoincidentDirections: return "CoincidentDirections";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::DegenerateClosed: return "DegenerateClosed";
    case Errc::ZeroLengthInput: return "ZeroLengthInput";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::TransversalPresent: return "TransversalPresent";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::NoCoordinates: return "NoCoordinates";
    case Errc::GenericityExhausted: return "GenericityExhausted";
    case Errc::AmbientMismatch: return "AmbientMismatch";
  }
  return "UnknownError";
}

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = BigInt(s);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(Errc::SyntaxError, "empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num, den;
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den))
      throw Error(Errc::SyntaxError, "bad rational literal '" + text + "'");
    if (den == 0) throw Error(Errc::SyntaxError, "zero denominator in '" + text + "'");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip.erase(ip.begin());
    if (ip.empty() && fp.empty())
      throw Error(Errc::SyntaxError, "bad decimal literal '" + text + "'");
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::SyntaxError, "bad decimal literal '" + text + "'");
    BigInt num = ip.empty() ? BigInt(0) : BigInt(ip);
    BigInt den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
  }

  BigInt v;
  if (!parse_integer(s, v)) throw Error(Errc::SyntaxError, "bad integer literal '" + text + "'");
  return Rational(v);
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_to_double(const Rational& r) { return static_cast<double>(r); }

Rational sqrt_lower_bound(const Rational& r) {
  if (r < 0) throw Error(Errc::SemanticError, "sqrt_lower_bound of negative value");
  const BigInt p = boost::multiprecision::numerator(r);
  const BigInt q = boost::multiprecision::denominator(r);
  // sqrt(p/q) = sqrt(p*q)/q; cpp_int sqrt is the integer floor square root.
  const BigInt pq = p * q;
  const BigInt root = boost::multiprecision::sqrt(pq);
  return Rational(root, q);
}

}  // namespace planewalk
