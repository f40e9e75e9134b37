#include "densedel/rational.h"

#include <limits>

#include "densedel/error.h"

namespace densedel {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kInvalidNetwork: return "InvalidNetwork";
    case ErrorCode::kInvalidHyperedge: return "InvalidHyperedge";
    case ErrorCode::kUnsupportedSelfLoop: return "UnsupportedSelfLoop";
    case ErrorCode::kInvalidMarginal: return "InvalidMarginal";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidOracle: return "InvalidOracle";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kInvalidCost: return "InvalidCost";
    case ErrorCode::kInvalidRational: return "InvalidRational";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedInstance: return "UnsupportedInstance";
    case ErrorCode::kNotFiniteCost: return "NotFiniteCost";
    case ErrorCode::kNotFeasible: return "NotFeasible";
    case ErrorCode::kInfeasibleWithFiniteCost: return "InfeasibleWithFiniteCost";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::kTooLarge, "integer does not fit in 64 bits");
  }
  return z.get_si();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidRational, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorCode::kInvalidRational, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::kInvalidRational, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::int64_t Rational::numerator_i64() const { return to_i64(value_.get_num()); }
std::int64_t Rational::denominator_i64() const { return to_i64(value_.get_den()); }

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::kInvalidRational, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace densedel
