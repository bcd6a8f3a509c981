#include "dualflow/rational.hpp"

#include <cctype>
#include <functional>
#include <utility>

#include "dualflow/error.hpp"

namespace dualflow {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(std::to_string(value))) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ValidationError, "zero denominator");
  value_ = mpq_class(to_mpz(std::to_string(num)), to_mpz(std::to_string(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) {
      throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(mpq_class(to_mpz(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorCode::ValidationError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const { return value_.get_str(); }

std::string Rational::fraction_str() const { return numerator() + "/" + denominator(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::hash() const {
  auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    const int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < n; ++i) {
      h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  const std::size_t hn = limb_hash(value_.get_num_mpz_t());
  const std::size_t hd = limb_hash(value_.get_den_mpz_t());
  return hn ^ (hd + 0x9e3779b97f4a7c15ULL + (hn << 6) + (hn >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::InfeasibleTree: return "InfeasibleTree";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnboundedDirection: return "UnboundedDirection";
    case ErrorCode::StaleStep: return "StaleStep";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorCode::FrontierTooLarge: return "FrontierTooLarge";
    case ErrorCode::EdgeMissing: return "EdgeMissing";
    case ErrorCode::FaceEmpty: return "FaceEmpty";
    case ErrorCode::NegativeSelfLoop: return "NegativeSelfLoop";
    case ErrorCode::InfeasibleLift: return "InfeasibleLift";
    case ErrorCode::NoBackwardEdge: return "NoBackwardEdge";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PathConflict: return "PathConflict";
    case ErrorCode::InfeasibleInstance: return "InfeasibleInstance";
  }
  return "Unknown";
}

}  // namespace dualflow
