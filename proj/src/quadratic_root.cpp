#include "symcone/quadratic_root.hpp"

#include <sstream>

#include "symcone/errors.hpp"

namespace symcone {

int sign_of_surd(const Rational& a, const Rational& b, const Rational& d) {
  if (d < 0) throw DomainError("negative radicand");
  const int sa = sgn(a);
  const int sb = (d == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  const int cmp = sgn(Rational(a * a - b * b * d));
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

QuadraticRoot::QuadraticRoot(Rational p_, Rational q_, Rational d_, Rational den_)
    : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)), den(std::move(den_)) {
  if (d < 0) throw DomainError("quadratic root with negative radicand");
  if (den == 0) throw DomainError("quadratic root with zero denominator");
  if (den < 0) {
    p = -p;
    q = -q;
    den = -den;
  }
}

int QuadraticRoot::compare(const Rational& r) const { return sign_of_surd(Rational(p - r * den), q, d); }

namespace {

// Largest integer k with compare(k / denominator) > 0, found by bisection.
Integer largest_below(const QuadraticRoot& root, const Integer& denominator) {
  // |root| <= (|p| + |q| (d + 1)) / den since sqrt(d) <= d + 1.
  const Rational bound = (abs(root.p) + abs(root.q) * (root.d + 1)) / root.den + 1;
  Integer lo = -(ceil(bound) * denominator) - 1;  // root > lo / denominator
  Integer hi = ceil(bound) * denominator + 1;     // root < hi / denominator
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (root.compare(Rational(mid, denominator)) > 0) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

Rational QuadraticRoot::rational_below(const Integer& denominator) const {
  if (denominator <= 0) throw DomainError("denominator must be positive");
  Rational out(largest_below(*this, denominator), denominator);
  out.canonicalize();
  return out;
}

Rational QuadraticRoot::rational_above(const Integer& denominator) const {
  if (denominator <= 0) throw DomainError("denominator must be positive");
  Integer k = largest_below(*this, denominator) + 1;
  if (compare(Rational(k, denominator)) == 0) k += 1;
  Rational out(k, denominator);
  out.canonicalize();
  return out;
}

std::string QuadraticRoot::to_string() const {
  std::ostringstream out;
  out << '(' << symcone::to_string(p);
  if (q != 0 && d != 0) {
    out << (q < 0 ? " - " : " + ");
    if (abs(q) != 1) out << symcone::to_string(abs(q)) << '*';
    out << "sqrt(" << symcone::to_string(d) << ')';
  }
  out << ')';
  if (den != 1) out << '/' << symcone::to_string(den);
  return out.str();
}

}  // namespace symcone
