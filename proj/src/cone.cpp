#include "symcone/cone.hpp"

#include <algorithm>
#include <functional>

#include "symcone/errors.hpp"

namespace symcone {

Rational adjunction_genus(const ClassVector& curve, const ClassVector& canonical, const Lattice& lattice) {
  return (self_int(curve, lattice) + pair(canonical, curve, lattice)) / 2 + 1;
}

bool classify_trivial_K_negative_curve(int c_sq, int genus) { return c_sq < 0 && genus >= 0 && c_sq == 2 * genus - 2; }

int noether_b2(int k_sq, int chi_o) { return 12 * chi_o - k_sq - 2; }

// ---------------------------------------------------------------------------
// Exceptional-class enumeration
// ---------------------------------------------------------------------------

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Search problem in coordinates c over the chosen basis:
//   c^T G c = -1,  kappa . c = -1,  |c_i| <= bound.
// One coordinate (the pivot) is eliminated with the linear constraint, leaving
// c = offset + P y over the free coordinates y.
struct ReducedProblem {
  std::size_t pivot = 0;
  std::vector<std::size_t> free;       // indices of the free coordinates
  Rational pivot_offset;               // c_pivot = pivot_offset + sum pivot_slope[i] y_i
  std::vector<Rational> pivot_slope;
};

// D and mu with y^T M y = sum_i D_i (y_i + sum_{j>i} mu_ij y_j)^2, or nullopt
// when M is not positive definite.
struct Decomposition {
  std::vector<Rational> diag;
  RMatrix mu;
};

std::optional<Decomposition> decompose_positive_definite(const RMatrix& m) {
  const std::size_t n = m.size();
  Decomposition out{std::vector<Rational>(n), RMatrix(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = m[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= out.mu[k][i] * out.mu[k][i] * out.diag[k];
    if (d <= 0) return std::nullopt;
    out.diag[i] = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = m[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= out.mu[k][i] * out.mu[k][j] * out.diag[k];
      out.mu[i][j] = s / d;
    }
  }
  return out;
}

// Solves M x = b for positive definite M (Gaussian elimination).
std::vector<Rational> solve_dense(RMatrix m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

// Integer range {y : (y - center)^2 <= radius_sq}, intersected with [-bound, bound].
std::optional<std::pair<Integer, Integer>> integer_window(const Rational& center, const Rational& radius_sq, const Integer& bound) {
  if (radius_sq < 0) return std::nullopt;
  const QuadraticRoot hi_root(center, 1, radius_sq, 1);
  const QuadraticRoot lo_root(center, -1, radius_sq, 1);
  Integer hi = floor(hi_root.rational_above(1)) - 1;
  Integer lo = floor(lo_root.rational_below(1)) + 1;
  lo = std::max(lo, Integer(-bound));
  hi = std::min(hi, bound);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace

std::vector<ClassVector> enumerate_exceptional(const ExceptionalQuery& query, const Lattice& lattice) {
  if (query.bound < 0) throw DomainError("enumeration bound must be nonnegative");
  if (query.canonical.size() != lattice.rank()) throw DimensionError("canonical class has wrong length");
  const auto sig = signature(lattice);
  if (!sig.hyperbolic()) throw DomainError("enumerate_exceptional requires signature (1, n, 0)");

  std::vector<ClassVector> basis;
  if (query.sublattice_basis) {
    basis = *query.sublattice_basis;
    for (const auto& b : basis) {
      if (b.size() != lattice.rank()) throw DimensionError("sublattice basis vector has wrong length");
    }
    if (span_rank(basis) != basis.size()) throw DomainError("sublattice basis is linearly dependent");
  } else {
    for (std::size_t i = 0; i < lattice.rank(); ++i) basis.push_back(ClassVector::unit(lattice.rank(), i));
  }
  const std::size_t r = basis.size();
  if (r == 0) return {};

  RMatrix gram(r, std::vector<Rational>(r));
  std::vector<Rational> kappa(r);
  for (std::size_t i = 0; i < r; ++i) {
    kappa[i] = pair(query.canonical, basis[i], lattice);
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = pair(basis[i], basis[j], lattice);
  }

  // Pivot: smallest nonzero |kappa_i| (fewest non-integral eliminations), last index on ties.
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < r; ++i) {
    if (kappa[i] == 0) continue;
    if (!pivot || abs(kappa[i]) <= abs(kappa[*pivot])) pivot = i;
  }
  if (!pivot) return {};

  ReducedProblem red;
  red.pivot = *pivot;
  for (std::size_t i = 0; i < r; ++i) {
    if (i != red.pivot) red.free.push_back(i);
  }
  red.pivot_offset = Rational(-1) / kappa[red.pivot];
  for (std::size_t i : red.free) red.pivot_slope.push_back(-kappa[i] / kappa[red.pivot]);
  const std::size_t n = red.free.size();
  const Integer bound(query.bound);

  std::vector<ClassVector> found;
  std::vector<Integer> y(n);

  auto accept = [&]() {
    Rational cp = red.pivot_offset;
    for (std::size_t i = 0; i < n; ++i) cp += red.pivot_slope[i] * y[i];
    if (!is_integer(cp) || abs(cp) > bound) return;
    std::vector<Rational> c(r);
    c[red.pivot] = cp;
    for (std::size_t i = 0; i < n; ++i) c[red.free[i]] = Rational(y[i]);
    ClassVector x = ClassVector::zero(lattice.rank());
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] != 0) x += c[i] * basis[i];
    }
    if (!x.is_integral()) return;
    if (self_int(x, lattice) == -1 && pair(x, query.canonical, lattice) == -1) found.push_back(std::move(x));
  };

  // Quadratic part in y: A = P^T G P, linear part b = P^T G offset, constant.
  // P maps free coordinate i to e_{free[i]} + slope_i e_pivot.
  auto column = [&](std::size_t i, std::size_t row) -> Rational {
    if (row == red.pivot) return red.pivot_slope[i];
    return row == red.free[i] ? Rational(1) : Rational(0);
  };
  RMatrix A(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t u = 0; u < r; ++u) {
        const Rational pu = column(i, u);
        if (pu == 0) continue;
        for (std::size_t v = 0; v < r; ++v) {
          const Rational pv = column(j, v);
          if (pv != 0) s += pu * gram[u][v] * pv;
        }
      }
      A[i][j] = s;
    }
    Rational s = 0;
    for (std::size_t u = 0; u < r; ++u) s += column(i, u) * gram[u][red.pivot] * red.pivot_offset;
    b[i] = s;
  }
  const Rational constant = red.pivot_offset * gram[red.pivot][red.pivot] * red.pivot_offset;

  RMatrix M = A;
  for (auto& row : M)
    for (auto& x : row) x = -x;
  const auto dec = n > 0 ? decompose_positive_definite(M) : std::optional<Decomposition>{};

  if (n == 0) {
    accept();
  } else if (dec) {
    // y^T A y + 2 b.y + constant = -1  <=>  (y - y0)^T M (y - y0) = R with M = -A, M y0 = b.
    const std::vector<Rational> y0 = solve_dense(M, b);
    Rational R = 1 + constant;
    for (std::size_t i = 0; i < n; ++i) R += b[i] * y0[i];
    std::function<void(std::size_t, Rational)> descend = [&](std::size_t level, Rational remaining) {
      // level counts down from n to 1; variable index i = level - 1.
      const std::size_t i = level - 1;
      Rational center = y0[i];
      for (std::size_t j = i + 1; j < n; ++j) center -= dec->mu[i][j] * (Rational(y[j]) - y0[j]);
      const auto window = integer_window(center, remaining / dec->diag[i], bound);
      if (!window) return;
      for (Integer v = window->first; v <= window->second; ++v) {
        y[i] = v;
        const Rational off = Rational(v) - center;
        const Rational rest = remaining - dec->diag[i] * off * off;
        if (i == 0) {
          if (rest == 0) accept();
        } else {
          descend(level - 1, rest);
        }
      }
    };
    if (R >= 0) descend(n, R);
  } else {
    // Indefinite on the constraint hyperplane: the solution set may be
    // infinite, so scan the whole box over the free coordinates.
    for (auto& v : y) v = -bound;
    while (true) {
      accept();
      std::size_t i = 0;
      while (i < n && y[i] == bound) y[i++] = -bound;
      if (i == n) break;
      y[i] += 1;
    }
  }

  std::sort(found.begin(), found.end(), [](const ClassVector& a, const ClassVector& b) { return b < a; });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// ---------------------------------------------------------------------------
// Cone membership
// ---------------------------------------------------------------------------

const char* to_string(ConeFailure failure) {
  switch (failure) {
    case ConeFailure::None: return "member";
    case ConeFailure::NotPositive: return "not in positive cone";
    case ConeFailure::WrongComponent: return "wrong component of positive cone";
    case ConeFailure::ExceptionalPairing: return "non-positive on exceptional class";
    case ConeFailure::CurvePairing: return "non-positive on negative curve";
  }
  return "?";
}

namespace {

void require_hyperbolic(const SurfaceModel& model) {
  const auto sig = signature(model.lattice);
  if (!sig.hyperbolic()) throw ModelError("gram", "cone queries require b+ = 1 and a nondegenerate form");
  if (self_int(model.reference_class(), model.lattice) <= 0) throw ModelError("roles.reference", "reference class must have positive square");
}

// Positive square and the reference sheet; shared by both cones.
std::optional<ConeMembership> positive_sheet_failure(const ClassVector& a, const SurfaceModel& model) {
  const Rational sq = self_int(a, model.lattice);
  if (sq <= 0) return ConeMembership{false, ConeFailure::NotPositive, "", sq};
  const Rational with_ref = pair(a, model.reference_class(), model.lattice);
  if (with_ref <= 0) return ConeMembership{false, ConeFailure::WrongComponent, model.reference, with_ref};
  return std::nullopt;
}

}  // namespace

ConeMembership symplectic_membership(const ClassVector& a, const SurfaceModel& model) {
  require_hyperbolic(model);
  if (auto fail = positive_sheet_failure(a, model)) return *fail;
  for (const auto& name : model.exceptional) {
    const Rational p = pair(a, model.resolve(name), model.lattice);
    if (p <= 0) return {false, ConeFailure::ExceptionalPairing, name, p};
  }
  return {true, ConeFailure::None, "", 0};
}

ConeMembership kahler_membership(const ClassVector& a, const SurfaceModel& model) {
  require_hyperbolic(model);
  if (!model.curves) throw CapabilityError("model '" + model.name + "' declares no curve list; Kähler queries unavailable");
  if (auto fail = positive_sheet_failure(a, model)) return *fail;
  for (const auto& rec : *model.curves) {
    if (self_int(rec.cls, model.lattice) >= 0) continue;
    const Rational p = pair(a, rec.cls, model.lattice);
    if (p <= 0) return {false, ConeFailure::CurvePairing, rec.label, p};
  }
  return {true, ConeFailure::None, "", 0};
}

bool in_symplectic_cone(const ClassVector& a, const SurfaceModel& model) { return symplectic_membership(a, model).member; }

bool in_kahler_cone(const ClassVector& a, const SurfaceModel& model) { return kahler_membership(a, model).member; }

// ---------------------------------------------------------------------------
// Deformation certificate
// ---------------------------------------------------------------------------

DeformationInterval deformation_interval(const ClassVector& w, const ClassVector& curve, const Lattice& lattice) {
  const Rational w_sq = self_int(w, lattice);
  if (w_sq <= 0) throw CertificationError(CertificationError::Kind::NotPositive, "starting class must have positive square");
  const Rational m = -self_int(curve, lattice);
  if (m <= 0) throw CertificationError(CertificationError::Kind::NotNegativeCurve, "not a negative curve: C^2 = " + to_string(-m));
  const Rational v = pair(w, curve, lattice);
  if (v <= 0) throw CertificationError(CertificationError::Kind::NotObstructing, "curve does not obstruct: w.C = " + to_string(v));
  // (w + tC)^2 = w^2 + 2tv - t^2 m > 0  <=>  t < (v + sqrt(v^2 + m w^2)) / m for t > 0.
  return DeformationInterval{v / m, QuadraticRoot(v, 1, v * v + m * w_sq, m)};
}

bool NonKahlerCertificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

namespace {

std::vector<CertificateCheck> evaluate_checks(const ClassVector& w, const CurveRecord& curve, const Rational& T,
                                              const ClassVector& aT, const SurfaceModel& model) {
  const Lattice& L = model.lattice;
  std::vector<CertificateCheck> checks;
  auto add = [&](std::string what, Rational value, bool ok) { checks.push_back({std::move(what), std::move(value), ok}); };

  const Rational w_sq = self_int(w, L);
  const Rational v = pair(w, curve.cls, L);
  const Rational m = -self_int(curve.cls, L);
  add("w^2 > 0", w_sq, w_sq > 0);
  add("v = w.C > 0", v, v > 0);
  add("m = -C^2 > 0", m, m > 0);
  add("T > v/m", T, m > 0 && T > v / m);
  const bool formed = aT == w + T * curve.cls;
  add("aT = w + T*C", T, formed);
  const Rational sq = self_int(aT, L);
  add("aT^2 > 0", sq, sq > 0);
  const Rational on_curve = pair(aT, curve.cls, L);
  add("aT.C = v - T*m < 0", on_curve, on_curve < 0 && on_curve == v - T * m);
  for (const auto& name : model.exceptional) {
    const Rational p = pair(aT, model.resolve(name), L);
    add("aT." + name + " > 0", p, p > 0);
  }
  const Rational with_ref = pair(aT, model.reference_class(), L);
  add("aT." + model.reference + " > 0 (reference component)", with_ref, with_ref > 0);
  const bool symplectic = in_symplectic_cone(aT, model);
  add("aT in symplectic cone", Rational(symplectic ? 1 : 0), symplectic);
  if (model.curves) {
    const bool kahler = in_kahler_cone(aT, model);
    add("aT not in Kähler cone", Rational(kahler ? 1 : 0), !kahler);
  }
  return checks;
}

}  // namespace

NonKahlerCertificate certify_non_generic(const ClassVector& w, const CurveRecord& curve, const SurfaceModel& model) {
  const Lattice& L = model.lattice;
  require_hyperbolic(model);
  if (self_int(w, L) > 0 && pair(w, model.reference_class(), L) <= 0) {
    throw CertificationError(CertificationError::Kind::WrongComponent, "starting class is not in the reference component");
  }
  const auto interval = deformation_interval(w, curve.cls, L);
  const Rational v = pair(w, curve.cls, L);
  const Rational m = -self_int(curve.cls, L);
  const auto exceptional = model.exceptional_set();

  // Name of the first exceptional class with non-positive pairing, if any.
  auto blocking = [&](const Rational& t) -> std::optional<std::string> {
    const ClassVector a = w + t * curve.cls;
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
      if (pair(a, exceptional[i], L) <= 0) return model.exceptional[i];
    }
    return std::nullopt;
  };

  std::optional<Rational> chosen;
  std::string blocker;
  for (long j = 1;; ++j) {
    const Rational t = (v + j) / m;
    if (!interval.contains(t)) break;
    if (const auto b = blocking(t)) {
      blocker = *b;
      continue;
    }
    chosen = t;
    break;
  }
  if (!chosen) {
    // Rational point near the middle of (lower, upper).
    Integer den = 1;
    Rational hi = interval.upper.rational_below(den);
    while (hi <= interval.lower) {
      den *= 2;
      hi = interval.upper.rational_below(den);
    }
    const Rational mid = (interval.lower + hi) / 2;
    if (const auto b = blocking(mid)) {
      throw CertificationError(CertificationError::Kind::NoAdmissibleParameter,
                               "no admissible T in " + to_string(interval.lower) + " < T < " + interval.upper.to_string() +
                                   ": pairing with exceptional class " + *b + " is non-positive");
    }
    chosen = mid;
  }

  NonKahlerCertificate cert{w, curve, v, m, *chosen, w + *chosen * curve.cls, interval, {}};
  cert.checks = evaluate_checks(cert.w, cert.curve, cert.T, cert.aT, model);
  if (!cert.all_passed()) {
    for (const auto& c : cert.checks) {
      if (!c.passed) throw CertificationError(CertificationError::Kind::NoAdmissibleParameter, "certificate check failed: " + c.description);
    }
  }
  return cert;
}

std::vector<std::string> verify_certificate(const NonKahlerCertificate& cert, const SurfaceModel& model) {
  std::vector<std::string> failures;
  const Lattice& L = model.lattice;
  if (cert.v != pair(cert.w, cert.curve.cls, L)) failures.push_back("stored v differs from w.C");
  if (cert.m != -self_int(cert.curve.cls, L)) failures.push_back("stored m differs from -C^2");
  if (!cert.interval.contains(cert.T)) failures.push_back("T outside deformation interval");
  for (const auto& c : evaluate_checks(cert.w, cert.curve, cert.T, cert.aT, model)) {
    if (!c.passed) failures.push_back(c.description);
  }
  if (model.curves) {
    const auto k = kahler_membership(cert.aT, model);
    if (k.failure != ConeFailure::CurvePairing || k.witness_pairing >= 0) failures.push_back("no negative curve pairing witnesses non-Kählerness");
  }
  return failures;
}

}  // namespace symcone
