#include "f4/intersection.hpp"

#include <cmath>
#include <string>

#include "f4/errors.hpp"

namespace f4 {

namespace {

Complex checked(Complex den, const char* what) {
  if (std::abs(den) < kDegeneracyTol)
    throw DegenerateError(std::string("vanishing denominator: ") + what);
  return den;
}

struct Abg {
  Complex A, B, g1, g2;
  explicit Abg(const HypergeometricParams& p) {
    const CircuitConstants k = circuit_constants(p);
    A = k.alpha;
    B = k.beta;
    g1 = k.gamma1;
    g2 = k.gamma2;
  }
};

// Upper triangle (H66, H67, H68, H77, H78, H88) in mu-form.
std::array<Complex, 6> h678_upper(const HypergeometricParams& p) {
  const CircuitConstants k = circuit_constants(p);
  const Complex m0 = k.alpha, m1 = k.mu1, m2 = k.mu2, m4 = k.mu4;
  const Complex m124 = m1 * m2 * m4, m014 = m0 * m1 * m4, m024 = m0 * m2 * m4;
  const Complex i0 = 1.0 / checked(m0 - 1.0, "mu0 - 1");
  const Complex i1 = 1.0 / checked(m1 - 1.0, "mu1 - 1");
  const Complex i2 = 1.0 / checked(m2 - 1.0, "mu2 - 1");
  const Complex i4 = 1.0 / checked(m4 - 1.0, "mu4 - 1");
  const Complex i124 = 1.0 / checked(m124 - 1.0, "mu124 - 1");
  const Complex i014 = 1.0 / checked(m014 - 1.0, "mu014 - 1");
  const Complex i024 = 1.0 / checked(m024 - 1.0, "mu024 - 1");

  const Complex h66 = 1.0 + i0 + i1 + i2 + (m1 * m2 - 1.0) * i124 * i1 * i2 +
                      (m0 * m1 - 1.0) * i014 * i0 * i1 + (m0 * m2 - 1.0) * i024 * i0 * i2;
  const Complex h67 = -i1 * (1.0 + i124 + i014);
  const Complex h68 = -i2 * (1.0 + i124 + i024);
  const Complex h77 = 1.0 + i1 + i4 + (m1 * m4 - 1.0) * i124 * i1 * i4 +
                      (m1 * m4 - 1.0) * i014 * i1 * i4;
  const Complex h78 = -m1 * m4 * i4 * i124;
  const Complex h88 = 1.0 + i2 + i4 + (m2 * m4 - 1.0) * i124 * i2 * i4 +
                      (m2 * m4 - 1.0) * i024 * i2 * i4;
  return {h66, h67, h68, h77, h78, h88};
}

}  // namespace

const char* to_string(CycleBasis basis) {
  switch (basis) {
    case CycleBasis::DeltaCycles: return "DeltaCycles";
    case CycleBasis::HatCycles: return "HatCycles";
    case CycleBasis::PrimeCycles: return "PrimeCycles";
    case CycleBasis::Cycles678: return "Cycles678";
    case CycleBasis::CohomologyForms: return "CohomologyForms";
  }
  return "?";
}

IntersectionMatrix h_matrix(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex g12 = k.g1 * k.g2;
  const Complex den1 = checked((k.A - g12) * (1.0 - k.g1) * (1.0 - k.g2), "H11");
  const Complex den2 =
      checked((k.A - k.g1) * (k.A - g12) * (k.B - k.g1) * (1.0 - k.B), "H22");
  const Complex den3 =
      checked((k.A - k.g2) * (k.A - g12) * (1.0 - k.B) * (k.B - k.g2), "H33");
  const Complex den4 = checked((1.0 - k.B) * (1.0 - k.g1) * (1.0 - k.g2), "H44");

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
  h(0, 0) = -(1.0 - k.A) * g12 / den1;
  h(1, 1) = k.A * k.B * k.g1 * (1.0 - k.g1) * (1.0 - k.g2) / den2;
  h(2, 2) = k.A * k.B * k.g2 * (1.0 - k.g1) * (1.0 - k.g2) / den3;
  h(3, 3) = -(k.B - g12) / den4;
  return {h, CycleBasis::DeltaCycles, CycleBasis::DeltaCycles};
}

CycleVectorPair e5_vectors(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex g11 = checked(k.g1 - 1.0, "gamma1 - 1");
  const Complex g21 = checked(k.g2 - 1.0, "gamma2 - 1");
  const Complex ab = k.A * k.B;
  CycleVectorPair v;
  v.e5 << 1.0, -k.g2 * (k.A - k.g1) * (k.B - k.g1) / (ab * g21 * g11),
      -k.g1 * (k.A - k.g2) * (k.B - k.g2) / (ab * g21 * g11), 1.0;
  v.e5_dual << 1.0, -(k.A - k.g1) * (k.B - k.g1) / (k.g1 * g11 * g21),
      -(k.A - k.g2) * (k.B - k.g2) / (k.g2 * g11 * g21), 1.0;
  return v;
}

std::array<Complex, 4> delta5_pairings(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex g12 = k.g1 * k.g2;
  const Complex mid = -g12 / checked((k.A - g12) * (1.0 - k.B), "I_h(D5,D2)");
  return {-(1.0 - k.A) * g12 /
              checked((k.A - g12) * (1.0 - k.g1) * (1.0 - k.g2), "I_h(D5,D1)"),
          mid, mid,
          -(k.B - g12) / checked((1.0 - k.B) * (1.0 - k.g1) * (1.0 - k.g2), "I_h(D5,D4)")};
}

Complex delta5_self_intersection(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex g12 = k.g1 * k.g2;
  return -(k.A * k.B + g12) / checked((k.A - g12) * (1.0 - k.B), "I_h(D5,D5)");
}

IntersectionMatrix h678_matrix(const HypergeometricParams& p) {
  const auto u = h678_upper(p);
  const auto v = h678_upper(conjugate_params(p));
  Eigen::MatrixXcd h(3, 3);
  h << u[0], u[1], u[2],
       v[1], u[3], u[4],
       v[2], v[4], u[5];
  return {h, CycleBasis::Cycles678, CycleBasis::Cycles678};
}

Complex h678_det_closed_form(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex g12 = k.g1 * k.g2;
  const Complex num = k.B * k.B * (k.A - g12) * (k.A - g12) * (k.A * k.B + g12);
  const Complex den = (k.A - 1.0) * (k.A - k.g1) * (k.A - k.g2) * (k.B - 1.0) * (k.B - 1.0) *
                      (k.B - k.g1) * (k.B - k.g2) * (k.B - g12);
  return num / checked(den, "det H678");
}

IntersectionMatrix h_hat_matrix(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex A = k.A, B = k.B, g1 = k.g1, g2 = k.g2, g12 = g1 * g2, ab = A * B;
  const Complex d = checked((1.0 - A) * (A - g12) * (1.0 - B) * (1.0 - B), "Hhat");
  const Complex d4 = checked((A - g12) * (1.0 - B), "Hhat row 4");
  const Complex d22 = checked(d * (A - g1) * (B - g1), "Hhat(2,2)");
  const Complex d33 = checked(d * (A - g2) * (B - g2), "Hhat(3,3)");

  Eigen::MatrixXcd h(4, 4);
  h << -ab * (1.0 - g1) * (1.0 - g2) / d, -ab * (1.0 - g2) / d, -ab * (1.0 - g1) / d, -ab / d4,
       ab * g1 * (1.0 - g2) / d, ab * (ab - g1) * g1 * (1.0 - g2) / d22, ab * g1 / d, 0.0,
       ab * (1.0 - g1) * g2 / d, ab * g2 / d, ab * (ab - g2) * (1.0 - g1) * g2 / d33, 0.0,
       -g12 / d4, 0.0, 0.0, -(ab + g12) / d4;
  return {h, CycleBasis::HatCycles, CycleBasis::HatCycles};
}

Complex h_hat_det_closed_form(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex A = k.A, B = k.B, g1 = k.g1, g2 = k.g2, g12 = g1 * g2;
  const Complex num = A * A * A * B * B * B * (B - g12) * g1 * g1 * g2 * g2;
  const Complex omb = 1.0 - B;
  const Complex den = (1.0 - A) * (A - g1) * (A - g2) * std::pow(A - g12, 3) *
                      omb * omb * omb * omb * omb * (B - g1) * (B - g2);
  return num / checked(den, "det Hhat");
}

Mat2 h_sub_inverse_reduced(const HypergeometricParams& p, SubBlock which) {
  const Abg k(p);
  const Complex A = k.A, B = k.B, ab = A * B, g12 = k.g1 * k.g2;
  // The two blocks differ by gamma1 <-> gamma2.
  const Complex g = which == SubBlock::B12 ? k.g1 : k.g2;
  const Complex pre = (A - g12) * (1.0 - B) / checked(ab * g * g, "Hhat sub-block");
  Mat2 m;
  m << (ab - g) * g, (A - g) * (B - g),
       -(A - g) * (B - g) * g, -(A - g) * (B - g) * (1.0 - g);
  return pre * m;
}

Mat2 h_sub_inverse(const HypergeometricParams& p, SubBlock which) {
  const CircuitConstants k = circuit_constants(p);
  const Complex other = which == SubBlock::B12 ? k.gamma2 : k.gamma1;
  return h_sub_inverse_reduced(p, which) / (1.0 - other);
}

BasisChange basis_changes(const HypergeometricParams& p) {
  const Abg k(p);
  const Complex A = k.A, B = k.B, g1 = k.g1, g2 = k.g2, ab = A * B, g12 = g1 * g2;
  const Complex dab = checked((1.0 - A) * (1.0 - B), "(1-alpha)(1-beta)");
  const Complex og1 = checked(1.0 - g1, "1 - gamma1");
  const Complex og2 = checked(1.0 - g2, "1 - gamma2");
  BasisChange bc;
  bc.P << ab * og1 * og2 / (dab * g12), 0.0, 0.0, 0.0,
          -ab * og2 / (dab * g2), g1 / og1, 0.0, 0.0,
          -ab * og1 / (dab * g1), 0.0, g2 / og2, 0.0,
          0.0, 0.0, 0.0, 1.0;
  bc.P_prime = bc.P;
  bc.P_prime(3, 0) = ab / dab;
  bc.P_prime(3, 1) = -g12 / (og1 * og2);
  bc.P_prime(3, 2) = -g12 / (og1 * og2);
  bc.P_prime(3, 3) = ab * g12 / checked((A - g12) * (B - g12), "P'(4,4)");
  return bc;
}

Mat4 hat_transform(const HypergeometricParams& p) {
  Mat4 e = Mat4::Identity();
  e.row(3) = e5_vectors(p).e5;
  return basis_changes(p).P * e;
}

IntersectionMatrix c_matrix(const HypergeometricParams& p, const Point2& x) {
  const ExponentSet e = derive_exponents(p);
  const Complex r = r_poly(x);
  if (std::abs(r) < kDegeneracyTol) throw SingularLocusError("C(x): R(x) = 0");
  for (const Complex l : {e.l1, e.l2, e.l3, e.l4, e.l0, e.l124, e.l134m, e.l234m})
    checked(l, "cohomology exponent");

  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(4, 4);
  c(0, 0) = (1.0 / e.l1 + 1.0 / e.l2) * (1.0 / e.l3 + 1.0 / e.l124);
  c(0, 1) = c(1, 0) = 1.0 / (e.l2 * e.l3);
  c(0, 2) = c(2, 0) = 1.0 / (e.l1 * e.l3);
  c(1, 1) = (1.0 / e.l0 + 1.0 / e.l2) * (1.0 / e.l3 + 1.0 / e.l134m);
  c(1, 2) = c(2, 1) = -1.0 / (e.l0 * e.l3);
  c(2, 2) = (1.0 / e.l0 + 1.0 / e.l1) * (1.0 / e.l3 + 1.0 / e.l234m);
  c(3, 3) = 2.0 / (e.l3 * e.l4 * r);
  return {c, CycleBasis::CohomologyForms, CycleBasis::CohomologyForms};
}

Complex c_det_closed_form(const HypergeometricParams& p, const Point2& x) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  const Complex l3 = -a + c1 + c2 - 1.0;
  const Complex den = (a - 1.0) * (a - c1) * (a - c2) * l3 * l3 * l3 * (b - c1 + 1.0) *
                      (b - c2 + 1.0) * (b - c1 - c2 + 2.0) * r_poly(x);
  return -4.0 * b / checked(den, "det C");
}

}  // namespace f4
