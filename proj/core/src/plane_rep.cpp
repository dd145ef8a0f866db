#include "rplane/plane_rep.hpp"

#include <cmath>
#include <sstream>

#include "rplane/errors.hpp"

namespace rplane {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= double(n - i);
  return r;
}

// (s0 - X)^n with X the first (var = 0) or second (var = 1) variable.
PolyUV shifted_power(cplx s0, int var, int n) {
  PolyUV out;
  for (int k = 0; k <= n; ++k) {
    const cplx c = binom(n, k) * PolyUV::ipow(s0, n - k) * (k % 2 == 0 ? 1.0 : -1.0);
    if (var == 0)
      out.add_term(k, 0, c);
    else
      out.add_term(0, k, c);
  }
  return out;
}

GaussAtom fourier_atom(const GaussAtom& atom) {
  atom.validate();
  const cplx z = atom.zpar;
  const cplx kappa = -kI * kPi / z;
  const cplx W = atom.wave[0] + kI * atom.wave[1];
  const cplx Wb = atom.wave[0] - kI * atom.wave[1];
  const cplx inv_pi_i = 1.0 / (kPi * kI);
  // Moment formula with (W, Wb) replaced by (W - U, Wb - V), U and V the
  // complex coordinates of the frequency variable.
  PolyUV q;
  const PolyUV src = to_uv(atom.poly);
  for (const auto& [k, c] : src.terms()) {
    const int a = k.first;
    const int b = k.second;
    const cplx scale = c * PolyUV::ipow(kappa, b) * PolyUV::ipow(inv_pi_i, a + b);
    for (int t = 0; t <= std::min(a, b); ++t) {
      const cplx f = scale * binom(a, t) * falling(b, t) * PolyUV::ipow(kappa, a - t);
      q += shifted_power(Wb, 1, b - t) * shifted_power(W, 0, a - t) * f;
    }
  }
  GaussAtom out;
  out.coeff = atom.coeff * std::exp(kappa * W * Wb) / (-kI * z);
  out.poly = from_uv(q);
  out.zpar = -1.0 / z;
  out.wave = CVec2{atom.wave[0] / z, atom.wave[1] / z};
  return out;
}

}  // namespace

void GroupElement::validate() const {
  const double scale = std::max({1.0, std::abs(a * d), std::abs(b * c)});
  if (!(std::abs(det() - 1.0) <= 1e-12 * scale)) {
    std::ostringstream os;
    os << "GroupElement: determinant " << det() << " is not 1";
    throw DomainError(os.str());
  }
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

GroupElement matrix_of(const Generator& gen) {
  return std::visit(
      [](const auto& g) -> GroupElement {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LowerUnipotent>)
          return {1, 0, g.c, 1};
        else if constexpr (std::is_same_v<T, Inversion>)
          return {0, 1, -1, 0};
        else
          return {g.a, 0, 0, 1.0 / g.a};
      },
      gen);
}

GroupElement matrix_of(const GeneratorWord& word) {
  GroupElement acc;
  for (const auto& gen : word) acc = acc * matrix_of(gen);
  return acc;
}

GeneratorWord decompose(const GroupElement& g) {
  g.validate();
  GeneratorWord word;
  auto push_diag = [&](double a) {
    if (a != 1.0) word.emplace_back(Diagonal{a});
  };
  auto push_lower = [&](double c) {
    if (c != 0.0) word.emplace_back(LowerUnipotent{c});
  };
  if (g.b == 0.0) {
    push_diag(g.a);
    push_lower(g.a * g.c);
    return word;
  }
  push_diag(g.b);
  push_lower(g.b * g.d);
  word.emplace_back(Inversion{});
  push_lower(g.a / g.b);
  return word;
}

TestFunction fourier(const TestFunction& h) {
  std::vector<GaussAtom> out;
  out.reserve(h.atoms().size());
  for (const auto& a : h.atoms()) out.push_back(fourier_atom(a));
  return TestFunction(std::move(out));
}

TestFunction ana_apply(const Generator& gen, const TestFunction& h) {
  return std::visit(
      [&](const auto& g) -> TestFunction {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LowerUnipotent>)
          return multiply_chirp(h, g.c);
        else if constexpr (std::is_same_v<T, Inversion>)
          return -kI * fourier(h);
        else
          return (1.0 / g.a) * dilate(h, 1.0 / g.a);
      },
      gen);
}

TestFunction ana_apply(const GroupElement& g, const TestFunction& h) {
  const auto word = decompose(g);
  TestFunction out = h;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = ana_apply(*it, out);
  return out;
}

cplx theta(int m, const TestFunction& h, cplx z) {
  if (m < 1) throw DomainError("theta: m must be >= 1");
  if (!(z.imag() > 0.0)) throw DomainError("theta: Im z must be > 0");
  const PolyUV um = PolyUV::monomial(m, 0);
  cplx acc{};
  for (const auto& a : h.atoms()) acc += a.coeff * gauss_moment_uv(to_uv(a.poly) * um, a.zpar + z, a.wave);
  return acc;
}

Poly2 rotation_on_poly_wave(const Poly2& poly, const CVec2& wave) {
  // -i (x1 d2 - x2 d1) acting on poly * exp(2 pi i <w, x>) * radial
  const Poly2 x1 = poly_x1();
  const Poly2 x2 = poly_x2();
  Poly2 inner = x1 * poly.derivative(1) - x2 * poly.derivative(0);
  inner += poly * (2.0 * kPi * kI * (wave[1] * x1 - wave[0] * x2));
  return inner * (-kI);
}

TestFunction infinitesimal(Infinitesimal kind, const TestFunction& h) {
  std::vector<GaussAtom> out(h.atoms());
  const Poly2 x1 = poly_x1();
  const Poly2 x2 = poly_x2();
  for (auto& a : out) {
    if (kind == Infinitesimal::Rotation) {
      a.poly = rotation_on_poly_wave(a.poly, a.wave);
    } else {
      Poly2 p = a.poly + x1 * a.poly.derivative(0) + x2 * a.poly.derivative(1);
      const Poly2 phase = (x1 * x1 + x2 * x2) * (2.0 * kPi * kI * a.zpar) +
                          (x1 * a.wave[0] + x2 * a.wave[1]) * (2.0 * kPi * kI);
      p += a.poly * phase;
      a.poly = std::move(p);
    }
  }
  return TestFunction(std::move(out));
}

TestFunction rotation_polynomial(int j, const TestFunction& h) {
  if (j < 0) throw DomainError("rotation_polynomial: j must be >= 0");
  // apply the factors (X + l) one at a time; they commute
  TestFunction out = h;
  for (int l = 0; l < j; ++l) out = infinitesimal(Infinitesimal::Rotation, out) + double(l) * out;
  return out;
}

TestFunction anat_power(double q, double s, int sigma, const TestFunction& h) {
  if (!(q > 0.0)) throw DomainError("anat_power: q must be > 0");
  if (sigma != 1 && sigma != -1) throw DomainError("anat_power: sigma must be +1 or -1");
  const double scale = std::pow(q, double(sigma));
  return std::pow(q, s + sigma) * dilate(h, scale);
}

cplx d_action(int mplus1, const GroupElement& g, const HalfPlaneFunction& f, cplx z) {
  const cplx den = g.b * z + g.d;
  if (den == cplx{}) throw DomainError("d_action: pole bz + d = 0");
  const cplx w = (g.a * z + g.c) / den;
  return std::pow(den, -mplus1) * f(w);
}

double intertwine_residual(int m, const GroupElement& g, const TestFunction& h, cplx z) {
  const cplx lhs = theta(m, ana_apply(g, h), z);
  const cplx rhs = d_action(m + 1, g, [&](cplx w) { return theta(m, h, w); }, z);
  // theta_m of a low-degree atom can be tiny, so no absolute floor
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace rplane
