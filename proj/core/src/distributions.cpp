#include "rplane/distributions.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "rplane/errors.hpp"
#include "rplane/lattice.hpp"

namespace rplane {

namespace {

mpq_class rational_lcm(const mpq_class& x, const mpq_class& y) {
  mpz_class n, d;
  mpz_lcm(n.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
  mpz_gcd(d.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  mpq_class out(n, d);
  out.canonicalize();
  return out;
}

mpq_class p_power(std::int64_t p, int e) {
  mpz_class base(static_cast<long>(p));
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  if (e >= 0) return mpq_class(pw);
  mpq_class out(mpz_class(1), pw);
  out.canonicalize();
  return out;
}

// j with level == p^j, if any.
std::optional<int> level_exponent(const mpq_class& level, std::int64_t p) {
  if (level <= 0) return std::nullopt;
  mpq_class x = level;
  int j = 0;
  const mpz_class pz(static_cast<long>(p));
  while (x.get_den() == 1 && x.get_num() != 1) {
    if (mpz_divisible_p(x.get_num_mpz_t(), pz.get_mpz_t()) == 0) return std::nullopt;
    x /= pz;
    ++j;
  }
  while (x.get_num() == 1 && x.get_den() != 1) {
    if (mpz_divisible_p(x.get_den_mpz_t(), pz.get_mpz_t()) == 0) return std::nullopt;
    x *= pz;
    --j;
  }
  if (x != 1) return std::nullopt;
  return j;
}

std::int64_t int_pow(std::int64_t p, int r) {
  std::int64_t out = 1;
  for (int i = 0; i < r; ++i) out *= p;
  return out;
}

double real_pow(std::int64_t p, int e) { return std::pow(double(p), double(e)); }

cplx unit_phase(double turns) {
  // exp(2 pi i turns) with turns reduced mod 1 first
  const double t = turns - std::floor(turns);
  return std::polar(1.0, 2.0 * kPi * t);
}

void require_prime(std::int64_t p, const char* where) {
  if (!is_prime(p)) {
    std::ostringstream os;
    os << where << ": " << p << " is not prime";
    throw DomainError(os.str());
  }
}

template <class F>
ModDist map_atoms(const ModDist& D, F&& f) {
  ModDist out;
  out.atoms.reserve(D.atoms.size());
  for (const auto& a : D.atoms) out.atoms.push_back(std::visit(f, a));
  return out;
}

double norm2(const RVec2& x) { return x[0] * x[0] + x[1] * x[1]; }

}  // namespace

ModDist& ModDist::operator+=(const ModDist& o) {
  atoms.insert(atoms.end(), o.atoms.begin(), o.atoms.end());
  if (inv_level && o.inv_level)
    inv_level = rational_lcm(*inv_level, *o.inv_level);
  else
    inv_level.reset();
  return *this;
}

ModDist& ModDist::operator*=(cplx s) {
  for (auto& a : atoms) std::visit([&](auto& x) { x.coeff *= s; }, a);
  return *this;
}

bool ModDist::satisfies_inv_level() const {
  if (!inv_level) return true;
  const double lam = inv_level->get_d();
  for (const auto& a : atoms) {
    if (const auto* d = std::get_if<Dirac>(&a)) {
      const double v = lam * norm2(d->point) / 2.0;
      if (std::abs(v - std::round(v)) > 1e-9 * std::max(1.0, std::abs(v))) return false;
    }
  }
  return true;
}

ModDist psi(std::int64_t M) {
  if (M < 1) throw DomainError("psi: M must be >= 1");
  ModDist out;
  out.atoms.push_back(Dirac{-kI, RVec2{std::sqrt(2.0 * double(M)), 0.0}});
  out.inv_level = mpq_class(1);
  return out;
}

ModDist phi(std::int64_t M) {
  if (M < 1) throw DomainError("phi: M must be >= 1");
  ModDist out;
  out.atoms.push_back(ChirpWave{1.0, 0.0, CVec2{std::sqrt(2.0 * double(M)), 0.0}, "phi"});
  return out;
}

ModDist i_atom(std::int64_t a, std::int64_t c, std::int64_t M) {
  if (M < 1) throw DomainError("i_atom: M must be >= 1");
  if (a == 0 && c == 0) throw DomainError("i_atom: (a, c) = (0, 0)");
  if (std::gcd(a, c) != 1) {
    std::ostringstream os;
    os << "i_atom: gcd(" << a << ", " << c << ") != 1";
    throw DomainError(os.str());
  }
  const double root = std::sqrt(2.0 * double(M));
  ModDist out;
  if (a == 0) {
    const double eps = double(-c);
    out.atoms.push_back(Dirac{-kI * eps, RVec2{eps * root, 0.0}});
    out.inv_level = mpq_class(1);
    return out;
  }
  const std::int64_t cbar = mod_inverse(c, a);
  const std::int64_t n = std::llabs(a);
  const std::int64_t num = ((M % n) * cbar) % n;
  // exp(2 i pi M cbar / a), reduced exactly mod a
  const cplx phase = unit_phase(double(a > 0 ? num : (n - num) % n) / double(n));
  out.atoms.push_back(ChirpWave{phase / double(a), double(c) / double(a), CVec2{root / double(a), 0.0}, "I"});
  return out;
}

ModDist i_atom_real(double a, double c, std::int64_t M) {
  if (a == 0.0) throw DomainError("i_atom_real: a must be nonzero");
  if (M < 1) throw DomainError("i_atom_real: M must be >= 1");
  const double root = std::sqrt(2.0 * double(M));
  ModDist out;
  out.atoms.push_back(ChirpWave{1.0 / a, c / a, CVec2{root / a, 0.0}, "I0"});
  return out;
}

GroupElement coset_element(std::int64_t a, std::int64_t c) {
  const Completion bd = complete_to_sl2(a, c);
  return {double(bd.b), double(-a), double(bd.d), double(-c)};
}

ModDist fourier_dist(const ModDist& D) {
  return map_atoms(D, [](const auto& x) -> DistAtom {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Dirac>) {
      return ChirpWave{x.coeff, 0.0, CVec2{-x.point[0], -x.point[1]}, {}};
    } else {
      if (x.beta != 0.0) {
        const cplx ww = x.wave[0] * x.wave[0] + x.wave[1] * x.wave[1];
        const cplx c = x.coeff * (kI / x.beta) * std::exp(-kI * kPi * ww / x.beta);
        return ChirpWave{c, -1.0 / x.beta, CVec2{x.wave[0] / x.beta, x.wave[1] / x.beta}, {}};
      }
      if (x.wave[0].imag() != 0.0 || x.wave[1].imag() != 0.0)
        throw UnimplementedError("fourier_dist: plane wave with complex frequency");
      return Dirac{x.coeff, RVec2{x.wave[0].real(), x.wave[1].real()}};
    }
  });
}

ModDist ana_apply_dist(const Generator& gen, const ModDist& D) {
  return std::visit(
      [&](const auto& g) -> ModDist {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, LowerUnipotent>) {
          ModDist out = map_atoms(D, [&](const auto& x) -> DistAtom {
            using T = std::decay_t<decltype(x)>;
            T y = x;
            if constexpr (std::is_same_v<T, Dirac>)
              y.coeff *= std::exp(kI * kPi * g.c * norm2(x.point));
            else
              y.beta += g.c;
            return y;
          });
          out.inv_level = D.inv_level;
          return out;
        } else if constexpr (std::is_same_v<G, Inversion>) {
          return -kI * fourier_dist(D);
        } else {
          const double a = g.a;
          ModDist out = map_atoms(D, [&](const auto& x) -> DistAtom {
            using T = std::decay_t<decltype(x)>;
            T y = x;
            if constexpr (std::is_same_v<T, Dirac>) {
              y.coeff *= a;
              y.point = RVec2{a * x.point[0], a * x.point[1]};
            } else {
              y.coeff /= a;
              y.beta /= a * a;
              y.wave = CVec2{x.wave[0] / a, x.wave[1] / a};
            }
            return y;
          });
          if (std::abs(a) == 1.0) out.inv_level = D.inv_level;
          return out;
        }
      },
      gen);
}

ModDist ana_apply_dist(const GroupElement& g, const ModDist& D) {
  const auto word = decompose(g);
  ModDist out = D;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = ana_apply_dist(*it, out);
  return out;
}

ModDist transport_dilation(double q, double s, int sigma, const ModDist& D) {
  if (!(q > 0.0)) throw DomainError("transport_dilation: q must be > 0");
  if (sigma != 1 && sigma != -1) throw DomainError("transport_dilation: sigma must be +1 or -1");
  const double qs = std::pow(q, double(sigma));
  return map_atoms(D, [&](const auto& x) -> DistAtom {
    using T = std::decay_t<decltype(x)>;
    T y = x;
    if constexpr (std::is_same_v<T, Dirac>) {
      y.coeff *= std::pow(q, s - sigma);
      y.point = RVec2{x.point[0] / qs, x.point[1] / qs};
    } else {
      y.coeff *= std::pow(q, s + sigma);
      y.beta *= qs * qs;
      y.wave = CVec2{x.wave[0] * qs, x.wave[1] * qs};
    }
    return y;
  });
}

ModDist apply_r(std::int64_t p, int e, const ModDist& D) {
  if (p < 2) throw DomainError("apply_r: p must be >= 2");
  if (e == 0) return D;
  const double q = std::pow(double(p), std::abs(e) / 2.0);
  ModDist out = e > 0 ? transport_dilation(q, -1.0, -1, D) : transport_dilation(q, 1.0, 1, D);
  if (D.inv_level) out.inv_level = *D.inv_level * p_power(p, -e);
  return out;
}

cplx chirp_average_at(std::int64_t p, int r, int ell, const RVec2& x) {
  if (r < 0) throw DomainError("chirp_average_at: r must be >= 0");
  const std::int64_t n = int_pow(p, r);
  const double step = real_pow(p, ell - r) * norm2(x) / 2.0;  // in turns
  const double frac = step - std::floor(step);
  cplx acc{};
  for (std::int64_t s = 0; s < n; ++s) {
    const double t = double(s) * frac;
    acc += std::polar(1.0, 2.0 * kPi * (t - std::floor(t)));
  }
  return acc / double(n);
}

ModDist multiply_chirp_average(std::int64_t p, int r, int ell, const ModDist& D) {
  if (r < 0 || ell < 0) throw DomainError("sigma: r and ell must be >= 0");
  const std::int64_t n = int_pow(p, r);
  const double step = real_pow(p, ell - r);
  ModDist out;
  for (const auto& a : D.atoms) {
    if (const auto* d = std::get_if<Dirac>(&a)) {
      out.atoms.push_back(Dirac{d->coeff * chirp_average_at(p, r, ell, d->point), d->point});
    } else {
      const auto& w = std::get<ChirpWave>(a);
      for (std::int64_t s = 0; s < n; ++s)
        out.atoms.push_back(ChirpWave{w.coeff / double(n), w.beta + double(s) * step, w.wave, w.note});
    }
  }
  if (D.inv_level) {
    if (const auto j = level_exponent(*D.inv_level, p); j && *j <= ell) out.inv_level = p_power(p, std::min(*j, ell - r));
  }
  return out;
}

ModDist sigma_apply(std::int64_t p, int r, int ell, const ModDist& D) {
  require_prime(p, "sigma_apply");
  std::ostringstream os;
  os << "sigma_" << r << "^(" << ell << "): ";
  if (!D.inv_level) throw DomainError(os.str() + "input carries no invariance level");
  const auto j = level_exponent(*D.inv_level, p);
  if (!j) throw DomainError(os.str() + "input level " + D.inv_level->get_str() + " is not a power of p");
  if (*j > ell) {
    os << "input lies in Inv(p^" << *j << "), not in Inv(p^" << ell << ")";
    throw DomainError(os.str());
  }
  return multiply_chirp_average(p, r, ell, D);
}

ModDist tp_plane(std::int64_t p, int m, const ModDist& D) {
  require_prime(p, "tp_plane");
  if (!D.inv_level || *D.inv_level != 1) throw DomainError("tp_plane: input must lie in Inv(1)");
  ModDist out = apply_r(p, 1, D) + apply_r(p, -1, sigma_apply(p, 1, 0, D));
  out *= std::pow(double(p), m / 2.0);
  return out;
}

PreparedTest::PreparedTest(const TestFunction& h) : source_(h) {
  items_.reserve(h.atoms().size());
  for (const auto& a : h.atoms()) items_.push_back(Item{a.coeff, to_uv(a.poly), a.poly, a.zpar, a.wave});
}

cplx PreparedTest::pair_chirp(cplx coeff, double beta, const CVec2& wave) const {
  cplx acc{};
  for (const auto& it : items_)
    acc += it.coeff * gauss_moment_uv(it.poly, it.zpar + beta, CVec2{it.wave[0] + wave[0], it.wave[1] + wave[1]});
  return coeff * acc;
}

cplx PreparedTest::pair(const DistAtom& atom) const {
  if (const auto* d = std::get_if<Dirac>(&atom)) return d->coeff * source_.value(d->point);
  const auto& w = std::get<ChirpWave>(atom);
  return pair_chirp(w.coeff, w.beta, w.wave);
}

cplx PreparedTest::pair(const ModDist& D) const {
  cplx acc{};
  for (const auto& a : D.atoms) acc += pair(a);
  return acc;
}

cplx pair(const ModDist& D, const TestFunction& h) { return PreparedTest(h).pair(D); }

cplx theta_dist(int m, const ModDist& D, cplx z) {
  if (m < 0) throw DomainError("theta_dist: m must be >= 0");
  if (!(z.imag() > 0.0)) throw DomainError("theta_dist: Im z must be > 0");
  const PolyUV um = PolyUV::monomial(m, 0);
  cplx acc{};
  for (const auto& a : D.atoms) {
    if (const auto* d = std::get_if<Dirac>(&a)) {
      const cplx u(d->point[0], d->point[1]);
      acc += d->coeff * PolyUV::ipow(u, m) * std::exp(kI * kPi * z * norm2(d->point));
    } else {
      const auto& w = std::get<ChirpWave>(a);
      acc += w.coeff * gauss_moment_uv(um, z + w.beta, w.wave);
    }
  }
  return acc;
}

}  // namespace rplane
