#include "maxab/monomial.hpp"

#include <algorithm>
#include <regex>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

struct Raw {
  std::vector<int> perm;
  std::vector<RootOfUnity> phases;
};

Raw raw_mul(const std::vector<int>& pa, const std::vector<RootOfUnity>& fa,
            const std::vector<int>& pb, const std::vector<RootOfUnity>& fb) {
  const std::size_t n = pa.size();
  Raw r{std::vector<int>(n), std::vector<RootOfUnity>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const int mid = pb[j];
    r.perm[j] = pa[mid];
    r.phases[j] = fa[mid] * fb[j];
  }
  return r;
}

std::vector<RootOfUnity> conj_phases(const std::vector<RootOfUnity>& f) {
  std::vector<RootOfUnity> out(f.size());
  std::transform(f.begin(), f.end(), out.begin(), [](const RootOfUnity& x) { return x.conj(); });
  return out;
}

Raw standard_j_raw(int n) {
  // blocks [[0,-1],[1,0]]: column 2b -> row 2b+1 (+1), column 2b+1 -> row 2b (-1)
  Raw j{std::vector<int>(2 * n), std::vector<RootOfUnity>(2 * n)};
  for (int b = 0; b < n; ++b) {
    j.perm[2 * b] = 2 * b + 1;
    j.phases[2 * b] = RootOfUnity::one();
    j.perm[2 * b + 1] = 2 * b;
    j.phases[2 * b + 1] = RootOfUnity::minus_one();
  }
  return j;
}

bool quaternionic_raw(const std::vector<int>& perm, const std::vector<RootOfUnity>& phases) {
  if (perm.size() % 2 != 0) return false;
  const int n = static_cast<int>(perm.size()) / 2;
  const Raw j = standard_j_raw(n);
  const Raw lhs = raw_mul(perm, phases, j.perm, j.phases);
  const Raw rhs = raw_mul(j.perm, j.phases, perm, conj_phases(phases));
  return lhs.perm == rhs.perm && lhs.phases == rhs.phases;
}

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Complex: return "complex";
    case Flavor::Real: return "real";
    case Flavor::Quaternion: return "quaternion";
  }
  return "complex";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "complex") return Flavor::Complex;
  if (s == "real") return Flavor::Real;
  if (s == "quaternion") return Flavor::Quaternion;
  throw ValidationError("unknown flavor '" + s + "'");
}

Monomial::Monomial(std::vector<int> perm, std::vector<RootOfUnity> phases, bool conj,
                   Flavor flavor)
    : perm_(std::move(perm)), phases_(std::move(phases)), conj_(conj), flavor_(flavor) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0) throw ValidationError("monomial: dimension must be positive");
  if (static_cast<int>(phases_.size()) != n)
    throw ValidationError("monomial: perm and phases differ in length");
  std::vector<bool> seen(n, false);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[p]) throw ValidationError("monomial: perm is not a permutation");
    seen[p] = true;
  }
  check_flavor();
}

void Monomial::check_flavor() const {
  if (flavor_ == Flavor::Real) {
    if (conj_) throw ValidationError("monomial: real flavor cannot be antiunitary");
    for (const auto& p : phases_)
      if (p.den() > 2) throw ValidationError("monomial: real flavor needs phases in {0, 1/2}");
  } else if (flavor_ == Flavor::Quaternion) {
    if (conj_) throw ValidationError("monomial: quaternion flavor cannot be antiunitary");
    if (!quaternionic_raw(perm_, phases_))
      throw ValidationError("monomial: matrix does not commute with the quaternionic structure");
  }
}

Monomial Monomial::identity(int dim, Flavor flavor) {
  return scalar(dim, RootOfUnity::one(), flavor);
}

Monomial Monomial::scalar(int dim, RootOfUnity lambda, Flavor flavor) {
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  return {std::move(perm), std::vector<RootOfUnity>(dim, lambda), false, flavor};
}

Monomial Monomial::diagonal(std::vector<RootOfUnity> phases, Flavor flavor) {
  std::vector<int> perm(phases.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  return {std::move(perm), std::move(phases), false, flavor};
}

Monomial Monomial::permutation(std::vector<int> perm, Flavor flavor) {
  const std::size_t n = perm.size();
  return {std::move(perm), std::vector<RootOfUnity>(n), false, flavor};
}

Monomial Monomial::tau(int dim) {
  return identity(dim).with_conj(true);
}

std::optional<RootOfUnity> Monomial::entry(int row, int col) const {
  if (perm_.at(col) == row) return phases_[col];
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (dim() != o.dim()) throw ValidationError("monomial product: dimension mismatch");
  if (flavor_ != o.flavor_) throw ValidationError("monomial product: flavor mismatch");
  Raw r = conj_ ? raw_mul(perm_, phases_, o.perm_, conj_phases(o.phases_))
                : raw_mul(perm_, phases_, o.perm_, o.phases_);
  Monomial out;
  out.perm_ = std::move(r.perm);
  out.phases_ = std::move(r.phases);
  out.conj_ = conj_ != o.conj_;
  out.flavor_ = flavor_;
  return out;
}

Monomial Monomial::inverse() const {
  const int n = dim();
  Monomial out;
  out.perm_.assign(n, 0);
  out.phases_.assign(n, RootOfUnity{});
  for (int j = 0; j < n; ++j) {
    out.perm_[perm_[j]] = j;
    out.phases_[perm_[j]] = conj_ ? phases_[j] : phases_[j].inverse();
  }
  out.conj_ = conj_;
  out.flavor_ = flavor_;
  return out;
}

Monomial Monomial::conjugate() const {
  Monomial out = *this;
  out.phases_ = conj_phases(phases_);
  return out;
}

Monomial Monomial::scaled(RootOfUnity lambda) const {
  Monomial out = *this;
  for (auto& p : out.phases_) p *= lambda;
  out.check_flavor();
  return out;
}

Monomial Monomial::pow(long long e) const {
  Monomial base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Monomial acc = identity(dim(), flavor_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Monomial Monomial::with_flavor(Flavor f) const {
  Monomial out = *this;
  out.flavor_ = f;
  out.check_flavor();
  return out;
}

Monomial Monomial::with_conj(bool c) const {
  Monomial out = *this;
  out.conj_ = c;
  out.check_flavor();
  return out;
}

std::optional<RootOfUnity> Monomial::scalar_value() const {
  if (conj_) return std::nullopt;
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] != j || phases_[j] != phases_[0]) return std::nullopt;
  return phases_[0];
}

bool Monomial::is_identity() const {
  auto s = scalar_value();
  return s && s->is_one();
}

std::vector<RootOfUnity> Monomial::diagonal_phases() const {
  std::vector<RootOfUnity> out;
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] == j) out.push_back(phases_[j]);
  return out;
}

Monomial kron(const Monomial& a, const Monomial& b) {
  if (a.conj() || b.conj()) throw ValidationError("kron: antiunitary factors unsupported");
  const int na = a.dim(), nb = b.dim();
  std::vector<int> perm(na * nb);
  std::vector<RootOfUnity> phases(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      perm[i * nb + j] = a.perm()[i] * nb + b.perm()[j];
      phases[i * nb + j] = a.phases()[i] * b.phases()[j];
    }
  const Flavor f = (a.flavor() == Flavor::Real && b.flavor() == Flavor::Real) ? Flavor::Real
                                                                               : Flavor::Complex;
  return {std::move(perm), std::move(phases), false, f};
}

Monomial direct_sum(const Monomial& a, const Monomial& b) {
  if (a.conj() != b.conj()) throw ValidationError("direct_sum: mixed antiunitary flags");
  if (a.flavor() != b.flavor()) throw ValidationError("direct_sum: flavor mismatch");
  std::vector<int> perm = a.perm();
  std::vector<RootOfUnity> phases = a.phases();
  for (int j = 0; j < b.dim(); ++j) {
    perm.push_back(b.perm()[j] + a.dim());
    phases.push_back(b.phases()[j]);
  }
  return {std::move(perm), std::move(phases), a.conj(), a.flavor()};
}

bool is_quaternionic(const Monomial& m) {
  return !m.conj() && quaternionic_raw(m.perm(), m.phases());
}

Monomial standard_j(int n) {
  Raw j = standard_j_raw(n);
  return {std::move(j.perm), std::move(j.phases), false, Flavor::Real};
}

Monomial clock(int n, int block) {
  if (n <= 0 || block <= 0) throw ValidationError("clock: sizes must be positive");
  std::vector<RootOfUnity> phases;
  phases.reserve(n * block);
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < block; ++t) phases.emplace_back(r, n);
  return Monomial::diagonal(std::move(phases));
}

Monomial shift(int n, int block) {
  if (n <= 0 || block <= 0) throw ValidationError("shift: sizes must be positive");
  std::vector<int> perm(n * block);
  for (int c = 0; c < n; ++c)
    for (int t = 0; t < block; ++t) perm[c * block + t] = ((c - 1 + n) % n) * block + t;
  return Monomial::permutation(std::move(perm));
}

Monomial named_i_pq(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw ValidationError("I_pq: bad dimensions");
  std::vector<RootOfUnity> phases(p + q);
  for (int i = 0; i < p; ++i) phases[i] = RootOfUnity::minus_one();
  return Monomial::diagonal(std::move(phases), Flavor::Real);
}

Monomial named_j(int n) {
  if (n <= 0) throw ValidationError("J: n must be positive");
  std::vector<int> perm(2 * n);
  std::vector<RootOfUnity> phases(2 * n);
  for (int j = 0; j < n; ++j) {
    perm[j] = n + j;  // lower-left block -I
    phases[j] = RootOfUnity::minus_one();
    perm[n + j] = j;  // upper-right block I
  }
  return {std::move(perm), std::move(phases), false, Flavor::Real};
}

Monomial named_j_prime(int n) {
  if (n <= 0) throw ValidationError("J': n must be positive");
  std::vector<int> perm(2 * n);
  for (int j = 0; j < n; ++j) {
    perm[j] = n + j;
    perm[n + j] = j;
  }
  return Monomial::permutation(std::move(perm), Flavor::Real);
}

Monomial named_k(int n) {
  if (n <= 0) throw ValidationError("K: n must be positive");
  // column block c -> row block 3 - c with signs (-, +, -, +) for c = 0..3
  const int sign_minus[4] = {1, 0, 1, 0};
  std::vector<int> perm(4 * n);
  std::vector<RootOfUnity> phases(4 * n);
  for (int c = 0; c < 4; ++c)
    for (int t = 0; t < n; ++t) {
      perm[c * n + t] = (3 - c) * n + t;
      if (sign_minus[c]) phases[c * n + t] = RootOfUnity::minus_one();
    }
  return {std::move(perm), std::move(phases), false, Flavor::Real};
}

// ---------------------------------------------------------------------------

QuatUnit QuatUnit::operator*(const QuatUnit& o) const {
  // products of basis elements 1, i, j, k: (sign, axis)
  static constexpr int table_axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int table_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {sign * o.sign * table_sign[axis][o.axis], table_axis[axis][o.axis]};
}

QuatUnit QuatUnit::inverse() const {
  return axis == 0 ? *this : QuatUnit{-sign, axis};
}

std::array<QuatUnit, 8> QuatUnit::all() {
  std::array<QuatUnit, 8> out;
  for (int a = 0; a < 4; ++a) {
    out[2 * a] = {1, a};
    out[2 * a + 1] = {-1, a};
  }
  return out;
}

QuatMonomial::QuatMonomial(std::vector<int> perm, std::vector<QuatUnit> units)
    : perm_(std::move(perm)), units_(std::move(units)) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0 || static_cast<int>(units_.size()) != n)
    throw ValidationError("quaternion monomial: malformed description");
  std::vector<bool> seen(n, false);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[p])
      throw ValidationError("quaternion monomial: perm is not a permutation");
    seen[p] = true;
  }
  for (const auto& u : units_)
    if ((u.sign != 1 && u.sign != -1) || u.axis < 0 || u.axis > 3)
      throw ValidationError("quaternion monomial: bad unit");
}

QuatMonomial QuatMonomial::identity(int n) { return scalar(n, QuatUnit{}); }

QuatMonomial QuatMonomial::scalar(int n, QuatUnit q) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return {std::move(perm), std::vector<QuatUnit>(n, q)};
}

QuatMonomial QuatMonomial::from_real(const Monomial& real) {
  std::vector<QuatUnit> units(real.dim());
  for (int j = 0; j < real.dim(); ++j) {
    const auto& p = real.phases()[j];
    if (p.den() > 2 || real.conj()) throw ValidationError("from_real: matrix is not real");
    units[j] = QuatUnit{p.is_one() ? 1 : -1, 0};
  }
  return {real.perm(), std::move(units)};
}

QuatMonomial QuatMonomial::parse_tag(const std::string& tag) {
  static const std::regex re(R"(^\s*(-?)([ijk])I\((\d+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(tag, m, re)) throw ValidationError("malformed quaternion tag '" + tag + "'");
  const int n = std::stoi(m[3].str());
  if (n <= 0) throw ValidationError("malformed quaternion tag '" + tag + "'");
  const char c = m[2].str()[0];
  const int axis = c == 'i' ? 1 : (c == 'j' ? 2 : 3);
  return scalar(n, QuatUnit{m[1].str().empty() ? 1 : -1, axis});
}

QuatMonomial QuatMonomial::operator*(const QuatMonomial& o) const {
  if (dim() != o.dim()) throw ValidationError("quaternion product: dimension mismatch");
  std::vector<int> perm(dim());
  std::vector<QuatUnit> units(dim());
  for (int j = 0; j < dim(); ++j) {
    const int mid = o.perm_[j];
    perm[j] = perm_[mid];
    units[j] = units_[mid] * o.units_[j];
  }
  return {std::move(perm), std::move(units)};
}

Monomial complex_image(QuatUnit q) {
  const Monomial one = Monomial::identity(2);
  const Monomial qi = Monomial::diagonal({RootOfUnity(1, 4), RootOfUnity(3, 4)});
  const Monomial qj({1, 0}, {RootOfUnity::one(), RootOfUnity::minus_one()});
  Monomial base = q.axis == 0 ? one : q.axis == 1 ? qi : q.axis == 2 ? qj : qi * qj;
  return q.sign < 0 ? base.scaled(RootOfUnity::minus_one()) : base;
}

Monomial quaternion_embed(const QuatMonomial& q) {
  const int n = q.dim();
  std::vector<int> perm(2 * n);
  std::vector<RootOfUnity> phases(2 * n);
  for (int c = 0; c < n; ++c) {
    const Monomial block = complex_image(q.units()[c]);
    const int r = q.perm()[c];
    for (int t = 0; t < 2; ++t) {
      perm[2 * c + t] = 2 * r + block.perm()[t];
      phases[2 * c + t] = block.phases()[t];
    }
  }
  return {std::move(perm), std::move(phases), false, Flavor::Quaternion};
}

Monomial phi_embed(const QuatMonomial& q) {
  // layout[r][c] = (component, sign) with component 0..3 for A, B, C, D
  static constexpr int comp[4][4] = {{0, 2, 1, 3}, {2, 0, 3, 1}, {1, 3, 0, 2}, {3, 1, 2, 0}};
  static constexpr int sgn[4][4] = {{1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}};
  const int n = q.dim();
  std::vector<int> perm(4 * n, -1);
  std::vector<RootOfUnity> phases(4 * n);
  for (int col = 0; col < n; ++col) {
    const QuatUnit u = q.units()[col];
    const int row = q.perm()[col];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if (comp[r][c] != u.axis) continue;
        perm[c * n + col] = r * n + row;
        if (sgn[r][c] * u.sign < 0) phases[c * n + col] = RootOfUnity::minus_one();
      }
  }
  return {std::move(perm), std::move(phases), false, Flavor::Real};
}

// ---------------------------------------------------------------------------

std::string to_string(Center c) {
  switch (c) {
    case Center::Circle: return "circle";
    case Center::Sign: return "sign";
    case Center::SignWithI: return "sign_with_i";
  }
  return "circle";
}

ProjectiveElement::ProjectiveElement(Monomial rep, Center center)
    : rep_(std::move(rep)), center_(center) {
  if (center_ == Center::Sign && rep_.conj())
    throw ValidationError("projective element: antiunitary element over <-I> requires the lifted center");
}

bool ProjectiveElement::center_contains(RootOfUnity lambda) const {
  if (center_ == Center::Circle) return true;
  return lambda.den() <= 2;
}

Monomial ProjectiveElement::canonical() const {
  const RootOfUnity p0 = rep_.phases()[0];
  if (center_ == Center::Circle) {
    if (p0.is_one()) return rep_;
    return rep_.scaled(p0.inverse());
  }
  if (2 * p0.num() >= p0.den()) return rep_.scaled(RootOfUnity::minus_one());
  return rep_;
}

ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b) {
  if (a.center() != b.center()) throw ValidationError("projective product: center mismatch");
  return {a.rep() * b.rep(), a.center()};
}

ProjectiveElement inverse(const ProjectiveElement& a) { return {a.rep().inverse(), a.center()}; }

std::optional<RootOfUnity> proportionality(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim() || a.conj() != b.conj() || a.perm() != b.perm()) return std::nullopt;
  const RootOfUnity lambda = a.phases()[0] * b.phases()[0].inverse();
  for (int j = 1; j < a.dim(); ++j)
    if (a.phases()[j] * b.phases()[j].inverse() != lambda) return std::nullopt;
  return lambda;
}

bool equal(const ProjectiveElement& a, const ProjectiveElement& b) {
  if (a.center() != b.center() || a.rep().flavor() != b.rep().flavor()) return false;
  const auto lambda = proportionality(a.rep(), b.rep());
  return lambda && a.center_contains(*lambda);
}

std::size_t ProjectiveHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.conj() ? 0x9e3779b97f4a7c15ULL : 0;
  for (int j = 0; j < m.dim(); ++j) {
    h ^= std::hash<int>{}(m.perm()[j]) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<RootOfUnity>{}(m.phases()[j]) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace maxab
