#include "maxab/star_verifier.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>
#include <functional>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

// X -> sign * M op(X) M^-1 with op the transpose when `transpose` is set;
// M e_j = phase[j] e_perm[j].
struct UnitOp {
  std::vector<int> perm;
  std::vector<RootOfUnity> phase;
  bool transpose = false;
};

UnitOp op_of(const Monomial& m, bool transpose) { return {m.perm(), m.phases(), transpose}; }

// Basis adapted to the rotation pairs: f_p = (e_p - i e_q)/sqrt2, f_q = (e_p + i e_q)/sqrt2.
struct AdaptedBasis {
  std::vector<int> partner;   // partner[j] == j for unpaired coordinates
  std::vector<char> first;    // p of its pair
  std::vector<std::vector<int>> weights;  // weights[j][d] for torus direction d

  bool paired(int j) const { return partner[j] != j; }

  // Matrix part of m in the f-basis; the antiunitary flag folds the swap
  // coming from conj(f_p) = f_q into the result.
  std::optional<UnitOp> transform(const Monomial& m) const {
    const int dim = m.dim();
    std::vector<int> perm(dim);
    std::vector<RootOfUnity> phase(dim);
    for (int j = 0; j < dim; ++j) {
      if (!paired(j)) {
        if (paired(m.perm()[j])) return std::nullopt;
        perm[j] = m.perm()[j];
        phase[j] = m.phases()[j];
        continue;
      }
      if (!first[j]) continue;
      const int p = j, q = partner[j];
      const int ip = m.perm()[p], iq = m.perm()[q];
      if (!paired(ip) || partner[ip] != iq) return std::nullopt;
      const RootOfUnity a = m.phases()[p], b = m.phases()[q];
      const bool same = a == b;
      if (!same && !(b == a * RootOfUnity::minus_one())) return std::nullopt;
      const int fp = first[ip] ? ip : iq, fq = partner[fp];
      const RootOfUnity i = RootOfUnity::i(), mi = RootOfUnity(3, 4);
      if (first[ip]) {
        perm[p] = same ? fp : fq;
        perm[q] = same ? fq : fp;
        phase[p] = phase[q] = a;
      } else if (same) {
        perm[p] = fq;
        phase[p] = a * mi;
        perm[q] = fp;
        phase[q] = a * i;
      } else {
        perm[p] = fp;
        phase[p] = a * i;
        perm[q] = fq;
        phase[q] = a * mi;
      }
    }
    if (m.conj()) {
      // M S with S the pair swap
      std::vector<int> p2(dim);
      std::vector<RootOfUnity> ph2(dim);
      for (int j = 0; j < dim; ++j) {
        p2[j] = perm[partner[j]];
        ph2[j] = phase[partner[j]];
      }
      return UnitOp{std::move(p2), std::move(ph2), true};
    }
    return UnitOp{std::move(perm), std::move(phase), false};
  }
};

std::optional<AdaptedBasis> adapted_basis(const AbelianPresentation& f) {
  const int dim = f.matrix_dim();
  AdaptedBasis b;
  b.partner.resize(dim);
  for (int j = 0; j < dim; ++j) b.partner[j] = j;
  b.first.assign(dim, 0);
  const int nd = f.torus_dim();
  b.weights.assign(dim, std::vector<int>(nd, 0));
  std::vector<char> diagonal(dim, 0);
  const RootOfUnity i = RootOfUnity::i(), mi = RootOfUnity(3, 4);
  for (int d = 0; d < nd; ++d)
    for (const auto& e : f.torus[d].entries()) {
      if (e.row == e.col) {
        if (e.value == i) {
          b.weights[e.row][d] = 1;
        } else if (e.value == mi) {
          b.weights[e.row][d] = -1;
        } else {
          return std::nullopt;
        }
        diagonal[e.row] = 1;
        continue;
      }
      if (!(e.value.is_one() || e.value == RootOfUnity::minus_one())) return std::nullopt;
      const int p = std::min(e.row, e.col), q = std::max(e.row, e.col);
      if ((b.partner[p] != p && b.partner[p] != q) || (b.partner[q] != q && b.partner[q] != p)) return std::nullopt;
      b.partner[p] = q;
      b.partner[q] = p;
      b.first[p] = 1;
      if (e.row == q) {
        // t e_p = c e_q gives weights c on f_p and -c on f_q
        const int c = e.value.is_one() ? 1 : -1;
        b.weights[p][d] = c;
        b.weights[q][d] = -c;
      }
    }
  for (int j = 0; j < dim; ++j)
    if (diagonal[j] && b.paired(j)) return std::nullopt;
  return b;
}

// Involution of gl whose +1 eigenspace is the complexified Lie algebra (O and Sp).
std::optional<UnitOp> theta(const AbelianPresentation& f, const AdaptedBasis& b) {
  const int dim = f.matrix_dim();
  if (f.family == Family::PO) {
    // Gram matrix of the real form in the f-basis is the pair swap
    UnitOp op;
    op.perm = b.partner;
    op.phase.assign(dim, RootOfUnity::one());
    op.transpose = true;
    return op;
  }
  if (f.family == Family::PSp) return op_of(standard_j(f.n), true);
  return std::nullopt;
}

}  // namespace

std::string to_string(VerifyMethod m) { return m == VerifyMethod::Exact ? "exact-rational" : "floating"; }

std::optional<int> fixed_dim_exact(const AbelianPresentation& f) {
  f.validate();
  const int dim = f.matrix_dim();
  const auto basis = adapted_basis(f);
  if (!basis) return std::nullopt;
  bool has_pairs = false;
  for (int j = 0; j < dim; ++j) has_pairs = has_pairs || basis->paired(j);
  if (has_pairs && f.family == Family::PSp) return std::nullopt;

  std::vector<UnitOp> ops;
  bool antiunitary = false;
  for (const auto& g : f.generators) {
    auto op = basis->transform(g.rep());
    if (!op) return std::nullopt;
    antiunitary = antiunitary || g.conj();
    ops.push_back(std::move(*op));
  }
  if (auto t = theta(f, *basis)) ops.push_back(std::move(*t));

  auto compatible = [&](int a, int c) { return basis->weights[a] == basis->weights[c]; };
  const int units = dim * dim;
  std::vector<char> seen(units, 0);
  std::vector<RootOfUnity> coef(units);
  int fixed = 0;
  for (int start = 0; start < units; ++start) {
    if (seen[start] || !compatible(start / dim, start % dim)) continue;
    seen[start] = 1;
    coef[start] = RootOfUnity::one();
    std::vector<int> queue{start};
    bool alive = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (const auto& op : ops) {
        int a = x / dim, c = x % dim;
        RootOfUnity s = RootOfUnity::one();
        if (op.transpose) {
          std::swap(a, c);
          s = RootOfUnity::minus_one();
        }
        // M E_ac M^-1 = phase_a / phase_c E_{perm a, perm c}
        s = s * op.phase[a] * op.phase[c].inverse();
        const int y = op.perm[a] * dim + op.perm[c];
        if (!compatible(op.perm[a], op.perm[c])) throw Error("fixed_dim: generator does not centralize the torus");
        const RootOfUnity value = coef[x] * s;
        if (!seen[y]) {
          seen[y] = 1;
          coef[y] = value;
          queue.push_back(y);
        } else if (!(coef[y] == value)) {
          alive = false;
        }
      }
    }
    if (alive) ++fixed;
  }
  if (f.family == Family::PU || (f.family == Family::TwistedPU && !antiunitary)) --fixed;
  return fixed;
}

FixedAlgebraReport fixed_dim_floating(const AbelianPresentation& f) {
  f.validate();
  using Mat = Eigen::MatrixXcd;
  using C = std::complex<double>;
  const int dim = f.matrix_dim();
  if (dim > kFloatingMaxDim) throw BoundError("fixed_dim: floating path limited to matrix size 16");
  const int units = dim * dim;

  auto dense = [&](const Monomial& m) {
    Mat out = Mat::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) out(m.perm()[j], j) = C(m.phases()[j].real(), m.phases()[j].imag());
    return out;
  };
  auto vec = [&](const Mat& x) {
    Eigen::VectorXcd v(units);
    for (int a = 0; a < dim; ++a)
      for (int c = 0; c < dim; ++c) v(a * dim + c) = x(a, c);
    return v;
  };
  // Rows of the map X -> L(X) as a units x units block.
  auto block = [&](const std::function<Mat(const Mat&)>& l) {
    Mat out(units, units);
    for (int u = 0; u < units; ++u) {
      Mat e = Mat::Zero(dim, dim);
      e(u / dim, u % dim) = 1.0;
      out.col(u) = vec(l(e));
    }
    return out;
  };

  std::vector<Mat> blocks;
  for (const auto& g : f.generators) {
    const Mat a = dense(g.rep());
    const Mat ai = a.adjoint();
    if (g.conj()) {
      blocks.push_back(block([&](const Mat& x) -> Mat { return -a * x.transpose() * ai - x; }));
    } else {
      blocks.push_back(block([&](const Mat& x) -> Mat { return a * x * ai - x; }));
    }
  }
  for (const auto& t : f.torus) {
    Mat td = Mat::Zero(dim, dim);
    for (const auto& e : t.entries()) td(e.row, e.col) = C(e.value.real(), e.value.imag());
    blocks.push_back(block([&](const Mat& x) -> Mat { return td * x - x * td; }));
  }
  if (f.family == Family::PO) {
    blocks.push_back(block([&](const Mat& x) -> Mat { return x + x.transpose(); }));
  } else if (f.family == Family::PSp) {
    const Mat j = dense(standard_j(f.n));
    const Mat ji = j.adjoint();
    blocks.push_back(block([&](const Mat& x) -> Mat { return x + j * x.transpose() * ji; }));
  } else {
    Mat tr = Mat::Zero(1, units);
    for (int a = 0; a < dim; ++a) tr(0, a * dim + a) = 1.0;
    blocks.push_back(tr);
  }

  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Mat stacked(rows, units);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  Eigen::VectorXd sv;
  if (rows > units) {
    const Mat r = Eigen::HouseholderQR<Mat>(stacked).matrixQR().topRows(units).triangularView<Eigen::Upper>();
    sv = Eigen::BDCSVD<Mat>(r).singularValues();
  } else {
    sv = Eigen::BDCSVD<Mat>(stacked).singularValues();
  }
  int nullity = units - static_cast<int>(sv.size());
  double residual = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= kSingularValueThreshold) {
      ++nullity;
      residual = std::max(residual, sv(i));
    }

  FixedAlgebraReport rep;
  rep.family = f.family;
  rep.n = f.n;
  rep.dim_F = f.torus_dim();
  rep.dim_fixed = nullity;
  rep.method = VerifyMethod::Floating;
  rep.residual = residual;
  return rep;
}

FixedAlgebraReport fixed_dim(const AbelianPresentation& f, bool force_floating) {
  if (!force_floating)
    if (const auto d = fixed_dim_exact(f)) {
      FixedAlgebraReport rep;
      rep.family = f.family;
      rep.n = f.n;
      rep.dim_F = f.torus_dim();
      rep.dim_fixed = *d;
      return rep;
    }
  return fixed_dim_floating(f);
}

bool verify_star(const ClassInvariant& inv) {
  const AbelianPresentation f = canonical_rep(inv);
  const auto d = fixed_dim_exact(f);
  if (!d) throw Error("verify_star: canonical representative is not monomial in the torus-adapted basis");
  return *d == f.torus_dim();
}

}  // namespace maxab
