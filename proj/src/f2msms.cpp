#include "maxab/f2msms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <unordered_map>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

constexpr std::size_t kOrbitCap = 4'000'000;

// Echelon basis keyed by leading bit; reduce() returns the residue.
struct Echelon {
  std::vector<F2Vec> rows;  // rows[b] has leading bit b, or 0

  explicit Echelon(int dim) : rows(dim, 0) {}
  F2Vec reduce(F2Vec v) const {
    for (int b = static_cast<int>(rows.size()) - 1; b >= 0; --b)
      if (((v >> b) & 1) && rows[b]) v ^= rows[b];
    return v;
  }
  bool insert(F2Vec v) {
    v = reduce(v);
    if (!v) return false;
    rows[31 - __builtin_clz(v)] = v;
    return true;
  }
};

std::vector<F2Vec> nullspace(const std::vector<F2Vec>& rows, int dim) {
  // solutions v of parity(row & v) = 0 for every row
  std::vector<F2Vec> red;
  std::vector<int> pivots;
  for (F2Vec r : rows) {
    for (std::size_t t = 0; t < red.size(); ++t)
      if ((r >> pivots[t]) & 1) r ^= red[t];
    if (!r) continue;
    const int p = __builtin_ctz(r);
    for (auto& q : red)
      if ((q >> p) & 1) q ^= r;
    red.push_back(r);
    pivots.push_back(p);
  }
  std::vector<F2Vec> out;
  for (int f = 0; f < dim; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    F2Vec v = F2Vec(1) << f;
    for (std::size_t t = 0; t < red.size(); ++t)
      if ((red[t] >> f) & 1) v |= F2Vec(1) << pivots[t];
    out.push_back(v);
  }
  return out;
}

std::uint64_t sp_order(int k) {
  std::uint64_t o = std::uint64_t(1) << (k * k);
  for (int i = 1; i <= k; ++i) o *= (std::uint64_t(1) << (2 * i)) - 1;
  return o;
}

std::uint64_t gl_order(int r) {
  std::uint64_t o = 1;
  for (int i = 0; i < r; ++i) o *= (std::uint64_t(1) << r) - (std::uint64_t(1) << i);
  return o;
}

using Multiset = std::vector<QuadraticRefinement>;

Multiset sorted_pullback(const F2SymplecticSpace& v, const Multiset& m, const F2Map& g) {
  Multiset out;
  out.reserve(m.size());
  for (const auto& mu : m) out.push_back(mu.pullback(v, g));
  std::sort(out.begin(), out.end());
  return out;
}

struct MultisetHash {
  std::size_t operator()(const Multiset& m) const noexcept {
    std::size_t h = m.size();
    for (const auto& mu : m) h = h * 1000003u ^ mu.bits;
    return h;
  }
};

// Orbit of a multiset under the group generated by gens; witness[x] = g with x = start o g.
struct Orbit {
  std::vector<Multiset> states;
  std::vector<F2Map> witness;
};

Orbit orbit(const F2SymplecticSpace& v, const Multiset& start, const std::vector<F2Map>& gens) {
  Orbit o;
  std::unordered_map<Multiset, std::size_t, MultisetHash> seen;
  Multiset s0 = start;
  std::sort(s0.begin(), s0.end());
  o.states.push_back(s0);
  o.witness.push_back(F2Map::identity(v.dim()));
  seen.emplace(s0, 0);
  for (std::size_t cur = 0; cur < o.states.size(); ++cur)
    for (const auto& g : gens) {
      Multiset next = sorted_pullback(v, o.states[cur], g);
      if (seen.contains(next)) continue;
      if (o.states.size() >= kOrbitCap) throw BoundError("msms orbit exceeds the enumeration bound");
      seen.emplace(next, o.states.size());
      o.states.push_back(std::move(next));
      o.witness.push_back(o.witness[cur] * g);
    }
  return o;
}

}  // namespace

// ---------------------------------------------------------------------------

F2Map F2Map::identity(int dim) {
  F2Map m{dim, std::vector<F2Vec>(dim)};
  for (int j = 0; j < dim; ++j) m.cols[j] = F2Vec(1) << j;
  return m;
}

F2Vec F2Map::apply(F2Vec x) const {
  F2Vec out = 0;
  for (int j = 0; j < dim; ++j)
    if ((x >> j) & 1) out ^= cols[j];
  return out;
}

F2Map F2Map::operator*(const F2Map& b) const {
  F2Map out{dim, std::vector<F2Vec>(dim)};
  for (int j = 0; j < dim; ++j) out.cols[j] = apply(b.cols[j]);
  return out;
}

std::optional<F2Map> F2Map::inverse() const {
  // solve [A | I] by column operations tracked on the images
  std::vector<F2Vec> a = cols;
  F2Map inv = identity(dim);
  // columns a[j] = A e_j; we track inv.cols[j] = preimage-combination with A(inv.cols[j]) = a[j]
  for (int row = 0; row < dim; ++row) {
    int piv = -1;
    for (int j = row; j < dim; ++j)
      if ((a[j] >> row) & 1) {
        piv = j;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[row], a[piv]);
    std::swap(inv.cols[row], inv.cols[piv]);
    for (int j = 0; j < dim; ++j)
      if (j != row && ((a[j] >> row) & 1)) {
        a[j] ^= a[row];
        inv.cols[j] ^= inv.cols[row];
      }
  }
  // now A(inv.cols[j]) = e_j, so inv.cols are the columns of A^-1
  return inv;
}

int f2_rank(std::vector<F2Vec> vs) {
  Echelon e(32);
  int r = 0;
  for (F2Vec v : vs) r += e.insert(v);
  return r;
}

// ---------------------------------------------------------------------------

F2SymplecticSpace::F2SymplecticSpace(std::vector<F2Vec> gram) : gram_(std::move(gram)) {
  const int d = dim();
  if (d > kMaxF2Dim) throw BoundError("F2 space dimension exceeds " + std::to_string(kMaxF2Dim));
  for (int i = 0; i < d; ++i) {
    if (gram_[i] >> d) throw ValidationError("gram row has bits beyond the dimension");
    if ((gram_[i] >> i) & 1) throw ValidationError("gram matrix must have zero diagonal");
    for (int j = 0; j < d; ++j)
      if (((gram_[i] >> j) & 1) != ((gram_[j] >> i) & 1))
        throw ValidationError("gram matrix must be symmetric");
  }
}

F2SymplecticSpace F2SymplecticSpace::standard(int k, int radical) {
  if (k < 0 || radical < 0) throw ValidationError("standard space: negative size");
  std::vector<F2Vec> g(2 * k + radical, 0);
  for (int i = 0; i < k; ++i) {
    g[2 * i] = F2Vec(1) << (2 * i + 1);
    g[2 * i + 1] = F2Vec(1) << (2 * i);
  }
  return F2SymplecticSpace(std::move(g));
}

int F2SymplecticSpace::form(F2Vec x, F2Vec y) const {
  int acc = 0;
  for (int i = 0; i < dim(); ++i)
    if ((x >> i) & 1) acc ^= parity(gram_[i] & y);
  return acc;
}

int F2SymplecticSpace::cross(F2Vec x) const {
  int acc = 0;
  for (int i = 0; i < dim(); ++i)
    if ((x >> i) & 1) acc ^= parity(gram_[i] & x & ~((F2Vec(2) << i) - 1));
  return acc;
}

std::vector<F2Vec> F2SymplecticSpace::radical_basis() const { return nullspace(gram_, dim()); }

bool F2SymplecticSpace::is_standard() const {
  const int r = radical_rank();
  return *this == standard((dim() - r) / 2, r);
}

bool F2SymplecticSpace::is_isometry(const F2Map& g) const {
  if (g.dim != dim() || !g.inverse()) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (form(g.cols[i], g.cols[j]) != static_cast<int>((gram_[i] >> j) & 1)) return false;
  return true;
}

F2Map F2SymplecticSpace::symplectic_basis() const {
  const int d = dim();
  const std::vector<F2Vec> rad = radical_basis();
  Echelon span(d);
  for (F2Vec r : rad) span.insert(r);
  std::vector<F2Vec> rest;
  for (int j = 0; j < d; ++j)
    if (span.insert(F2Vec(1) << j)) rest.push_back(F2Vec(1) << j);
  std::vector<F2Vec> basis;
  while (!rest.empty()) {
    const F2Vec x = rest.front();
    std::size_t yi = 0;
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (form(x, rest[t])) {
        yi = t;
        break;
      }
    if (yi == 0) throw Error("symplectic basis: complement is degenerate");
    const F2Vec y = rest[yi];
    basis.push_back(x);
    basis.push_back(y);
    std::vector<F2Vec> next;
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t == yi) continue;
      F2Vec z = rest[t];
      const int zy = form(z, y), zx = form(z, x);
      if (zy) z ^= x;
      if (zx) z ^= y;
      next.push_back(z);
    }
    rest = std::move(next);
  }
  for (F2Vec r : rad) basis.push_back(r);
  return F2Map{d, basis};
}

std::uint64_t F2SymplecticSpace::isometry_group_order() const {
  const int r = radical_rank();
  const int k = (dim() - r) / 2;
  if (2 * k * r >= 64) throw BoundError("isometry group order overflows");
  return sp_order(k) * (std::uint64_t(1) << (2 * k * r)) * gl_order(r);
}

std::vector<F2Map> F2SymplecticSpace::standard_isometry_generators() const {
  if (!is_standard()) throw Error("isometry generators need a standard space");
  const int r = radical_rank();
  const int w = dim() - r;
  const int d = dim();
  std::vector<F2Map> gens;
  for (F2Vec v = 1; v < (F2Vec(1) << w); ++v) {
    F2Map t = F2Map::identity(d);
    for (int j = 0; j < d; ++j)
      if (form(t.cols[j], v)) t.cols[j] ^= v;
    gens.push_back(std::move(t));
  }
  for (int j = 0; j < w; ++j)
    for (int a = 0; a < r; ++a) {
      F2Map t = F2Map::identity(d);
      t.cols[j] ^= F2Vec(1) << (w + a);
      gens.push_back(std::move(t));
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (a != b) {
        F2Map t = F2Map::identity(d);
        t.cols[w + a] ^= F2Vec(1) << (w + b);
        gens.push_back(std::move(t));
      }
  return gens;
}

void F2SymplecticSpace::for_each_isometry(const std::function<bool(const F2Map&)>& f) const {
  const int d = dim();
  F2Map img{d, std::vector<F2Vec>(d, 0)};
  bool stop = false;
  std::function<void(int, const Echelon&)> rec = [&](int j, const Echelon& span) {
    if (stop) return;
    if (j == d) {
      if (!f(img)) stop = true;
      return;
    }
    for (F2Vec v = 1; v < (F2Vec(1) << d) && !stop; ++v) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = form(img.cols[i], v) == static_cast<int>((gram_[i] >> j) & 1);
      if (!ok || !span.reduce(v)) continue;
      Echelon next = span;
      next.insert(v);
      img.cols[j] = v;
      rec(j + 1, next);
    }
  };
  if (d == 0) {
    f(img);
    return;
  }
  rec(0, Echelon(d));
}

// ---------------------------------------------------------------------------

QuadraticRefinement QuadraticRefinement::from_signs(const std::vector<int>& signs) {
  QuadraticRefinement mu;
  if (signs.size() > static_cast<std::size_t>(kMaxF2Dim)) throw BoundError("refinement too long");
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == -1)
      mu.bits |= F2Vec(1) << j;
    else if (signs[j] != 1)
      throw ValidationError("refinement values must be +1 or -1");
  }
  return mu;
}

std::vector<int> QuadraticRefinement::signs(int dim) const {
  std::vector<int> out(dim);
  for (int j = 0; j < dim; ++j) out[j] = ((bits >> j) & 1) ? -1 : 1;
  return out;
}

QuadraticRefinement QuadraticRefinement::pullback(const F2SymplecticSpace& v, const F2Map& g) const {
  QuadraticRefinement out;
  for (int j = 0; j < g.dim; ++j)
    if (value(v, g.cols[j])) out.bits |= F2Vec(1) << j;
  return out;
}

long long defect(const F2SymplecticSpace& v, const QuadraticRefinement& mu) {
  long long acc = 0;
  for (F2Vec x = 0; x < (F2Vec(1) << v.dim()); ++x) acc += mu.sign(v, x);
  return acc;
}

void Msms::validate() const {
  for (const auto& mu : mus)
    if (mu.bits >> space.dim()) throw ValidationError("refinement has values beyond the dimension");
}

// ---------------------------------------------------------------------------

std::string to_string(ModelTag t, int k) {
  const char* name = t == ModelTag::Plus ? "plus" : t == ModelTag::Minus ? "minus"
                     : t == ModelTag::Radical1Plus ? "radical1_plus" : "twisted";
  return std::string(name) + "(" + std::to_string(k) + ")";
}

std::pair<ModelTag, int> parse_model_tag(const std::string& s) {
  static const std::regex re(R"(^\s*(plus|minus|radical1_plus|twisted)\((\d+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ValidationError("invalid model tag '" + s + "'");
  const std::string name = m[1].str();
  const int k = std::stoi(m[2].str());
  const ModelTag t = name == "plus" ? ModelTag::Plus : name == "minus" ? ModelTag::Minus
                     : name == "radical1_plus" ? ModelTag::Radical1Plus : ModelTag::Twisted;
  if (t == ModelTag::Minus && k == 0) throw ValidationError("minus(0) does not exist");
  return {t, k};
}

QuadraticRefinement standard_refinement(ModelTag tag, int k) {
  if (k < 0 || 2 * k + 1 > kMaxF2Dim) throw BoundError("model size out of range");
  QuadraticRefinement mu;
  switch (tag) {
    case ModelTag::Plus:
    case ModelTag::Radical1Plus:
      break;
    case ModelTag::Minus:
      if (k == 0) throw ValidationError("minus(0) does not exist");
      mu.bits = F2Vec(3) << (2 * k - 2);
      break;
    case ModelTag::Twisted:
      mu.bits = F2Vec(1) << (2 * k);
      break;
  }
  return mu;
}

Msms standard_model(ModelTag tag, int k) {
  const int radical = (tag == ModelTag::Radical1Plus || tag == ModelTag::Twisted) ? 1 : 0;
  return Msms{F2SymplecticSpace::standard(k, radical), {standard_refinement(tag, k)}};
}

Msms standard_model(const std::string& tag) {
  const auto [t, k] = parse_model_tag(tag);
  return standard_model(t, k);
}

// ---------------------------------------------------------------------------

CanonicalMsms canonical_form(const Msms& a) {
  a.validate();
  const F2Map p = a.space.symplectic_basis();
  const int r = a.space.radical_rank();
  const F2SymplecticSpace std_space = F2SymplecticSpace::standard((a.space.dim() - r) / 2, r);
  Multiset moved;
  for (const auto& mu : a.mus) moved.push_back(mu.pullback(a.space, p));
  const Orbit o = orbit(std_space, moved, std_space.standard_isometry_generators());
  std::size_t best = 0;
  for (std::size_t t = 1; t < o.states.size(); ++t)
    if (o.states[t] < o.states[best]) best = t;
  const F2Map pg = p * o.witness[best];
  return CanonicalMsms{Msms{std_space, o.states[best]}, *pg.inverse()};
}

IsomorphismResult is_isomorphic(const Msms& a, const Msms& b) {
  if (a.space.dim() != b.space.dim() || a.mus.size() != b.mus.size()) return {};
  const CanonicalMsms ca = canonical_form(a), cb = canonical_form(b);
  if (!(ca.form == cb.form)) return {};
  return {true, *cb.to_canonical.inverse() * ca.to_canonical};
}

IsomorphismResult is_isomorphic_brute_force(const Msms& a, const Msms& b) {
  if (a.space.dim() != b.space.dim() || a.mus.size() != b.mus.size()) return {};
  if (a.space.dim() > kBruteForceDim) throw BoundError("brute-force isomorphism bound exceeded");
  Multiset target = a.mus;
  std::sort(target.begin(), target.end());
  IsomorphismResult out;
  // candidate w: V_a -> V_b must satisfy m_b(w x, w y) = m_a(x, y)
  const int d = a.space.dim();
  F2Map img{d, std::vector<F2Vec>(d, 0)};
  std::function<bool(int, const Echelon&)> rec = [&](int j, const Echelon& span) -> bool {
    if (j == d) {
      Multiset got;
      for (const auto& mu : b.mus) got.push_back(mu.pullback(b.space, img));
      std::sort(got.begin(), got.end());
      if (got == target) {
        out = {true, img};
        return true;
      }
      return false;
    }
    for (F2Vec v = 1; v < (F2Vec(1) << d); ++v) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = b.space.form(img.cols[i], v) == static_cast<int>((a.space.gram()[i] >> j) & 1);
      if (!ok || !span.reduce(v)) continue;
      Echelon next = span;
      next.insert(v);
      img.cols[j] = v;
      if (rec(j + 1, next)) return true;
    }
    return false;
  };
  if (d == 0) {
    out.isomorphic = true;
    out.witness = img;
    return out;
  }
  rec(0, Echelon(d));
  return out;
}

std::uint64_t aut_order(const Msms& a) {
  a.validate();
  const F2Map p = a.space.symplectic_basis();
  const int r = a.space.radical_rank();
  const F2SymplecticSpace std_space = F2SymplecticSpace::standard((a.space.dim() - r) / 2, r);
  Multiset moved;
  for (const auto& mu : a.mus) moved.push_back(mu.pullback(a.space, p));
  const Orbit o = orbit(std_space, moved, std_space.standard_isometry_generators());
  return std_space.isometry_group_order() / o.states.size();
}

std::vector<QuadraticRefinement> refinements_like(const F2SymplecticSpace& space, const QuadraticRefinement& model) {
  std::vector<QuadraticRefinement> out;
  const F2Map p = space.symplectic_basis();
  const int r = space.radical_rank();
  const F2SymplecticSpace std_space = F2SymplecticSpace::standard((space.dim() - r) / 2, r);
  const QuadraticRefinement moved = model.pullback(space, p);
  const Orbit o = orbit(std_space, {moved}, std_space.standard_isometry_generators());
  const F2Map back = *p.inverse();
  for (const auto& st : o.states) out.push_back(st.front().pullback(std_space, back));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MsmsClass> enumerate_classes(const F2SymplecticSpace& space,
                                         const std::vector<QuadraticRefinement>& allowed, int s) {
  if (s < 0) throw ValidationError("enumerate_classes: negative tuple length");
  std::vector<QuadraticRefinement> items = allowed;
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  const std::size_t q = items.size();
  if (q == 0) return {};
  std::unordered_map<F2Vec, int> pos;
  for (std::size_t i = 0; i < q; ++i) pos[items[i].bits] = static_cast<int>(i);

  const std::vector<F2Map> gens = space.standard_isometry_generators();
  std::vector<std::vector<int>> act;
  for (const auto& g : gens) {
    std::vector<int> perm(q);
    for (std::size_t i = 0; i < q; ++i) {
      auto it = pos.find(items[i].pullback(space, g).bits);
      if (it == pos.end()) throw Error("enumerate_classes: allowed set is not isometry invariant");
      perm[i] = it->second;
    }
    act.push_back(std::move(perm));
  }

  // all non-decreasing index tuples
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(s, 0);
  const double estimate = std::tgamma(static_cast<double>(q + s)) /
                          (std::tgamma(static_cast<double>(s + 1)) * std::tgamma(static_cast<double>(q)));
  if (estimate > static_cast<double>(kOrbitCap)) throw BoundError("enumerate_classes: too many tuples");
  std::function<void(int, int)> gen = [&](int at, int lo) {
    if (at == s) {
      tuples.push_back(cur);
      return;
    }
    for (int i = lo; i < static_cast<int>(q); ++i) {
      cur[at] = i;
      gen(at + 1, i);
    }
  };
  gen(0, 0);
  std::map<std::vector<int>, std::size_t> id;
  for (std::size_t t = 0; t < tuples.size(); ++t) id.emplace(tuples[t], t);

  std::vector<std::size_t> parent(tuples.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (const auto& perm : act) {
      std::vector<int> img(s);
      for (int i = 0; i < s; ++i) img[i] = perm[tuples[t][i]];
      std::sort(img.begin(), img.end());
      const std::size_t a = find(t), b = find(id.at(img));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<double> fact(s + 1, 1.0);
  for (int i = 1; i <= s; ++i) fact[i] = fact[i - 1] * i;
  std::map<std::size_t, MsmsClass> classes;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const std::size_t root = find(t);
    auto [it, inserted] = classes.try_emplace(root);
    if (inserted) {
      it->second.representative.space = space;
      for (int i : tuples[root]) it->second.representative.mus.push_back(items[i]);
    }
    // ordered tuples with this multiset: s! / prod(multiplicity!)
    std::uint64_t count = 1;
    double denom = 1.0;
    for (int i = 0, run = 1; i < s; ++i, ++run)
      if (i + 1 == s || tuples[t][i + 1] != tuples[t][i]) {
        denom *= fact[run];
        run = 0;
      }
    count = static_cast<std::uint64_t>(fact[s] / denom + 0.5);
    it->second.tuple_count += count;
  }
  std::vector<MsmsClass> out;
  for (auto& [root, c] : classes) out.push_back(std::move(c));
  return out;
}

std::vector<MsmsClass> enumerate_classes(int k, int s, ModelTag model) {
  const Msms m = standard_model(model, k);
  return enumerate_classes(m.space, refinements_like(m.space, m.mus.front()), s);
}

}  // namespace maxab
