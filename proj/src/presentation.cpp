#include "maxab/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "maxab/errors.hpp"

namespace maxab {

std::string to_string(Family f) {
  switch (f) {
    case Family::PU: return "pu";
    case Family::PO: return "po";
    case Family::PSp: return "psp";
    case Family::TwistedPU: return "twisted";
  }
  return "pu";
}

Family parse_family(const std::string& s) {
  if (s == "pu") return Family::PU;
  if (s == "po") return Family::PO;
  if (s == "psp") return Family::PSp;
  if (s == "twisted") return Family::TwistedPU;
  throw ValidationError("unknown family '" + s + "'");
}

std::size_t default_closure_cap() {
  if (const char* env = std::getenv("MAXAB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultClosureCap;
}

Flavor family_flavor(Family f) {
  switch (f) {
    case Family::PO: return Flavor::Real;
    case Family::PSp: return Flavor::Quaternion;
    default: return Flavor::Complex;
  }
}

Center family_center(Family f) {
  return (f == Family::PO || f == Family::PSp) ? Center::Sign : Center::Circle;
}

// ---------------------------------------------------------------------------

TorusDirection::TorusDirection(int dim, std::vector<SparseEntry> entries, std::string tag)
    : dim_(dim), entries_(std::move(entries)), tag_(std::move(tag)) {
  if (dim_ <= 0) throw ValidationError("torus direction: dimension must be positive");
  std::sort(entries_.begin(), entries_.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return std::pair(a.col, a.row) < std::pair(b.col, b.row);
  });
  std::vector<bool> row_used(dim_, false), col_used(dim_, false);
  std::map<std::pair<int, int>, RootOfUnity> at;
  for (const auto& e : entries_) {
    if (e.row < 0 || e.row >= dim_ || e.col < 0 || e.col >= dim_)
      throw ValidationError("torus direction: index out of range");
    if (row_used[e.row] || col_used[e.col])
      throw ValidationError("torus direction: not a partial monomial matrix");
    row_used[e.row] = col_used[e.col] = true;
    at[{e.row, e.col}] = e.value;
  }
  for (const auto& e : entries_) {
    // skew-Hermitian: X(c, r) = -conj(X(r, c))
    const RootOfUnity want = (e.value.conj() * RootOfUnity::minus_one());
    auto it = at.find({e.col, e.row});
    if (it == at.end() || it->second != want)
      throw ValidationError("torus direction: matrix is not skew-Hermitian");
  }
  if (entries_.empty()) throw ValidationError("torus direction: zero direction");
}

TorusDirection TorusDirection::diagonal(int dim, const std::vector<int>& positions) {
  std::vector<SparseEntry> e;
  for (int p : positions) e.push_back({p, p, RootOfUnity::i()});
  return {dim, std::move(e), "diag"};
}

TorusDirection TorusDirection::rotation(int dim, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<SparseEntry> e;
  for (auto [a, b] : pairs) {
    e.push_back({a, b, RootOfUnity::one()});
    e.push_back({b, a, RootOfUnity::minus_one()});
  }
  return {dim, std::move(e), "rotation"};
}

TorusDirection TorusDirection::quaternion_diagonal(int quaternionic_dim, const std::vector<int>& coords) {
  std::vector<SparseEntry> e;
  for (int c : coords) {
    e.push_back({2 * c, 2 * c, RootOfUnity::i()});
    e.push_back({2 * c + 1, 2 * c + 1, RootOfUnity(3, 4)});
  }
  return {2 * quaternionic_dim, std::move(e), "quaternion_diag"};
}

TorusDirection TorusDirection::conjugated_by(const Monomial& g) const {
  if (g.dim() != dim_) throw ValidationError("torus direction: dimension mismatch");
  std::vector<SparseEntry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    const RootOfUnity v = g.conj() ? e.value.conj() : e.value;
    out.push_back({g.perm()[e.row], g.perm()[e.col],
                   g.phases()[e.row] * v * g.phases()[e.col].inverse()});
  }
  return {dim_, std::move(out), tag_};
}

Monomial TorusDirection::half_turn(Flavor flavor) const {
  std::vector<RootOfUnity> phases(dim_);
  for (const auto& e : entries_) phases[e.col] = RootOfUnity::minus_one();
  return Monomial::diagonal(std::move(phases), flavor);
}

std::vector<std::pair<int, RootOfUnity>> TorusDirection::keyed() const {
  std::vector<std::pair<int, RootOfUnity>> out;
  for (const auto& e : entries_) out.emplace_back(e.row * dim_ + e.col, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

bool TorusDirection::commutes_with(const TorusDirection& o) const {
  if (o.dim_ != dim_) return false;
  // (XY)(r, c) = X(r, m) Y(m, c); both are partial monomial
  auto product = [this](const TorusDirection& x, const TorusDirection& y) {
    std::vector<int> xrow(dim_, -1);
    std::vector<RootOfUnity> xval(dim_);
    for (const auto& e : x.entries_) {
      xrow[e.col] = e.row;
      xval[e.col] = e.value;
    }
    std::vector<std::pair<int, RootOfUnity>> out;
    for (const auto& e : y.entries_)
      if (xrow[e.row] >= 0) out.emplace_back(xrow[e.row] * dim_ + e.col, xval[e.row] * e.value);
    std::sort(out.begin(), out.end());
    return out;
  };
  return product(*this, o) == product(o, *this);
}

bool TorusDirection::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SparseEntry& e) { return e.value.den() <= 2; });
}

bool operator==(const TorusDirection& a, const TorusDirection& b) {
  return a.dim_ == b.dim_ && a.keyed() == b.keyed();
}

// ---------------------------------------------------------------------------

Center AbelianPresentation::center() const {
  if (generators.empty()) return family_center(family);
  return generators.front().center();
}

void AbelianPresentation::validate() const {
  if (n <= 0) throw ValidationError("presentation: n must be positive");
  const int dim = matrix_dim();
  const Center c = center();
  const Flavor fl = family_flavor(family);
  for (const auto& g : generators) {
    if (g.dim() != dim) throw ValidationError("presentation: generator has wrong dimension");
    if (g.center() != c) throw ValidationError("presentation: generators use different centers");
    if (g.rep().flavor() != fl)
      throw ValidationError("presentation: generator flavor does not match the family");
    if (g.conj() && family != Family::TwistedPU)
      throw ValidationError("presentation: antiunitary generators need the twisted family");
  }
  if (family == Family::PO || family == Family::PSp) {
    if (c != Center::Sign) throw ValidationError("presentation: family needs the <-I> center");
  } else if (c == Center::Sign) {
    throw ValidationError("presentation: <-I> center only applies to PO and PSp");
  }
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b) {
      const Monomial ab = generators[a].rep() * generators[b].rep();
      const Monomial ba = generators[b].rep() * generators[a].rep();
      const auto lambda = proportionality(ab, ba);
      if (!lambda)
        throw NotScalarCommutator("presentation: generators " + std::to_string(a) + " and " +
                                  std::to_string(b) + " have a non-scalar commutator");
      if (!generators[a].center_contains(*lambda))
        throw ValidationError("presentation: generators " + std::to_string(a) + " and " +
                              std::to_string(b) + " do not commute modulo the center");
    }
  for (std::size_t t = 0; t < torus.size(); ++t) {
    const auto& x = torus[t];
    if (x.dim() != dim) throw ValidationError("presentation: torus direction has wrong dimension");
    if (family == Family::PO && !x.is_real())
      throw ValidationError("presentation: PO torus directions must be real");
    if (family == Family::PSp && !is_quaternionic(x.half_turn(Flavor::Complex)))
      throw ValidationError("presentation: PSp torus directions must be quaternionic");
    for (std::size_t u = t + 1; u < torus.size(); ++u)
      if (!x.commutes_with(torus[u]))
        throw ValidationError("presentation: torus directions do not commute");
    for (const auto& g : generators)
      if (!(x.conjugated_by(g.rep()) == x))
        throw ValidationError("presentation: a generator does not centralize the torus");
  }
}

// ---------------------------------------------------------------------------

std::size_t FiniteClosure::find(const Monomial& m) const {
  const auto it = index.find(ProjectiveElement(m, center).canonical());
  return it == index.end() ? npos : it->second;
}

FiniteClosure close_group(const std::vector<ProjectiveElement>& generators, int dim, Center center,
                          std::size_t cap) {
  FiniteClosure c;
  c.center = center;
  const std::size_t g = generators.size();
  c.relations = RelationLattice(g);
  const Flavor fl = generators.empty() ? Flavor::Complex : generators.front().rep().flavor();
  const Monomial id = Monomial::identity(dim, fl);
  c.elements.push_back(id);
  c.words.emplace_back(g, 0);
  c.index.emplace(id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g; ++k) {
      const Monomial next =
          ProjectiveElement(c.elements[cur] * generators[k].rep(), center).canonical();
      std::vector<std::int64_t> w = c.words[cur];
      ++w[k];
      auto [it, inserted] = c.index.emplace(next, c.elements.size());
      if (inserted) {
        if (c.elements.size() >= cap)
          throw BoundError("closure exceeds the element cap of " + std::to_string(cap));
        c.elements.push_back(next);
        c.words.push_back(std::move(w));
        queue.push_back(it->second);
      } else {
        // w and words[it->second] name the same element
        const auto& other = c.words[it->second];
        for (std::size_t t = 0; t < g; ++t) w[t] -= other[t];
        if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 0; }))
          c.relations.add(std::move(w));
      }
    }
  }
  return c;
}

Monomial evaluate_word(const std::vector<ProjectiveElement>& gens, const std::vector<std::int64_t>& word,
                       int dim, Flavor flavor) {
  Monomial acc = Monomial::identity(dim, flavor);
  for (std::size_t k = 0; k < gens.size() && k < word.size(); ++k)
    if (word[k] != 0) acc = acc * gens[k].rep().pow(word[k]);
  return acc;
}

}  // namespace maxab
