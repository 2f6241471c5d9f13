#include "superkrull/groebner.h"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "superkrull/errors.h"

namespace superkrull {

bool IdealBasis::is_unit() const {
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

std::vector<std::string> IdealBasis::ToStrings(std::span<const std::string> names) const {
  std::vector<std::string> out;
  for (const Polynomial& p : basis) out.push_back(p.ToString(names));
  return out;
}

std::vector<std::string> ModuleBasis::ToStrings(
    std::span<const std::string> even_names,
    std::span<const std::string> odd_names) const {
  std::vector<std::string> out;
  for (const ModuleVector& v : basis) out.push_back(v.ToString(even_names, odd_names));
  return out;
}

namespace {

// Default significance: smaller odd degree first, then lexicographic.
int DefaultPositionCompare(OddMonomial a, OddMonomial b) {
  if (a == b) return 0;
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb ? 1 : -1;
  // Equal sizes: the set owning the smallest index of the symmetric
  // difference is lexicographically smaller.
  const std::uint32_t diff = a.mask() ^ b.mask();
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) ? 1 : -1;
}

}  // namespace

ModuleOrder ModuleOrder::TermOverPosition(MonomialOrder mono) {
  ModuleOrder o;
  o.kind_ = Kind::kTermOverPosition;
  o.mono_ = std::move(mono);
  return o;
}

ModuleOrder ModuleOrder::EliminateAllBut(OddMonomial last, MonomialOrder mono) {
  ModuleOrder o;
  o.kind_ = Kind::kPositionOverTerm;
  o.mono_ = std::move(mono);
  o.last_ = last;
  return o;
}

ModuleOrder ModuleOrder::ByOddDegree(MonomialOrder mono) {
  ModuleOrder o;
  o.kind_ = Kind::kPositionOverTerm;
  o.mono_ = std::move(mono);
  return o;
}

int ModuleOrder::ComparePositions(OddMonomial a, OddMonomial b) const {
  if (a == b) return 0;
  if (last_) {
    if (a == *last_) return -1;
    if (b == *last_) return 1;
  }
  return DefaultPositionCompare(a, b);
}

int ModuleOrder::Compare(OddMonomial pa, const Monomial& ma, OddMonomial pb,
                         const Monomial& mb) const {
  if (kind_ == Kind::kPositionOverTerm) {
    const int c = ComparePositions(pa, pb);
    if (c != 0) return c;
    return mono_.Compare(ma, mb);
  }
  const int c = mono_.Compare(ma, mb);
  if (c != 0) return c;
  return ComparePositions(pa, pb);
}

namespace {

struct MTerm {
  OddMonomial pos;
  Monomial mono;
  Scalar coef;
};
using MPoly = std::vector<MTerm>;

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
  std::size_t serial;
};

// Buchberger completion over a free K[X]-module. An ideal is the rank-one
// case with every term at position e_{}.
class Engine {
 public:
  Engine(Field field, std::size_t nvars, ModuleOrder order, bool ideal_mode)
      : field_(field), nvars_(nvars), order_(std::move(order)), ideal_mode_(ideal_mode) {}

  int Cmp(const MTerm& a, const MTerm& b) const {
    return order_.Compare(a.pos, a.mono, b.pos, b.mono);
  }

  MPoly FromVector(const ModuleVector& v) const {
    if (!(v.field() == field_) || v.nvars() != nvars_) {
      throw ArgumentError("module vector does not match the ambient ring");
    }
    MPoly f;
    for (const auto& [pos, c] : v.coordinates()) {
      for (const Term& t : c.terms()) f.push_back({pos, t.monomial, t.coefficient});
    }
    Sort(f);
    return f;
  }

  MPoly FromPolynomial(const Polynomial& p) const {
    if (!(p.field() == field_) || p.nvars() != nvars_) {
      throw ArgumentError("polynomial does not match the ambient ring");
    }
    MPoly f;
    for (const Term& t : p.terms()) f.push_back({OddMonomial(), t.monomial, t.coefficient});
    Sort(f);
    return f;
  }

  ModuleVector ToVector(const MPoly& f) const {
    std::map<OddMonomial, std::vector<Term>> parts;
    for (const MTerm& t : f) parts[t.pos].push_back({t.mono, t.coef});
    ModuleVector v(field_, nvars_);
    for (auto& [pos, terms] : parts) {
      v.Add(pos, Polynomial::FromTerms(field_, nvars_, std::move(terms)));
    }
    return v;
  }

  Polynomial ToPolynomial(const MPoly& f) const {
    std::vector<Term> terms;
    for (const MTerm& t : f) terms.push_back({t.mono, t.coef});
    return Polynomial::FromTerms(field_, nvars_, std::move(terms), order_.monomial_order());
  }

  // f - c * m * g, merged in order.
  MPoly SubMul(const MPoly& f, std::size_t start, const MPoly& g, const Monomial& m,
               const Scalar& c) const {
    MPoly out;
    out.reserve(f.size() - start + g.size());
    std::size_t a = start;
    std::size_t b = 0;
    while (a < f.size() || b < g.size()) {
      MTerm scaled;
      if (b < g.size()) scaled = {g[b].pos, g[b].mono * m, g[b].coef * c};
      int cmp;
      if (a == f.size()) {
        cmp = -1;
      } else if (b == g.size()) {
        cmp = 1;
      } else {
        cmp = Cmp(f[a], scaled);
      }
      if (cmp > 0) {
        out.push_back(f[a++]);
      } else if (cmp < 0) {
        scaled.coef = -scaled.coef;
        out.push_back(std::move(scaled));
        ++b;
      } else {
        Scalar v = f[a].coef - scaled.coef;
        if (!v.is_zero()) out.push_back({f[a].pos, f[a].mono, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  const MPoly* FindReducer(const MTerm& t, const std::vector<MPoly>& basis,
                           std::size_t skip) const {
    const MPoly* best = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const MPoly& g = basis[k];
      if (g.empty() || !(g.front().pos == t.pos)) continue;
      if (!g.front().mono.Divides(t.mono)) continue;
      if (best == nullptr || g.size() < best->size()) best = &g;
    }
    return best;
  }

  // Full reduction; basis elements must be monic.
  MPoly Reduce(MPoly f, const std::vector<MPoly>& basis,
               std::size_t skip = static_cast<std::size_t>(-1)) const {
    MPoly result;
    std::size_t start = 0;
    while (start < f.size()) {
      const MTerm& t = f[start];
      const MPoly* g = FindReducer(t, basis, skip);
      if (g == nullptr) {
        result.push_back(f[start]);
        ++start;
        continue;
      }
      const Monomial m = t.mono / g->front().mono;
      const Scalar c = t.coef;
      f = SubMul(f, start, *g, m, c);
      start = 0;
    }
    return result;
  }

  void MakeMonic(MPoly& f) const {
    if (f.empty() || f.front().coef.is_one()) return;
    const Scalar inv = f.front().coef.Inverse();
    for (MTerm& t : f) t.coef *= inv;
  }

  std::vector<MPoly> Run(std::vector<MPoly> gens) {
    std::vector<MPoly> g;
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::size_t serial = 0;

    auto add = [&](MPoly h) {
      MakeMonic(h);
      const std::size_t k = g.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (!(g[i].front().pos == h.front().pos)) continue;
        Monomial l = Lcm(g[i].front().mono, h.front().mono);
        const std::uint64_t d = l.degree();
        pairs.push_back({i, k, std::move(l), d, serial++});
        pending.insert({i, k});
      }
      g.push_back(std::move(h));
    };

    for (MPoly& h : gens) {
      MPoly r = Reduce(std::move(h), g);
      if (!r.empty()) add(std::move(r));
    }

    while (!pairs.empty()) {
      auto it = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) {
                                   if (a.degree != b.degree) return a.degree < b.degree;
                                   return a.serial < b.serial;
                                 });
      const Pair p = *it;
      pairs.erase(it);
      pending.erase({p.i, p.j});
      const MTerm& li = g[p.i].front();
      const MTerm& lj = g[p.j].front();
      if (ideal_mode_ && li.mono * lj.mono == p.lcm) continue;
      if (ChainCriterion(p, g, pending)) continue;
      // S-vector (lcm/lt_i) g_i - (lcm/lt_j) g_j of monic elements.
      MPoly s = SubMul(Shifted(g[p.i], p.lcm / li.mono), 0, g[p.j], p.lcm / lj.mono,
                       Scalar::One(field_));
      MPoly r = Reduce(std::move(s), g);
      if (!r.empty()) add(std::move(r));
    }
    return Finalize(std::move(g));
  }

 private:
  static std::pair<std::size_t, std::size_t> Key(std::size_t a, std::size_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  bool ChainCriterion(const Pair& p, const std::vector<MPoly>& g,
                      const std::set<std::pair<std::size_t, std::size_t>>& pending) const {
    const OddMonomial pos = g[p.i].front().pos;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!(g[k].front().pos == pos)) continue;
      if (!g[k].front().mono.Divides(p.lcm)) continue;
      if (pending.count(Key(p.i, k)) || pending.count(Key(p.j, k))) continue;
      return true;
    }
    return false;
  }

  static MPoly Shifted(const MPoly& f, const Monomial& m) {
    MPoly out = f;
    for (MTerm& t : out) t.mono = t.mono * m;
    return out;
  }

  std::vector<MPoly> Finalize(std::vector<MPoly> g) const {
    // Drop elements whose leading term is divisible by another survivor's.
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        const MTerm& a = g[i].front();
        const MTerm& b = g[j].front();
        if (!(a.pos == b.pos) || !b.mono.Divides(a.mono)) continue;
        if (a.mono == b.mono && j > i) continue;
        keep[i] = false;
      }
    }
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (keep[i]) minimal.push_back(std::move(g[i]));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      MPoly tail(minimal[i].begin() + 1, minimal[i].end());
      MPoly reduced = Reduce(std::move(tail), minimal, i);
      reduced.insert(reduced.begin(), minimal[i].front());
      minimal[i] = std::move(reduced);
    }
    std::sort(minimal.begin(), minimal.end(), [this](const MPoly& a, const MPoly& b) {
      return Cmp(a.front(), b.front()) > 0;
    });
    return minimal;
  }

  void Sort(MPoly& f) const {
    std::sort(f.begin(), f.end(), [this](const MTerm& a, const MTerm& b) {
      return Cmp(a, b) > 0;
    });
    MPoly merged;
    for (MTerm& t : f) {
      if (!merged.empty() && merged.back().pos == t.pos && merged.back().mono == t.mono) {
        merged.back().coef += t.coef;
        if (merged.back().coef.is_zero()) merged.pop_back();
      } else if (!t.coef.is_zero()) {
        merged.push_back(std::move(t));
      }
    }
    f = std::move(merged);
  }

  Field field_;
  std::size_t nvars_;
  ModuleOrder order_;
  bool ideal_mode_;
};

}  // namespace

IdealBasis Buchberger(Field field, std::size_t nvars, std::span<const Polynomial> gens,
                      const MonomialOrder& order) {
  Engine engine(field, nvars, ModuleOrder::TermOverPosition(order), true);
  std::vector<MPoly> input;
  for (const Polynomial& p : gens) {
    MPoly f = engine.FromPolynomial(p);
    if (!f.empty()) input.push_back(std::move(f));
  }
  IdealBasis out{field, nvars, order, {}};
  for (const MPoly& f : engine.Run(std::move(input))) {
    out.basis.push_back(engine.ToPolynomial(f));
  }
  return out;
}

IdealBasis Buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw ArgumentError("empty generator list carries no ring");
  return Buchberger(gens.front().field(), gens.front().nvars(), gens, order);
}

Polynomial NormalForm(const Polynomial& f, const IdealBasis& basis) {
  Engine engine(basis.field, basis.nvars, ModuleOrder::TermOverPosition(basis.order),
                true);
  std::vector<MPoly> g;
  for (const Polynomial& p : basis.basis) g.push_back(engine.FromPolynomial(p));
  return engine.ToPolynomial(engine.Reduce(engine.FromPolynomial(f), g));
}

bool IdealContains(const IdealBasis& basis, const Polynomial& f) {
  return NormalForm(f, basis).is_zero();
}

std::optional<std::size_t> IdealDimension(const IdealBasis& basis) {
  if (basis.is_unit()) return std::nullopt;
  const std::size_t m = basis.nvars;
  if (m > 30) throw ArgumentError("ideal_dimension supports at most 30 variables");
  std::vector<std::uint64_t> supports;
  for (const Polynomial& p : basis.basis) {
    supports.push_back(LeadingTerm(p, basis.order).monomial.Support());
  }
  // S is independent iff no leading monomial lives in K[S].
  std::size_t best = 0;
  const std::uint64_t full = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < full; ++s) {
    const std::size_t size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint64_t sup : supports) {
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

ModuleBasis ModuleBuchberger(Field field, std::size_t nvars,
                             std::span<const ModuleVector> gens,
                             const ModuleOrder& order) {
  Engine engine(field, nvars, order, false);
  std::vector<MPoly> input;
  for (const ModuleVector& v : gens) {
    MPoly f = engine.FromVector(v);
    if (!f.empty()) input.push_back(std::move(f));
  }
  ModuleBasis out{field, nvars, order, {}};
  for (const MPoly& f : engine.Run(std::move(input))) {
    out.basis.push_back(engine.ToVector(f));
  }
  return out;
}

ModuleVector ModuleNormalForm(const ModuleVector& v, const ModuleBasis& basis) {
  Engine engine(basis.field, basis.nvars, basis.order, false);
  std::vector<MPoly> g;
  for (const ModuleVector& b : basis.basis) g.push_back(engine.FromVector(b));
  return engine.ToVector(engine.Reduce(engine.FromVector(v), g));
}

bool ModuleMembership(const ModuleVector& v, const ModuleBasis& basis) {
  return ModuleNormalForm(v, basis).is_zero();
}

std::pair<OddMonomial, Monomial> LeadingPosition(const ModuleVector& v,
                                                 const ModuleOrder& order) {
  if (v.is_zero()) throw ArgumentError("leading position of the zero vector");
  std::optional<std::pair<OddMonomial, Monomial>> best;
  for (const auto& [pos, c] : v.coordinates()) {
    const Monomial lm = LeadingTerm(c, order.monomial_order()).monomial;
    if (!best || order.Compare(pos, lm, best->first, best->second) > 0) {
      best = std::make_pair(pos, lm);
    }
  }
  return *best;
}

IdealBasis ContractionIdeal(const ModuleBasis& basis, OddMonomial position) {
  const MonomialOrder& mono = basis.order.monomial_order();
  const ModuleOrder elim = ModuleOrder::EliminateAllBut(position, mono);
  const ModuleBasis eliminated =
      ModuleBuchberger(basis.field, basis.nvars, basis.basis, elim);
  std::vector<Polynomial> gens;
  for (const ModuleVector& v : eliminated.basis) {
    if (LeadingPosition(v, elim).first == position) {
      if (v.coordinates().size() != 1) {
        throw InvariantError("elimination left a mixed vector at the last position");
      }
      gens.push_back(v.At(position));
    }
  }
  return Buchberger(basis.field, basis.nvars, gens, mono);
}

}  // namespace superkrull
