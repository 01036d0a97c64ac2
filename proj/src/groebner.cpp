#include "prol/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace prol {

namespace {

using Exps = std::vector<std::uint32_t>;

struct GTerm {
  Exps e;
  std::uint64_t deg = 0;
  Scalar c;
};

using GPoly = std::vector<GTerm>;  // descending grevlex, no zero coefficients

bool grevlex_greater(const GTerm& a, const GTerm& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  }
  return false;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool disjoint(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

std::uint64_t degree(const Exps& e) {
  std::uint64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

GPoly from_poly(const Poly& p) {
  GPoly out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) out.push_back({t.mono.exponents(), t.mono.degree(), t.coeff});
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

Poly to_poly(const GPoly& g, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g) terms.push_back({Monomial(t.e), t.c});
  return Poly(ring, std::move(terms));
}

void make_monic(GPoly& g) {
  if (g.empty() || g.front().c.is_one()) return;
  const Scalar inv = g.front().c.inverse();
  for (auto& t : g) t.c *= inv;
}

/// a - c * x^shift * b, where the leading terms cancel.
GPoly sub_mul(GPoly&& a, std::size_t a_start, const Scalar& c, const Exps& shift, std::uint64_t shift_deg,
              const GPoly& b) {
  GPoly out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start;
  std::size_t j = 0;
  GTerm tb;
  auto load_b = [&](std::size_t idx) {
    tb.e = b[idx].e;
    for (std::size_t v = 0; v < shift.size(); ++v) tb.e[v] += shift[v];
    tb.deg = b[idx].deg + shift_deg;
    tb.c = b[idx].c;
    tb.c *= c;
    tb.c = -tb.c;
  };
  if (j < b.size()) load_b(j);
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i], tb))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || grevlex_greater(tb, a[i])) {
      out.push_back(tb);
      if (++j < b.size()) load_b(j);
    } else {
      a[i].c += tb.c;
      if (!a[i].c.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      if (++j < b.size()) load_b(j);
    }
  }
  return out;
}

struct GrevlexDesc {
  bool operator()(const GTerm& a, const GTerm& b) const { return grevlex_greater(a, b); }
};

struct Store {
  std::vector<GPoly> polys;
  std::vector<bool> active;

  const GPoly* divisor(const Exps& e) const {
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k] && divides(polys[k].front().e, e)) return &polys[k];
    }
    return nullptr;
  }

  /// Full reduction of p by the active polynomials.
  GPoly reduce(GPoly p) const {
    // Terms are keyed by (exponents, degree); the coefficient field of the key is unused.
    std::map<GTerm, Scalar, GrevlexDesc> acc;
    for (auto& t : p) {
      Scalar c = std::move(t.c);
      acc.emplace(std::move(t), std::move(c));
    }
    GPoly done;
    GTerm key;
    while (!acc.empty()) {
      auto it = acc.begin();
      const GPoly* div = divisor(it->first.e);
      if (!div) {
        GTerm t = it->first;
        t.c = std::move(it->second);
        done.push_back(std::move(t));
        acc.erase(it);
        continue;
      }
      Exps shift(it->first.e.size());
      for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = it->first.e[v] - div->front().e[v];
      const std::uint64_t sdeg = it->first.deg - div->front().deg;
      Scalar c = it->second;
      if (!div->front().c.is_one()) c /= div->front().c;
      acc.erase(it);
      for (std::size_t k = 1; k < div->size(); ++k) {
        const GTerm& t = (*div)[k];
        key.e = t.e;
        for (std::size_t v = 0; v < shift.size(); ++v) key.e[v] += shift[v];
        key.deg = t.deg + sdeg;
        Scalar delta = t.c;
        delta *= c;
        auto [pos, inserted] = acc.try_emplace(key, -delta);
        if (!inserted) {
          pos->second -= delta;
          if (pos->second.is_zero()) acc.erase(pos);
        }
      }
    }
    return done;
  }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Exps lcm;
  std::uint64_t deg;
  std::uint64_t sugar;
};

GPoly spoly(const GPoly& f, const GPoly& g, const Exps& l) {
  Exps sf(l.size());
  Exps sg(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    sf[v] = l[v] - f.front().e[v];
    sg[v] = l[v] - g.front().e[v];
  }
  // monic leading terms: x^sf f - x^sg g
  GPoly a;
  a.reserve(f.size());
  const std::uint64_t dsf = degree(sf);
  for (const auto& t : f) {
    GTerm u = t;
    for (std::size_t v = 0; v < l.size(); ++v) u.e[v] += sf[v];
    u.deg += dsf;
    u.c = t.c / f.front().c;
    a.push_back(std::move(u));
  }
  return sub_mul(std::move(a), 0, g.front().c.inverse(), sg, degree(sg), g);
}

class Buchberger {
 public:
  Buchberger(const GroebnerOptions& opts) : opts_(opts) {}

  void add(GPoly h) { add(std::move(h), h.empty() ? 0 : max_degree(h)); }

  void add(GPoly h, std::uint64_t sugar) {
    make_monic(h);
    const std::size_t hi = store_.polys.size();
    store_.polys.push_back(std::move(h));
    store_.active.push_back(true);
    sugar_.push_back(sugar);

    // Gebauer-Moeller update.
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!store_.active[g]) continue;
      Exps l = lcm(store_.polys[hi].front().e, store_.polys[g].front().e);
      const auto d = degree(l);
      const auto s = std::max(sugar_[g] + d - store_.polys[g].front().deg, sugar_[hi] + d - store_.polys[hi].front().deg);
      c.push_back({g, hi, std::move(l), d, s});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const auto& p = c[a];
      bool keep = disjoint(store_.polys[p.i].front().e, store_.polys[hi].front().e);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, p.lcm)) keep = false;
        }
        for (const auto& q : d) {
          if (!keep) break;
          if (divides(q.lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d) {
      if (!disjoint(store_.polys[p.i].front().e, store_.polys[hi].front().e)) e.push_back(std::move(p));
    }
    const Exps& lhh = store_.polys[hi].front().e;
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      if (divides(lhh, p.lcm) && lcm(store_.polys[p.i].front().e, lhh) != p.lcm &&
          lcm(store_.polys[p.j].front().e, lhh) != p.lcm) {
        continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < hi; ++g) {
      if (store_.active[g] && divides(lhh, store_.polys[g].front().e)) store_.active[g] = false;
    }
  }

  void run() {
    while (!pairs_.empty()) {
      // Sugar strategy, ties broken by the grevlex-smaller lcm.
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.sugar != b.sugar) {
          if (a.sugar < b.sugar) best = k;
        } else if (grevlex_greater(GTerm{b.lcm, b.deg, {}}, GTerm{a.lcm, a.deg, {}})) {
          best = k;
        }
      }
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++reductions_ > opts_.max_pair_reductions) {
        throw InconclusiveError("Groebner computation exceeded " + std::to_string(opts_.max_pair_reductions) +
                                " pair reductions");
      }
      GPoly h = store_.reduce(spoly(store_.polys[p.i], store_.polys[p.j], p.lcm));
      if (!h.empty()) add(std::move(h), std::max(p.sugar, max_degree(h)));
    }
  }

  std::vector<GPoly> reduced_basis() {
    std::vector<GPoly> g;
    for (std::size_t k = 0; k < store_.polys.size(); ++k) {
      if (store_.active[k]) g.push_back(store_.polys[k]);
    }
    // Minimalize: drop polynomials whose leading monomial is divisible by another's.
    std::vector<GPoly> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < g.size() && !drop; ++b) {
        if (a == b) continue;
        if (divides(g[b].front().e, g[a].front().e)) {
          // equal leading monomials: keep the earlier one
          drop = g[b].front().e != g[a].front().e || b < a;
        }
      }
      if (!drop) minimal.push_back(g[a]);
    }
    // Interreduce.
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      Store others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b == a) continue;
        others.polys.push_back(minimal[b]);
        others.active.push_back(true);
      }
      GPoly head{minimal[a].front()};
      GPoly tail(minimal[a].begin() + 1, minimal[a].end());
      GPoly rt = others.reduce(std::move(tail));
      head.insert(head.end(), rt.begin(), rt.end());
      make_monic(head);
      minimal[a] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const GPoly& x, const GPoly& y) { return grevlex_greater(y.front(), x.front()); });
    return minimal;
  }

  std::size_t reductions() const { return reductions_; }
  const Store& store() const { return store_; }

 private:
  GroebnerOptions opts_;
  Store store_;
  std::vector<Pair> pairs_;
  std::vector<std::uint64_t> sugar_;
  std::size_t reductions_ = 0;

  static std::uint64_t max_degree(const GPoly& g) {
    std::uint64_t d = 0;
    for (const auto& t : g) d = std::max(d, t.deg);
    return d;
  }
};

}  // namespace

GroebnerBasis groebner(std::span<const Poly> gens, const RingPtr& ring, const GroebnerOptions& opts) {
  Buchberger bb(opts);
  for (const auto& p : gens) {
    if (!same_ring(p.ring(), ring)) throw ContextError("Groebner input in a foreign ring");
    GPoly g = bb.store().reduce(from_poly(p));
    if (!g.empty()) {
      bb.add(std::move(g));
    }
  }
  bb.run();
  std::vector<Poly> out;
  for (const auto& g : bb.reduced_basis()) out.push_back(to_poly(g, ring));
  return GroebnerBasis(ring, std::move(out), bb.reductions());
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  if (!same_ring(p.ring(), ring_)) throw ContextError("normal form of a polynomial from a foreign ring");
  Store s;
  for (const auto& g : gens_) {
    s.polys.push_back(from_poly(g));
    s.active.push_back(true);
  }
  return to_poly(s.reduce(from_poly(p)), ring_);
}

Monomial grevlex_leading(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  return Monomial(from_poly(p).front().e);
}

bool satisfies_buchberger_criterion(std::span<const Poly> basis) {
  Store s;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    s.polys.push_back(from_poly(g));
    s.active.push_back(true);
  }
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    for (std::size_t j = i + 1; j < s.polys.size(); ++j) {
      auto l = lcm(s.polys[i].front().e, s.polys[j].front().e);
      if (!s.reduce(spoly(s.polys[i], s.polys[j], l)).empty()) return false;
    }
  }
  return true;
}

namespace {

bool is_scalar_multiple(const Poly& p, const Poly& g) {
  if (g.is_zero() || p.num_terms() != g.num_terms()) return false;
  const Scalar ratio = p.terms().front().coeff / g.terms().front().coeff;
  return p == g.scaled(ratio);
}

bool trivially_member(const Poly& p, std::span<const Poly> gens) {
  if (p.is_zero()) return true;
  return std::any_of(gens.begin(), gens.end(), [&](const Poly& g) { return is_scalar_multiple(p, g); });
}

}  // namespace

bool ideal_member(const Poly& p, std::span<const Poly> gens, const GroebnerOptions& opts) {
  if (trivially_member(p, gens)) return true;
  return groebner(gens, p.ring(), opts).contains(p);
}

namespace {

/// Row echelon form over the field, keyed by leading monomial; only linear combinations.
class LinearSpan {
 public:
  void insert(GPoly p) {
    p = reduce(std::move(p));
    if (p.empty()) return;
    make_monic(p);
    Exps lead = p.front().e;
    rows_.emplace(std::move(lead), std::move(p));
  }

  GPoly reduce(GPoly p) const {
    GPoly done;
    std::size_t i = 0;
    while (i < p.size()) {
      auto it = rows_.find(p[i].e);
      if (it == rows_.end()) {
        done.push_back(std::move(p[i++]));
        continue;
      }
      const Scalar c = p[i].c;
      p = sub_mul(std::move(p), i, c, Exps(p[i].e.size(), 0), 0, it->second);
      i = 0;
    }
    return done;
  }

  bool contains(const GPoly& p) const { return reduce(p).empty(); }

 private:
  std::map<Exps, GPoly> rows_;
};

/// Every element of `pending` is a Q-linear combination of x^a * g with |a| <= shift_degree.
bool linear_certificate(std::span<const Poly> gens, const std::vector<const Poly*>& pending,
                        unsigned shift_degree) {
  if (gens.empty()) return false;
  const std::size_t n = gens.front().ring()->size();
  std::vector<Exps> shifts{Exps(n, 0)};
  for (unsigned d = 1; d <= shift_degree; ++d) {
    std::vector<Exps> next;
    for (const auto& s : shifts) {
      if (degree(s) != d - 1) continue;
      std::size_t first = 0;
      while (first < n && s[first] == 0) ++first;
      for (std::size_t v = 0; v < n && v <= first; ++v) {
        Exps t = s;
        ++t[v];
        next.push_back(std::move(t));
      }
    }
    shifts.insert(shifts.end(), next.begin(), next.end());
  }
  LinearSpan span;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const GPoly base = from_poly(g);
    for (const auto& s : shifts) {
      GPoly shifted = base;
      const auto sd = degree(s);
      for (auto& t : shifted) {
        for (std::size_t v = 0; v < n; ++v) t.e[v] += s[v];
        t.deg += sd;
      }
      span.insert(std::move(shifted));
    }
  }
  return std::all_of(pending.begin(), pending.end(), [&](const Poly* p) { return span.contains(from_poly(*p)); });
}

}  // namespace

bool ideal_contains(std::span<const Poly> gens, std::span<const Poly> sub, const GroebnerOptions& opts) {
  std::vector<const Poly*> pending;
  for (const auto& p : sub) {
    if (!trivially_member(p, gens)) pending.push_back(&p);
  }
  if (pending.empty()) return true;
  if (linear_certificate(gens, pending, 1)) return true;
  const auto gb = groebner(gens, pending.front()->ring(), opts);
  return std::all_of(pending.begin(), pending.end(), [&](const Poly* p) { return gb.contains(*p); });
}

bool ideal_equal(std::span<const Poly> a, std::span<const Poly> b, const GroebnerOptions& opts) {
  return ideal_contains(a, b, opts) && ideal_contains(b, a, opts);
}

}  // namespace prol
