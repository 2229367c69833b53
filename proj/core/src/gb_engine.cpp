#include "sdepth/detail/gb_engine.hpp"

#include <algorithm>

#include "sdepth/errors.hpp"

namespace sdepth::detail {

namespace {

// Index of the shortest basis element whose lead divides (mono, comp), or -1.
long find_reducer(const Monomial& mono, std::uint32_t comp, std::span<const ModVec> basis, std::size_t skip) {
  long best = -1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip) continue;
    const VTerm& lead = basis[i].front();
    if (lead.comp != comp || !lead.mono.divides(mono)) continue;
    if (best < 0 || basis[i].size() < basis[static_cast<std::size_t>(best)].size()) best = static_cast<long>(i);
  }
  return best;
}

ModVec spoly(const ModVec& f, const ModVec& g, const Monomial& l, const ModuleOrder& ord) {
  const CoefField& field = ord.ring->field();
  ModVec a = axpy({}, field.inv(f.front().coeff), l / f.front().mono, f, ord);
  return axpy(a, field.neg(field.inv(g.front().coeff)), l / g.front().mono, g, ord);
}

std::uint32_t max_degree(const ModVec& f) {
  std::uint32_t d = 0;
  for (const auto& t : f) d = std::max<std::uint32_t>(d, t.mono.degree);
  return d;
}

bool single_component(const ModVec& f) {
  for (const auto& t : f)
    if (t.comp != f.front().comp) return false;
  return true;
}

}  // namespace

ModVec reduce_full(ModVec f, std::span<const ModVec> basis, const ModuleOrder& ord, std::size_t skip) {
  const CoefField& field = ord.ring->field();
  ModVec done;
  // `f` holds the unprocessed tail; everything in `done` is irreducible.
  std::size_t start = 0;
  while (start < f.size()) {
    const VTerm& t = f[start];
    long r = find_reducer(t.mono, t.comp, basis, skip);
    if (r < 0) {
      done.push_back(f[start]);
      ++start;
      continue;
    }
    const ModVec& g = basis[static_cast<std::size_t>(r)];
    Coeff c = field.neg(field.div(t.coeff, g.front().coeff));
    Monomial m = t.mono / g.front().mono;
    ModVec tail(f.begin() + static_cast<long>(start), f.end());
    f = axpy(tail, c, m, g, ord);
    start = 0;
  }
  return done;
}

GBEngine::GBEngine(RingPtr ring, ModuleOrder order) : ring_(std::move(ring)), order_(order) {
  order_.ring = ring_.get();
}

void GBEngine::add(ModVec f) {
  if (f.empty()) return;
  pending_.push_back(std::move(f));
}

void GBEngine::seed_basis(std::span<const ModVec> gb) {
  for (const auto& g : gb) {
    if (g.empty()) continue;
    basis_.push_back(g);
    make_monic(basis_.back(), ring_->field());
    redundant_.push_back(0);
    single_.push_back(single_component(g));
    sugar_.push_back(max_degree(g));
  }
}

void GBEngine::insert(ModVec h, std::uint32_t sugar) {
  make_monic(h, ring_->field());
  const auto k = static_cast<std::uint32_t>(basis_.size());
  const Monomial lt = h.front().mono;
  const std::uint32_t comp = h.front().comp;

  const bool h_single = single_component(h);
  std::vector<Pair> fresh;
  std::vector<char> is_coprime;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (redundant_[i]) continue;
    const VTerm& li = basis_[i].front();
    if (li.comp != comp) continue;
    const Monomial l = lcm(li.mono, lt);
    const std::uint32_t s = std::max<std::uint32_t>(sugar_[i] + l.degree - li.mono.degree, sugar + l.degree - lt.degree);
    fresh.push_back({i, k, l, comp, s});
    is_coprime.push_back(h_single && single_[i] && coprime(li.mono, lt));
  }

  // Old pairs whose lcm is a multiple of lt(h) with both chain legs distinct.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != comp || !lt.divides(p.lcm)) return false;
    Monomial li = lcm(basis_[p.i].front().mono, lt);
    Monomial lj = lcm(basis_[p.j].front().mono, lt);
    return !(li == p.lcm) && !(lj == p.lcm);
  });

  // Among the new pairs keep one per minimal lcm; pairs with coprime leads
  // survive this step (they still suppress others) and are dropped after.
  std::vector<char> kept(fresh.size(), 0);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    bool keep = is_coprime[a];
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
        if (fresh[b].lcm.divides(fresh[a].lcm)) keep = false;
      for (std::size_t b = 0; b < a && keep; ++b)
        if (kept[b] && fresh[b].lcm.divides(fresh[a].lcm)) keep = false;
    }
    kept[a] = keep;
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (kept[a] && !is_coprime[a]) pairs_.push_back(fresh[a]);

  for (std::uint32_t i = 0; i < k; ++i) {
    const VTerm& li = basis_[i].front();
    if (li.comp == comp && lt.divides(li.mono)) redundant_[i] = 1;
  }
  basis_.push_back(std::move(h));
  redundant_.push_back(0);
  single_.push_back(h_single);
  sugar_.push_back(sugar);
}

void GBEngine::complete() {
  std::vector<ModVec> queued;
  queued.swap(pending_);
  // Smallest generators first keeps early reductions cheap.
  std::stable_sort(queued.begin(), queued.end(), [&](const ModVec& a, const ModVec& b) {
    return order_.compare(a.front(), b.front()) < 0;
  });
  for (auto& f : queued) {
    const std::uint32_t sugar = max_degree(f);
    ModVec h = reduce_full(std::move(f), basis_, order_);
    if (!h.empty()) insert(std::move(h), std::max(sugar, max_degree(h)));
  }

  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs_.size(); ++a) {
      const Pair& p = pairs_[a];
      const Pair& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = a;
        continue;
      }
      if (p.lcm.degree != q.lcm.degree) {
        if (p.lcm.degree < q.lcm.degree) best = a;
        continue;
      }
      int c = order_.compare(p.lcm, p.comp, q.lcm, q.comp);
      if (c < 0 || (c == 0 && (p.j < q.j || (p.j == q.j && p.i < q.i)))) best = a;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    ++pairs_reduced_;
    ModVec h = reduce_full(spoly(basis_[p.i], basis_[p.j], p.lcm, order_), basis_, order_);
    if (!h.empty()) insert(std::move(h), std::max(p.sugar, max_degree(h)));
  }
  interreduce();
  if (verification_enabled() && ring_->nvars() <= 4 && !audit_groebner(basis_, order_))
    throw ContractError("Groebner basis audit failed: an S-pair does not reduce to zero");
}

void GBEngine::interreduce() {
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const VTerm& li = basis_[i].front();
    bool drop = false;
    for (std::size_t j = 0; j < basis_.size() && !drop; ++j) {
      if (i == j) continue;
      const VTerm& lj = basis_[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      drop = !(lj.mono == li.mono) || j < i;
    }
    if (!drop) minimal.push_back(basis_[i]);
  }
  std::vector<ModVec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ModVec head{minimal[i].front()};
    ModVec tail(minimal[i].begin() + 1, minimal[i].end());
    ModVec r = reduce_full(std::move(tail), minimal, order_, i);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head, ring_->field());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModVec& a, const ModVec& b) { return order_.compare(a.front(), b.front()) > 0; });
  basis_ = std::move(reduced);
  redundant_.assign(basis_.size(), 0);
  single_.clear();
  sugar_.clear();
  for (const auto& g : basis_) {
    single_.push_back(single_component(g));
    sugar_.push_back(max_degree(g));
  }
  pairs_.clear();
}

bool audit_groebner(std::span<const ModVec> gb, const ModuleOrder& ord) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].front().comp != gb[j].front().comp) continue;
      Monomial l = lcm(gb[i].front().mono, gb[j].front().mono);
      if (!reduce_full(spoly(gb[i], gb[j], l, ord), gb, ord).empty()) return false;
    }
  return true;
}

}  // namespace sdepth::detail
