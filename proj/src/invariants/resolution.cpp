#include "canonlab/invariants/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace canonlab {

namespace {

// Basis element of one level of the Schreyer frame: a vector in the previous
// free module together with its lead term under the induced order.
template <class K>
struct FrameElement {
  std::vector<Polynomial<K>> vec;
  std::size_t comp = 0;
  Monomial mono;   // lead monomial, sitting in component `comp`
  Monomial total;  // mono times the total monomial of basis element `comp`
};

struct Lead {
  std::size_t comp;
  Monomial mono;
};

// Lead of v in the order induced by `totals`: compare m * totals[k], and on a
// tie the smaller component wins.
template <class K>
std::optional<Lead> lead_of(const std::vector<Polynomial<K>>& v, const std::vector<Monomial>& totals,
                            const MonomialOrder& order) {
  std::optional<Lead> best;
  Monomial best_total;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Monomial& m = v[k].leading_monomial();
    const Monomial t = m * totals[k];
    if (!best || order.compare(t, best_total) > 0) {
      best = Lead{k, m};
      best_total = t;
    }
  }
  return best;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

template <class K>
class Frame {
 public:
  explicit Frame(const Ring<K>& ring) : ring_(ring), order_(ring->order()) {}

  // Quotients of the reduction of `s` to zero by `level`.
  std::vector<Polynomial<K>> reduce_to_zero(std::vector<Polynomial<K>> s, const std::vector<FrameElement<K>>& level,
                                            const std::vector<std::vector<std::size_t>>& by_comp,
                                            const std::vector<Monomial>& totals) const {
    std::vector<Polynomial<K>> q(level.size(), Polynomial<K>(ring_));
    while (auto ld = lead_of(s, totals, order_)) {
      const std::size_t* hit = nullptr;
      for (const auto& e : by_comp[ld->comp]) {
        if (level[e].mono.divides(ld->mono)) {
          hit = &e;
          break;
        }
      }
      if (!hit) throw std::logic_error("Schreyer frame: syzygy does not reduce to zero");
      const auto& el = level[*hit];
      const K c = s[ld->comp].leading_coefficient() / el.vec[ld->comp].coefficient(el.mono);
      const Monomial u = ld->mono / el.mono;
      for (std::size_t r = 0; r < el.vec.size(); ++r) {
        if (!el.vec[r].is_zero()) s[r].add_scaled(-c, u, el.vec[r]);
      }
      q[*hit] += Polynomial<K>::monomial(ring_, c, u);
    }
    return q;
  }

  std::vector<FrameElement<K>> next_level(const std::vector<FrameElement<K>>& level,
                                          const std::vector<Monomial>& prev_totals) const {
    std::vector<std::vector<std::size_t>> by_comp(prev_totals.size());
    for (std::size_t e = 0; e < level.size(); ++e) by_comp[level[e].comp].push_back(e);
    std::vector<Monomial> totals;
    for (const auto& e : level) totals.push_back(e.total);

    std::vector<FrameElement<K>> out;
    for (std::size_t i = 0; i < level.size(); ++i) {
      std::vector<std::pair<std::size_t, Monomial>> cand;
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (level[j].comp != level[i].comp) continue;
        cand.emplace_back(j, lcm(level[i].mono, level[j].mono) / level[i].mono);
      }
      for (std::size_t a = 0; a < cand.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < cand.size() && minimal; ++b) {
          if (b == a || !cand[b].second.divides(cand[a].second)) continue;
          if (cand[b].second != cand[a].second || b < a) minimal = false;
        }
        if (!minimal) continue;
        const std::size_t j = cand[a].first;
        const Monomial& ui = cand[a].second;
        const Monomial uj = (ui * level[i].mono) / level[j].mono;
        std::vector<Polynomial<K>> s(prev_totals.size(), Polynomial<K>(ring_));
        for (std::size_t r = 0; r < s.size(); ++r) {
          s[r].add_scaled(ring_->one(), ui, level[i].vec[r]);
          s[r].add_scaled(-ring_->one(), uj, level[j].vec[r]);
        }
        auto q = reduce_to_zero(std::move(s), level, by_comp, prev_totals);
        FrameElement<K> el;
        el.vec.assign(level.size(), Polynomial<K>(ring_));
        for (std::size_t e = 0; e < level.size(); ++e) el.vec[e] = -q[e];
        el.vec[i] += Polynomial<K>::monomial(ring_, ring_->one(), ui);
        el.vec[j] -= Polynomial<K>::monomial(ring_, ring_->one(), uj);
        el.comp = i;
        el.mono = ui;
        el.total = ui * level[i].total;
        out.push_back(std::move(el));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const FrameElement<K>& a, const FrameElement<K>& b) {
      if (a.comp != b.comp) return a.comp < b.comp;
      return lex_greater(a.mono, b.mono);
    });
    return out;
  }

 private:
  Ring<K> ring_;
  MonomialOrder order_;
};

template <class K>
bool is_unit(const Polynomial<K>& p) {
  return !p.is_zero() && p.is_constant();
}

template <class K>
void erase_row(ResolutionMap<K>& m, std::size_t r) {
  m.entries.erase(m.entries.begin() + static_cast<std::ptrdiff_t>(r));
  m.row_degrees.erase(m.row_degrees.begin() + static_cast<std::ptrdiff_t>(r));
}

template <class K>
void erase_col(ResolutionMap<K>& m, std::size_t c) {
  for (auto& row : m.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  m.col_degrees.erase(m.col_degrees.begin() + static_cast<std::ptrdiff_t>(c));
}

}  // namespace

template <class K>
std::vector<int> FreeResolution<K>::degrees(std::size_t i) const {
  if (i == 0) return {0};
  if (i > maps.size()) return {};
  return maps[i - 1].col_degrees;
}

template <class K>
FreeResolution<K> schreyer_resolution(const Ideal<K>& I) {
  FreeResolution<K> F;
  F.ring = I.ring();
  if (I.is_zero()) return F;
  const auto gb = buchberger(I);
  if (gb.is_unit_ideal()) throw std::invalid_argument("free resolution of the unit ideal");
  const auto& ring = gb.ring();

  std::vector<FrameElement<K>> level;
  for (const auto& g : gb.elements()) {
    FrameElement<K> el;
    el.vec = {g};
    el.comp = 0;
    el.mono = g.leading_monomial();
    el.total = el.mono;
    level.push_back(std::move(el));
  }
  std::stable_sort(level.begin(), level.end(),
                   [](const FrameElement<K>& a, const FrameElement<K>& b) { return lex_greater(a.mono, b.mono); });
  std::vector<Monomial> prev_totals = {Monomial(ring->nvars())};
  std::vector<int> prev_degrees = {0};

  Frame<K> frame(ring);
  const std::size_t cap = ring->nvars() + 2;
  while (!level.empty()) {
    if (F.maps.size() > cap) throw std::logic_error("Schreyer frame longer than expected");
    ResolutionMap<K> d;
    d.row_degrees = prev_degrees;
    d.entries.assign(prev_degrees.size(), std::vector<Polynomial<K>>(level.size(), Polynomial<K>(ring)));
    for (std::size_t c = 0; c < level.size(); ++c) {
      d.col_degrees.push_back(static_cast<int>(level[c].total.degree()));
      for (std::size_t r = 0; r < prev_degrees.size(); ++r) d.entries[r][c] = level[c].vec[r];
    }
    auto next = frame.next_level(level, prev_totals);
    prev_degrees = d.col_degrees;
    prev_totals.clear();
    for (const auto& e : level) prev_totals.push_back(e.total);
    F.maps.push_back(std::move(d));
    level = std::move(next);
  }
  return F;
}

template <class K>
FreeResolution<K> minimalize(FreeResolution<K> F) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t L = 0; L < F.maps.size() && !changed; ++L) {
      auto& d = F.maps[L];
      for (std::size_t r = 0; r < d.rows() && !changed; ++r) {
        for (std::size_t c = 0; c < d.cols() && !changed; ++c) {
          if (!is_unit(d.entries[r][c])) continue;
          // d' = D - d[., c] u^{-1} d[r, .] on the remaining rows and columns
          const K u_inv = F.ring->one() / d.entries[r][c].leading_coefficient();
          for (std::size_t r2 = 0; r2 < d.rows(); ++r2) {
            if (r2 == r || d.entries[r2][c].is_zero()) continue;
            const Polynomial<K> a = d.entries[r2][c] * u_inv;
            for (std::size_t c2 = 0; c2 < d.cols(); ++c2) {
              if (c2 == c || d.entries[r][c2].is_zero()) continue;
              d.entries[r2][c2] -= a * d.entries[r][c2];
            }
          }
          erase_row(d, r);
          erase_col(d, c);
          if (L + 1 < F.maps.size()) erase_row(F.maps[L + 1], c);
          if (L > 0) erase_col(F.maps[L - 1], r);
          changed = true;
        }
      }
    }
  }
  while (!F.maps.empty() && F.maps.back().cols() == 0) F.maps.pop_back();
  return F;
}

template <class K>
FreeResolution<K> free_resolution(const Ideal<K>& I) {
  return minimalize(schreyer_resolution(I));
}

template <class K>
bool is_complex(const FreeResolution<K>& F) {
  for (std::size_t L = 0; L + 1 < F.maps.size(); ++L) {
    const auto& A = F.maps[L];
    const auto& B = F.maps[L + 1];
    if (A.cols() != B.rows()) return false;
    for (std::size_t r = 0; r < A.rows(); ++r) {
      for (std::size_t c = 0; c < B.cols(); ++c) {
        Polynomial<K> s(F.ring);
        for (std::size_t k = 0; k < A.cols(); ++k) {
          if (!A.entries[r][k].is_zero() && !B.entries[k][c].is_zero()) s += A.entries[r][k] * B.entries[k][c];
        }
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

template <class K>
bool is_minimal(const FreeResolution<K>& F) {
  for (const auto& d : F.maps) {
    for (const auto& row : d.entries) {
      if (std::any_of(row.begin(), row.end(), is_unit<K>)) return false;
    }
  }
  return true;
}

BettiDiagram::BettiDiagram(std::map<std::pair<int, int>, long> entries) {
  for (const auto& [k, v] : entries) {
    if (v < 0) throw std::invalid_argument("negative Betti number");
    if (v != 0) entries_[k] = v;
  }
}

BettiDiagram BettiDiagram::from_rows(const std::vector<std::vector<long>>& rows) {
  std::map<std::pair<int, int>, long> e;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] != 0) e[{static_cast<int>(c), static_cast<int>(c + r)}] = rows[r][c];
    }
  }
  return BettiDiagram(std::move(e));
}

long BettiDiagram::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiDiagram::max_index() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.first);
  return m;
}

int BettiDiagram::max_degree() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.second);
  return m;
}

std::vector<std::vector<long>> BettiDiagram::rows() const {
  int max_row = 0;
  for (const auto& [k, v] : entries_) max_row = std::max(max_row, k.second - k.first);
  std::vector<std::vector<long>> out(static_cast<std::size_t>(max_row + 1),
                                     std::vector<long>(static_cast<std::size_t>(max_index() + 1), 0));
  for (const auto& [k, v] : entries_) {
    out[static_cast<std::size_t>(k.second - k.first)][static_cast<std::size_t>(k.first)] = v;
  }
  return out;
}

BettiDiagram BettiDiagram::reversed() const {
  const int p = max_index(), D = max_degree();
  std::map<std::pair<int, int>, long> e;
  for (const auto& [k, v] : entries_) e[{p - k.first, D - k.second}] = v;
  return BettiDiagram(std::move(e));
}

IntPoly BettiDiagram::alternating_sums() const {
  IntPoly out(static_cast<std::size_t>(max_degree() + 1), mpz_class(0));
  for (const auto& [k, v] : entries_) out[static_cast<std::size_t>(k.second)] += (k.first % 2 == 0 ? v : -v);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string BettiDiagram::display() const {
  std::ostringstream os;
  for (const auto& row : rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      if (row[c] == 0) {
        os << '-';
      } else {
        os << row[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

template <class K>
BettiDiagram betti_diagram(const FreeResolution<K>& F) {
  std::map<std::pair<int, int>, long> e;
  e[{0, 0}] = 1;
  for (std::size_t i = 1; i <= F.maps.size(); ++i) {
    for (int d : F.degrees(i)) e[{static_cast<int>(i), d}] += 1;
  }
  return BettiDiagram(std::move(e));
}

template <class K>
BettiDiagram betti_diagram(const Ideal<K>& I) {
  return betti_diagram(free_resolution(I));
}

#define CANONLAB_INSTANTIATE(K)                                               \
  template struct FreeResolution<K>;                                          \
  template FreeResolution<K> schreyer_resolution<K>(const Ideal<K>&);         \
  template FreeResolution<K> minimalize<K>(FreeResolution<K>);                \
  template FreeResolution<K> free_resolution<K>(const Ideal<K>&);             \
  template bool is_complex<K>(const FreeResolution<K>&);                      \
  template bool is_minimal<K>(const FreeResolution<K>&);                      \
  template BettiDiagram betti_diagram<K>(const FreeResolution<K>&);           \
  template BettiDiagram betti_diagram<K>(const Ideal<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
